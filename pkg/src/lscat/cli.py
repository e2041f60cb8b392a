"""Command-line front end.

Commands: classify, punctured, ganea, attach, hopf2, bar-check.
Expressions for alpha/beta use the grammar

    expr ::= term ('*' term)*
    term ::= name '(' arg (',' int)? ')' | name | 'deg(' int ')' | 'iota(' int ')'
    arg  ::= int | 'p' | <int>'p'        # 2p etc., needs --p

Family terms like alpha1(3) resolve to catalog instances; the prime comes
from the second argument, from --p, or by dimension chaining when exactly
one instance fits.  Exit codes: 0 decided verdict, 2 undecided (tri-state
unknown or a range outside the table's own conditional cells), 1 error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from itertools import product

from . import barcomplex
from .catalog import Catalog, default_catalog, load_facts_path
from .engine import (
    BundleSpec,
    CatReport,
    Degree,
    attach_along,
    bounds,
    classify,
    ganea_check,
    hopf2_contains_zero,
    hopf2_representative,
    punctured_equal,
)
from .errors import (
    DimensionMismatch,
    LscatError,
    MissingParameter,
    ParseError,
    UnknownGenerator,
)
from .words import CompositionClass, TriState, identity

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNDECIDED = 2

FACTS_ENV = "LSCAT_FACTS"

_TERM_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\(([^()]*)\))?$")
_FAMILY_RE = re.compile(r"^(?P<family>[A-Za-z_][A-Za-z0-9_]*?)_(?P<n>\d+)_p(?P<p>\d+)$")


def _eval_arg(text: str, p: int | None, pos: int) -> int:
    """An integer literal or a p-multiple like '2p'."""
    text = text.strip()
    if re.fullmatch(r"-?\d+", text):
        return int(text)
    m = re.fullmatch(r"(\d*)p", text)
    if m:
        if p is None:
            raise MissingParameter(f"term {pos}: '{text}' needs --p")
        return (int(m.group(1)) if m.group(1) else 1) * p
    raise ParseError(f"term {pos}: cannot read argument '{text}'")


def _term_candidates(name: str, args: list[str], p: int | None, pos: int,
                     cat: Catalog) -> list[str | None]:
    """Catalog names a term may resolve to (None marks an elided identity)."""
    if not args:  # bare name: literal catalog identifier
        if name not in cat.generators:
            raise UnknownGenerator(f"term {pos}: undeclared generator '{name}'")
        return [name]
    first = _eval_arg(args[0], p, pos)
    explicit_p = _eval_arg(args[1], p, pos) if len(args) > 1 else p
    for attempt in (
        f"{name}_{first}",
        f"{name}_{first}_p{explicit_p}" if explicit_p is not None else None,
    ):
        if attempt is not None and attempt in cat.generators:
            return [attempt]
    # family instances: any declared <name>_<first>_p<q>
    matches = sorted(
        gname for gname in cat.generators
        if (m := _FAMILY_RE.match(gname))
        and m.group("family") == name and int(m.group("n")) == first
        and (explicit_p is None or int(m.group("p")) == explicit_p)
    )
    if not matches:
        raise UnknownGenerator(
            f"term {pos}: no catalog generator matches {name}({', '.join(args)})"
        )
    return matches


def parse_alpha(expr: str, p: int | None = None,
                cat: Catalog | None = None) -> Degree | CompositionClass:
    """Parse an alpha expression into a degree or a composition word.

    'deg(d)' must stand alone.  Family terms without an explicit prime are
    resolved by dimension chaining; if several instances fit, the choice is
    ambiguous and --p is required.
    """
    cat = cat or default_catalog()
    raw_terms = [t.strip() for t in expr.split("*")]
    if any(not t for t in raw_terms):
        raise ParseError(f"empty term in '{expr}'")
    parsed = []
    for pos, text in enumerate(raw_terms, start=1):
        m = _TERM_RE.match(text)
        if not m:
            raise ParseError(f"term {pos}: cannot parse '{text}'")
        name, argtext = m.group(1), m.group(2)
        args = [a for a in (argtext.split(",") if argtext else []) if a.strip()]
        parsed.append((name, args, pos))

    if any(name == "deg" for name, _, _ in parsed):
        if len(parsed) != 1:
            raise ParseError("deg(d) cannot be composed with other terms")
        name, args, pos = parsed[0]
        if len(args) != 1:
            raise ParseError("deg takes exactly one integer")
        return Degree(_eval_arg(args[0], p, pos))

    candidates: list[list[str | None]] = []
    identities: list[int] = []
    for name, args, pos in parsed:
        if name == "iota":
            k = _eval_arg(args[0], p, pos) if args else None
            if k is None or k < 1:
                raise ParseError(f"term {pos}: iota needs a positive dimension")
            identities.append(k)
            candidates.append([None])
        else:
            candidates.append(_term_candidates(name, args, p, pos, cat))

    # choose one instance per term so that dimensions chain
    def chains(assignment: tuple[str | None, ...]) -> bool:
        dims = []
        for picked, (name, args, pos) in zip(assignment, parsed):
            if picked is None:
                k = _eval_arg(args[0], p, pos)
                dims.append((k, k))
            else:
                gen = cat.generators[picked]
                dims.append((gen.dom, gen.cod))
        return all(right[1] == left[0] for left, right in zip(dims, dims[1:]))

    valid = [a for a in product(*candidates) if chains(a)]
    if not valid:
        if all(len(c) == 1 for c in candidates):
            # single assignment, so the failure is a genuine chaining error
            assignment = tuple(c[0] for c in candidates)
            _raise_chain_error(assignment, parsed, cat, p)
        raise DimensionMismatch(
            f"no choice of family instances makes '{expr}' chain; "
            "pass --p to pin the prime"
        )
    words = {tuple(n for n in a if n is not None) for a in valid}
    if len(words) > 1:
        raise MissingParameter(
            f"'{expr}' is ambiguous between instances "
            f"{sorted('*'.join(w) for w in words)}; pass --p"
        )
    word = words.pop()
    if not word:
        return identity(identities[0])
    return cat.word_class(word)


def _raise_chain_error(assignment, parsed, cat, p):
    prev_dom = None
    for picked, (name, args, pos) in zip(assignment, parsed):
        if picked is None:
            k = _eval_arg(args[0], p, pos)
            dom = cod = k
        else:
            gen = cat.generators[picked]
            dom, cod = gen.dom, gen.cod
        if prev_dom is not None and cod != prev_dom:
            raise DimensionMismatch(
                f"term {pos} ({picked or 'iota'}) lands in S^{cod} but "
                f"term {pos - 1} starts at S^{prev_dom}"
            )
        prev_dom = dom
    raise DimensionMismatch("expression does not chain")


def parse_word(expr: str, p: int | None, cat: Catalog) -> CompositionClass:
    out = parse_alpha(expr, p, cat)
    if isinstance(out, Degree):
        raise ParseError("expected a composition word, got deg(...)")
    return out


# -- commands -----------------------------------------------------------------


def _tri(v: TriState) -> str:
    return v.value


def _tri_bool(v: TriState) -> str:
    return {"nonzero": "true", "zero": "false", "unknown": "unknown"}[v.value]


def _load_catalog(args) -> Catalog:
    path = args.facts or os.environ.get(FACTS_ENV)
    if path:
        return load_facts_path(path)
    return default_catalog()


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "structured":
        print(json.dumps(payload, sort_keys=True, ensure_ascii=True))
    else:
        for line in text_lines:
            print(line)


def _spec_from_args(args, cat: Catalog) -> BundleSpec:
    alpha = parse_alpha(args.alpha, args.p, cat)
    return BundleSpec(r=args.r, t=args.t, alpha=alpha)


def _cmd_classify(args) -> int:
    cat = _load_catalog(args)
    spec = _spec_from_args(args, cat)
    report = classify(cat, spec, n=args.n)
    payload = {"command": "classify", "facts_digest": cat.source_digest}
    payload.update(report.to_json())
    _emit(args, payload, [report.to_text()])
    return EXIT_OK if report.decided else EXIT_UNDECIDED


def _cmd_punctured(args) -> int:
    cat = _load_catalog(args)
    spec = _spec_from_args(args, cat)
    verdict = punctured_equal(cat, spec)
    answer = _tri_bool(verdict)
    payload = {"command": "punctured", "equal": answer,
               "facts_digest": cat.source_digest}
    _emit(args, payload, [f"cat(E minus point) = cat(E): {answer}"])
    return EXIT_OK if verdict is not TriState.UNKNOWN else EXIT_UNDECIDED


def _cmd_ganea(args) -> int:
    cat = _load_catalog(args)
    spec = _spec_from_args(args, cat)
    report = ganea_check(cat, spec)
    answer = _tri_bool(report.is_counterexample)
    payload = {"command": "ganea", "counterexample": answer,
               "minimal_n": report.minimal_n, "facts_digest": cat.source_digest}
    lines = [f"counterexample to cat(M x S^n) = cat(M) + 1: {answer}"]
    if report.minimal_n is not None:
        lines.append(f"minimal certified n: {report.minimal_n}")
    _emit(args, payload, lines)
    return EXIT_OK if report.is_counterexample is not TriState.UNKNOWN else EXIT_UNDECIDED


def _cmd_attach(args) -> int:
    cat = _load_catalog(args)
    spec = _spec_from_args(args, cat)
    beta = parse_word(args.beta, args.p, cat)
    verdict = attach_along(cat, spec, beta)
    cat_x = {"nonzero": "3", "zero": "2", "unknown": "3 or 2"}[verdict.value]
    payload = {"command": "attach", "composite": _tri(verdict), "catX": cat_x,
               "facts_digest": cat.source_digest}
    _emit(args, payload, [f"S^r H1(alpha) o beta: {_tri(verdict)}", f"cat(X(beta)) = {cat_x}"])
    return EXIT_OK if verdict is not TriState.UNKNOWN else EXIT_UNDECIDED


def _cmd_hopf2(args) -> int:
    cat = _load_catalog(args)
    spec = _spec_from_args(args, cat)
    verdict = hopf2_contains_zero(cat, spec)
    rep = hopf2_representative(cat, spec)
    contains = {"zero": "true", "nonzero": "false", "unknown": "unknown"}[verdict.value]
    payload = {"command": "hopf2", "contains_zero": contains,
               "representative": rep.text, "facts_digest": cat.source_digest}
    _emit(args, payload, [
        f"top-cell Hopf set contains zero: {contains}",
        f"representative: {rep.text}",
    ])
    return EXIT_OK if verdict is not TriState.UNKNOWN else EXIT_UNDECIDED


def _cmd_bar_check(args) -> int:
    radii = [args.r] if args.r is not None else [2, 3, 4]
    results = {r: barcomplex.iso_check(args.degree_bound, r=r) for r in radii}
    payload = {"command": "bar-check", "degree_bound": args.degree_bound,
               "iso": {str(r): results[r] for r in radii}}
    lines = [
        f"quotient differential bijective up to degree {args.degree_bound}, "
        f"r={r}: {'yes' if ok else 'NO'}"
        for r, ok in results.items()
    ]
    if args.dump_matrices:
        for total in range(3, args.dump_matrices + 1):
            lines.append(barcomplex.differential_matrix_text(3, total, r=radii[0]))
    _emit(args, payload, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lscat",
        description="L-S category oracle for sphere bundles over spheres",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_bundle=True):
        p.add_argument("--facts", help=f"fact file path (default: ${FACTS_ENV} or built-in)")
        p.add_argument("--format", choices=("text", "structured"), default="text")
        p.add_argument("--p", type=int, help="prime for parameterized families")
        if needs_bundle:
            p.add_argument("--r", type=int, required=True, help="fibre sphere dimension")
            p.add_argument("--t", type=int, required=True, help="base sphere dimension minus 1")
            p.add_argument("--alpha", required=True, help="attaching class expression")

    p_classify = sub.add_parser("classify", help="all four category values")
    common(p_classify)
    p_classify.add_argument("--n", type=int, help="sphere factor for the product columns")
    p_classify.set_defaults(func=_cmd_classify)

    p_punctured = sub.add_parser("punctured", help="category of the punctured total space")
    common(p_punctured)
    p_punctured.set_defaults(func=_cmd_punctured)

    p_ganea = sub.add_parser("ganea", help="product counterexample detection")
    common(p_ganea)
    p_ganea.set_defaults(func=_cmd_ganea)

    p_attach = sub.add_parser("attach", help="category after a co-H attachment")
    common(p_attach)
    p_attach.add_argument("--beta", required=True, help="co-H attachment expression")
    p_attach.set_defaults(func=_cmd_attach)

    p_hopf2 = sub.add_parser("hopf2", help="top-cell Hopf criterion for cat(E) = 2")
    common(p_hopf2)
    p_hopf2.set_defaults(func=_cmd_hopf2)

    p_bar = sub.add_parser("bar-check", help="verify the bar differential bijection")
    common(p_bar, needs_bundle=False)
    p_bar.add_argument("--r", type=int, help="sphere parameter (default: 2, 3 and 4)")
    p_bar.add_argument("--degree-bound", type=int, default=40)
    p_bar.add_argument("--dump-matrices", type=int, default=0, metavar="MAX_SUM",
                       help="also print differential matrices up to this exponent sum")
    p_bar.set_defaults(func=_cmd_bar_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LscatError as exc:
        kind = type(exc).__name__
        if args.format == "structured":
            print(json.dumps({"error": f"{kind}: {exc}"}, sort_keys=True, ensure_ascii=True))
        else:
            print(f"error: {kind}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
