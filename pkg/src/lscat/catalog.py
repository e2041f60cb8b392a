"""Fact catalog: generators of homotopy groups of spheres and vanishing facts.

The catalog is loaded from a line-oriented text file (UTF-8, ``#`` starts a
comment) and is immutable afterwards.  Grammar::

    gen <name> dom=<k> cod=<l> [susp_of=<name>] [h1=<word>|h1=0|h1=iota]
    fact zero    <word> susp=<j>        # j suspensions kill the word
    fact nonzero <word> susp=<j|stable> # the word survives j suspensions

    <word> ::= <name> ('*' <name>)*     # outermost factor first; the source
                                        # of factor i is the target of factor i+1

Facts are closed under the monotone rules: once a word suspends to zero it
stays zero under further suspension, and a word nonzero after j suspensions
is nonzero after fewer.  ``susp=stable`` on a nonzero fact asserts the word
survives every suspension.  The linter rejects any file where the two
closures overlap, where a referenced name is undeclared, or where declared
dimensions do not chain.

Facts are statements about a word at a suspension level; nothing is ever
derived beyond the closure above.  In particular no composition relations,
sign conventions or group structure are encoded: every query the rest of
the package asks is a vanishing question, which is sign-independent.
"""

from __future__ import annotations

import hashlib
import io
import math
from dataclasses import dataclass
from importlib import resources

from .errors import ConsistencyError, DimensionMismatch, ParseError, UnknownGenerator
from .words import CompositionClass, TriState, identity

DEFAULT_FACTS_NAME = "facts.toda"

# Sentinel values for GeneratorFact.h1 (otherwise a '*'-joined word).
H1_ZERO = "0"
H1_IOTA = "iota"


@dataclass(frozen=True)
class GeneratorFact:
    """One named generator S^dom -> S^cod with optional declared structure.

    `susp_of` names the generator this one is the single suspension of.
    `h1` is the declared first Hopf invariant: "0", "iota" (the identity
    of S^{2*cod-1}), or a word; None when nothing is declared.
    """

    name: str
    dom: int
    cod: int
    susp_of: str | None = None
    h1: str | None = None
    line: int = 0


@dataclass(frozen=True)
class VanishingFact:
    """Sigma^susp word == 0 (kind "zero") or != 0 (kind "nonzero").

    susp is None only for kind "nonzero" and means "at every suspension".
    """

    word: tuple[str, ...]
    kind: str  # "zero" | "nonzero"
    susp: int | None
    line: int = 0

    def sort_key(self):
        return (self.word, self.kind, -1 if self.susp is None else self.susp)


class Catalog:
    """Immutable, validated fact catalog.

    Use :func:`load_facts` (or :func:`default_catalog`) to build one.
    """

    def __init__(
        self,
        generators: dict[str, GeneratorFact],
        facts: list[VanishingFact],
        source_digest: str,
        source_name: str = DEFAULT_FACTS_NAME,
    ):
        self.generators = dict(generators)
        self.facts = list(facts)
        self.source_digest = source_digest
        self.source_name = source_name
        # Closure maps: min suspension known zero / max suspension known nonzero.
        self._min_zero: dict[tuple[str, ...], tuple[int, int]] = {}
        self._max_nonzero: dict[tuple[str, ...], tuple[float, int]] = {}
        for fact in self.facts:
            if fact.kind == "zero":
                cur = self._min_zero.get(fact.word)
                if cur is None or fact.susp < cur[0]:
                    self._min_zero[fact.word] = (fact.susp, fact.line)
            else:
                level = math.inf if fact.susp is None else fact.susp
                cur = self._max_nonzero.get(fact.word)
                if cur is None or level > cur[0]:
                    self._max_nonzero[fact.word] = (level, fact.line)
        self._lint()

    # -- validation ---------------------------------------------------------

    def _lint(self) -> None:
        for gen in self.generators.values():
            if not (gen.dom > gen.cod >= 1):
                raise ConsistencyError(
                    f"generator {gen.name} needs dom > cod >= 1, got {gen.dom}->{gen.cod}"
                    f" (line {gen.line})"
                )
            if gen.susp_of is not None:
                parent = self.generators.get(gen.susp_of)
                if parent is None:
                    raise ConsistencyError(
                        f"generator {gen.name}: susp_of references undeclared "
                        f"'{gen.susp_of}' (line {gen.line})"
                    )
                if gen.dom != parent.dom + 1 or gen.cod != parent.cod + 1:
                    raise ConsistencyError(
                        f"generator {gen.name}: dimensions do not match one suspension "
                        f"of {parent.name} (line {gen.line})"
                    )
                if gen.h1 not in (None, H1_ZERO):
                    raise ConsistencyError(
                        f"generator {gen.name}: a declared suspension must have h1=0 "
                        f"(line {gen.line})"
                    )
            if gen.h1 is not None and gen.h1 not in (H1_ZERO, H1_IOTA):
                word = tuple(gen.h1.split("*"))
                try:
                    dom, cod = self.word_dims(word)
                except (UnknownGenerator, DimensionMismatch) as exc:
                    raise ConsistencyError(
                        f"generator {gen.name}: bad h1 word (line {gen.line}): {exc}"
                    ) from exc
                if dom != gen.dom or cod != 2 * gen.cod - 1:
                    raise ConsistencyError(
                        f"generator {gen.name}: declared h1 must map "
                        f"S^{gen.dom} -> S^{2 * gen.cod - 1}, got S^{dom} -> S^{cod} "
                        f"(line {gen.line})"
                    )
            if gen.h1 == H1_IOTA and gen.dom != 2 * gen.cod - 1:
                raise ConsistencyError(
                    f"generator {gen.name}: h1=iota requires dom == 2*cod - 1 "
                    f"(line {gen.line})"
                )
        for fact in self.facts:
            try:
                self.word_dims(fact.word)
            except (UnknownGenerator, DimensionMismatch) as exc:
                raise ConsistencyError(f"bad fact word (line {fact.line}): {exc}") from exc
        for word, (jz, zline) in self._min_zero.items():
            nz = self._max_nonzero.get(word)
            if nz is not None and jz <= nz[0]:
                raise ConsistencyError(
                    f"conflicting facts for {'*'.join(word)}: zero after {jz} suspensions "
                    f"(line {zline}) but nonzero after {nz[0]} (line {nz[1]})"
                )

    # -- word helpers -------------------------------------------------------

    def word_dims(self, names: tuple[str, ...], susp: int = 0) -> tuple[int, int]:
        """Effective (dom, cod) of a word, validating names and chaining."""
        if not names:
            raise DimensionMismatch("empty word has no intrinsic dimensions")
        gens = []
        for name in names:
            gen = self.generators.get(name)
            if gen is None:
                raise UnknownGenerator(f"undeclared generator '{name}'")
            gens.append(gen)
        for left, right in zip(gens, gens[1:]):
            if right.cod != left.dom:
                raise DimensionMismatch(
                    f"word does not chain: {right.name} lands in S^{right.cod} "
                    f"but {left.name} starts at S^{left.dom}"
                )
        return gens[-1].dom + susp, gens[0].cod + susp

    def word_class(self, names, susp: int = 0) -> CompositionClass:
        """Build a validated CompositionClass from generator names."""
        names = tuple(names)
        dom, cod = self.word_dims(names, susp)
        return CompositionClass(dom=dom, cod=cod, word=names, susp=susp)

    def generator_class(self, name: str) -> CompositionClass:
        return self.word_class((name,))

    def h1_declaration(self, name: str):
        """Resolve a generator's declared first Hopf invariant.

        Returns None (nothing declared), the string H1_ZERO, or a
        CompositionClass.  h1=iota resolves to the identity of S^{2*cod-1}.
        """
        gen = self.generators.get(name)
        if gen is None:
            raise UnknownGenerator(f"undeclared generator '{name}'")
        if gen.h1 is None:
            return None
        if gen.h1 == H1_ZERO:
            return H1_ZERO
        if gen.h1 == H1_IOTA:
            return identity(2 * gen.cod - 1)
        return self.word_class(tuple(gen.h1.split("*")))

    # -- vanishing queries ----------------------------------------------------

    def explain_vanishing(self, word: CompositionClass, j: int = 0) -> tuple[TriState, str]:
        """Like query_vanishing, plus the citation that justifies the verdict."""
        if word.word:
            self.word_dims(word.word)
        level = word.susp + j
        zero = self._min_zero.get(word.word)
        if zero is not None and level >= zero[0]:
            return TriState.ZERO, f"{self.source_name}:{zero[1]}"
        nonzero = self._max_nonzero.get(word.word)
        if nonzero is not None and level <= nonzero[0]:
            return TriState.NONZERO, f"{self.source_name}:{nonzero[1]}"
        return TriState.UNKNOWN, "rule:no-covering-fact"

    def min_zero_level(self, word: CompositionClass) -> int | None:
        """Least total suspension count at which the word is known to vanish."""
        zero = self._min_zero.get(word.word)
        if zero is None:
            return None
        return max(zero[0] - word.susp, 0)

    def stably_nonzero(self, word: CompositionClass) -> bool:
        nz = self._max_nonzero.get(word.word)
        return nz is not None and nz[0] == math.inf

    # -- serialization --------------------------------------------------------

    def dumps(self) -> str:
        """Canonical text form; reloading it yields an equal catalog."""
        lines = []
        for gen in sorted(self.generators.values(), key=lambda g: (g.cod, g.dom, g.name)):
            parts = [f"gen {gen.name} dom={gen.dom} cod={gen.cod}"]
            if gen.susp_of is not None:
                parts.append(f"susp_of={gen.susp_of}")
            if gen.h1 is not None:
                parts.append(f"h1={gen.h1}")
            lines.append(" ".join(parts))
        for fact in sorted(self.facts, key=VanishingFact.sort_key):
            susp = "stable" if fact.susp is None else str(fact.susp)
            lines.append(f"fact {fact.kind} {'*'.join(fact.word)} susp={susp}")
        return "\n".join(lines) + ("\n" if lines else "")

    @property
    def canonical_digest(self) -> str:
        return hashlib.sha256(self.dumps().encode("utf-8")).hexdigest()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Catalog):
            return NotImplemented
        strip = lambda g: (g.name, g.dom, g.cod, g.susp_of, g.h1)
        return (
            {n: strip(g) for n, g in self.generators.items()}
            == {n: strip(g) for n, g in other.generators.items()}
            and sorted((f.word, f.kind, f.susp) for f in self.facts)
            == sorted((f.word, f.kind, f.susp) for f in other.facts)
        )

    def __repr__(self) -> str:
        return (
            f"Catalog({len(self.generators)} generators, {len(self.facts)} facts, "
            f"digest {self.source_digest[:12]})"
        )


def query_vanishing(cat: Catalog, word: CompositionClass, j: int) -> TriState:
    """Does the word vanish after j further suspensions?

    Pure fact lookup with monotone closure; never guesses.  ZERO when a zero
    fact covers the level from below, NONZERO when a nonzero fact covers it
    from above, UNKNOWN otherwise (including for identity words, which carry
    no facts).
    """
    if j < 0:
        raise ValueError("suspension count must be >= 0")
    return cat.explain_vanishing(word, j)[0]


# -- parsing -------------------------------------------------------------------


def _parse_int(value: str, what: str, line_no: int) -> int:
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"expected integer for {what}, got '{value}'", line=line_no) from None


def _parse_kv(tokens: list[str], allowed: tuple[str, ...], line_no: int, text: str) -> dict:
    out = {}
    for token in tokens:
        if "=" not in token:
            raise ParseError(
                f"expected key=value, got '{token}'", line=line_no, col=text.find(token) + 1
            )
        key, value = token.split("=", 1)
        if key not in allowed:
            raise ParseError(
                f"unknown key '{key}'", line=line_no, col=text.find(token) + 1
            )
        if key in out:
            raise ParseError(f"duplicate key '{key}'", line=line_no)
        out[key] = value
    return out


def load_facts(source, source_name: str = DEFAULT_FACTS_NAME) -> Catalog:
    """Parse and validate a fact file from bytes, text, or a binary stream."""
    if isinstance(source, io.IOBase):
        source = source.read()
    if isinstance(source, str):
        raw = source.encode("utf-8")
    elif isinstance(source, (bytes, bytearray)):
        raw = bytes(source)
    else:
        raise TypeError(f"cannot load facts from {type(source).__name__}")
    digest = hashlib.sha256(raw).hexdigest()
    text = raw.decode("utf-8")

    generators: dict[str, GeneratorFact] = {}
    facts: list[VanishingFact] = []
    for line_no, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "gen":
            if len(tokens) < 2:
                raise ParseError("gen needs a name", line=line_no)
            name = tokens[1]
            if "=" in name:
                raise ParseError(f"gen needs a name before '{name}'", line=line_no)
            if name in generators:
                raise ParseError(f"duplicate generator '{name}'", line=line_no)
            kv = _parse_kv(tokens[2:], ("dom", "cod", "susp_of", "h1"), line_no, raw_line)
            if "dom" not in kv or "cod" not in kv:
                raise ParseError(f"gen {name} needs dom= and cod=", line=line_no)
            generators[name] = GeneratorFact(
                name=name,
                dom=_parse_int(kv["dom"], "dom", line_no),
                cod=_parse_int(kv["cod"], "cod", line_no),
                susp_of=kv.get("susp_of"),
                h1=kv.get("h1"),
                line=line_no,
            )
        elif kind == "fact":
            if len(tokens) != 4 or tokens[1] not in ("zero", "nonzero"):
                raise ParseError(
                    "fact lines look like: fact zero|nonzero <word> susp=<j>", line=line_no
                )
            word = tuple(tokens[2].split("*"))
            if any(not part for part in word):
                raise ParseError(f"malformed word '{tokens[2]}'", line=line_no,
                                 col=raw_line.find(tokens[2]) + 1)
            kv = _parse_kv(tokens[3:], ("susp",), line_no, raw_line)
            if "susp" not in kv:
                raise ParseError("fact needs susp=<j>", line=line_no)
            if kv["susp"] == "stable":
                if tokens[1] != "nonzero":
                    raise ParseError("susp=stable only applies to nonzero facts", line=line_no)
                susp: int | None = None
            else:
                susp = _parse_int(kv["susp"], "susp", line_no)
                if susp < 0:
                    raise ParseError("susp must be >= 0", line=line_no)
            facts.append(VanishingFact(word=word, kind=tokens[1], susp=susp, line=line_no))
        else:
            raise ParseError(f"unknown directive '{kind}'", line=line_no, col=1)

    return Catalog(generators, facts, digest, source_name)


def load_facts_path(path) -> Catalog:
    from pathlib import Path

    path = Path(path)
    return load_facts(path.read_bytes(), source_name=path.name)


_default: Catalog | None = None


def default_catalog() -> Catalog:
    """The catalog shipped with the package (cached; treat as read-only)."""
    global _default
    if _default is None:
        data = resources.files("lscat").joinpath("data", DEFAULT_FACTS_NAME).read_bytes()
        _default = load_facts(data, source_name=DEFAULT_FACTS_NAME)
    return _default
