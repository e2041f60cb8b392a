"""L-S category classification of sphere bundles over spheres.

A bundle with fibre S^r over S^{t+1} is described by the restriction
``alpha`` of its characteristic map to the fibre sphere, either a degree
(an integer, for the self-map and circle-fibre cases) or a composition
word S^t -> S^r.  Writing Q for the two-cell complex attached along alpha
and E for the closed total space (Q plus a top cell), the classifier
reports the L-S categories of Q, E, Q x S^n and E x S^n by selecting the
unique matching row of the following table and evaluating its conditions
against the fact catalog:

    r    t      alpha / conditions           QxS^n   Q   E   ExS^n
    ---- ------ ---------------------------- ------- --- --- -------
    r=1  t=0                                 2       1   2   3
         t=1    alpha = +-1                  1       0   1   2
         t=1    alpha = 0                    2       1   2   3
         t=1    alpha != 0, +-1              3       2   3   4
         t>1                                 2       1   2   3
    r>1  t<r                                 2       1   2   3
         t=r    alpha = +-identity           1       0   1   2
         t=r    otherwise                    2       1   2   3
         t>r    H1(alpha) = 0                2       1   2   3
         t>r    H1 != 0, S^r H1 = 0          (1)     2   2   3
         t>r    S^r H1 != 0                  (1)     2   3   (2)

Here H1 is the first Hopf invariant of alpha and S^j abbreviates j-fold
suspension.  The conditional product columns follow:

    (1) S^n H1(alpha) = 0      forces cat(Q x S^n) = 2;
        S^{n+1} H1(alpha) != 0 forces cat(Q x S^n) = 3.
    (2) S^{r+n} H1(alpha) = 0       forces cat(E x S^n) = 3;
        S^{r+n+1} h2(alpha) != 0    forces cat(E x S^n) = 4, where h2 is
        the second James-Hopf invariant, identified with H1 only when
        alpha is in the meta-stable range (dom <= 3*cod - 3).

When a condition is undecided by the catalog the cell stays a range with
the undecided predicate recorded, never a guess; when the Hopf invariant
itself is unknown, the verdicts span the candidate rows.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .algebra import (
    hopf_h1,
    is_coh,
    is_trivial,
    is_trivial_explained,
    level_state,
    stable_class,
)
from .catalog import Catalog
from .errors import DimensionMismatch, PreconditionError, SpecError
from .words import (
    CompositionClass,
    MaybeClass,
    TriState,
    UnknownClass,
    ZeroClass,
    compose,
    suspend,
)


@dataclass(frozen=True)
class Degree:
    """alpha = d * identity; the only classes expressible without a word."""

    d: int


@dataclass(frozen=True)
class BundleSpec:
    """An S^r-bundle over S^{t+1}, described by alpha = (characteristic map
    restricted to the fibre point) in pi_t(S^r)."""

    r: int
    t: int
    alpha: Degree | CompositionClass

    def validate(self) -> None:
        if self.r < 1 or self.t < 0:
            raise SpecError(f"need r >= 1 and t >= 0, got r={self.r}, t={self.t}")
        if isinstance(self.alpha, Degree):
            # d = 0 is the null class, available in every pi_t(S^r); any other
            # degree only names a class on the self-map sphere t = r.
            if self.alpha.d != 0 and self.t != self.r:
                raise SpecError(
                    f"alpha = degree {self.alpha.d} needs t == r "
                    f"(pi_{self.t}(S^{self.r}) has no such class)"
                )
        elif isinstance(self.alpha, CompositionClass):
            if self.alpha.dom != self.t or self.alpha.cod != self.r:
                raise SpecError(
                    f"alpha must map S^{self.t} -> S^{self.r}, "
                    f"got S^{self.alpha.dom} -> S^{self.alpha.cod}"
                )
        else:
            raise SpecError(f"alpha must be Degree or CompositionClass, got {type(self.alpha)}")

    @property
    def is_unit_degree(self) -> bool:
        if isinstance(self.alpha, Degree):
            return abs(self.alpha.d) == 1
        return self.alpha.is_identity  # the identity word is alpha = +1


@dataclass(frozen=True)
class CatValue:
    """An exact category value or a range with the undecided predicate.

    `footnote` marks cells whose value is conditional in the classification
    table itself ("(1)"/"(2)"); such cells may legitimately stay ranges.
    """

    lo: int
    hi: int
    predicate: str | None = None
    footnote: str | None = None

    @classmethod
    def exact(cls, v: int, footnote: str | None = None) -> "CatValue":
        return cls(lo=v, hi=v, footnote=footnote)

    @classmethod
    def undecided(cls, lo: int, hi: int, predicate: str, footnote: str | None = None) -> "CatValue":
        if not lo < hi:
            raise ValueError("range needs lo < hi")
        return cls(lo=lo, hi=hi, predicate=predicate, footnote=footnote)

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int:
        if not self.is_exact:
            raise ValueError(f"value of an undecided range {self.render()}")
        return self.lo

    def hull(self, other: "CatValue", predicate: str | None = None) -> "CatValue":
        lo, hi = min(self.lo, other.lo), max(self.hi, other.hi)
        if lo == hi:
            return CatValue.exact(lo, footnote=self.footnote or other.footnote)
        return CatValue(lo=lo, hi=hi,
                        predicate=predicate or self.predicate or other.predicate,
                        footnote=self.footnote or other.footnote)

    def render(self) -> str:
        if self.is_exact:
            return str(self.lo)
        return f"{self.lo} or {self.hi}"

    def to_json(self) -> dict:
        if self.is_exact:
            out: dict = {"exact": self.lo}
        else:
            out = {"range": [self.lo, self.hi]}
            if self.predicate:
                out["undecided"] = self.predicate
        if self.footnote:
            out["footnote"] = self.footnote
        return out


@dataclass(frozen=True)
class TraceLine:
    """One evaluated condition: what was asked, what the facts said, and the
    fact-file line or built-in rule that decided it."""

    condition: str
    state: str
    source: str

    def to_json(self) -> dict:
        return {"condition": self.condition, "state": self.state, "source": self.source}


@dataclass
class CatReport:
    """The four category values plus the selected row and evaluation trace."""

    row: str
    cat_Q: CatValue
    cat_E: CatValue
    cat_QxSn: CatValue
    cat_ExSn: CatValue
    n: int | None = None
    alpha_h1: MaybeClass | None = None
    trace: list[TraceLine] = field(default_factory=list)

    @property
    def decided(self) -> bool:
        """True when every cell the table states unconditionally is exact."""
        for cell in (self.cat_Q, self.cat_E, self.cat_QxSn, self.cat_ExSn):
            if not cell.is_exact and cell.footnote is None:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "row": self.row,
            "catQxSn": self.cat_QxSn.to_json(),
            "catQ": self.cat_Q.to_json(),
            "catE": self.cat_E.to_json(),
            "catExSn": self.cat_ExSn.to_json(),
            "n": self.n,
            "trace": [line.to_json() for line in self.trace],
        }

    def to_text(self) -> str:
        lines = [f"row: {self.row}"]
        n_label = f"S^{self.n}" if self.n is not None else "S^n"
        for label, cell in (
            (f"cat(Q x {n_label})", self.cat_QxSn),
            ("cat(Q)", self.cat_Q),
            ("cat(E)", self.cat_E),
            (f"cat(E x {n_label})", self.cat_ExSn),
        ):
            suffix = ""
            if cell.footnote:
                suffix += f"  {cell.footnote}"
            if cell.predicate:
                suffix += f"  [undecided: {cell.predicate}]"
            lines.append(f"{label:<14} = {cell.render()}{suffix}")
        if self.trace:
            lines.append("trace:")
            for entry in self.trace:
                lines.append(f"  {entry.condition}: {entry.state}  [{entry.source}]")
        return "\n".join(lines)


# Rows whose four values are unconditional, keyed by row identifier.
TABLE_EXACT: dict[str, tuple[int, int, int, int]] = {
    "r=1, t=0": (2, 1, 2, 3),
    "r=1, t=1, alpha=+-1": (1, 0, 1, 2),
    "r=1, t=1, alpha=0": (2, 1, 2, 3),
    "r=1, t=1, alpha!=0,+-1": (3, 2, 3, 4),
    "r=1, t>1": (2, 1, 2, 3),
    "r>1, t<r": (2, 1, 2, 3),
    "r>1, t=r, alpha=+-1": (1, 0, 1, 2),
    "r>1, t=r, alpha!=+-1": (2, 1, 2, 3),
    "r>1, t>r, H1=0": (2, 1, 2, 3),
}

ROW_SRH1_ZERO = "r>1, t>r, H1!=0, S^rH1=0"
ROW_SRH1_NONZERO = "r>1, t>r, S^rH1!=0"
ROW_H1_UNKNOWN = "r>1, t>r, H1 unknown"
ROW_SRH1_UNKNOWN = "r>1, t>r, H1!=0, S^rH1 unknown"


def _exact_report(row: str, n: int | None, trace: list[TraceLine],
                  h1: MaybeClass | None = None) -> CatReport:
    qxs, q, e, exs = TABLE_EXACT[row]
    source = f"table:{row}"
    trace = trace + [TraceLine("row selected", row, source)]
    return CatReport(
        row=row,
        cat_Q=CatValue.exact(q),
        cat_E=CatValue.exact(e),
        cat_QxSn=CatValue.exact(qxs),
        cat_ExSn=CatValue.exact(exs),
        n=n,
        alpha_h1=h1,
        trace=trace,
    )


def _resolve_h1(cat: Catalog, spec: BundleSpec, metastable_guard: bool,
                trace: list[TraceLine]) -> MaybeClass:
    """Hopf invariant of alpha for the t > r rows; Degree(0) is the null class."""
    if isinstance(spec.alpha, Degree):
        # validate() leaves only d == 0 here
        trace.append(TraceLine("H1(alpha)", "0", "rule:null-class"))
        return ZeroClass(dom=spec.t, cod=2 * spec.r - 1)
    h1 = hopf_h1(cat, spec.alpha, metastable_guard=metastable_guard)
    if isinstance(h1, ZeroClass):
        trace.append(TraceLine("H1(alpha)", "0", "rule:hopf-of-suspension"))
    elif isinstance(h1, UnknownClass):
        trace.append(TraceLine("H1(alpha)", "?", "rule:no-rewrite-applies"))
    else:
        trace.append(TraceLine("H1(alpha)", h1.render(), "rule:hopf-peel-leading-generator"))
    return h1


def _footnote1(cat: Catalog, h1: CompositionClass, n: int | None,
               trace: list[TraceLine]) -> CatValue:
    """cat(Q x S^n) on the conditional rows."""
    if n is not None:
        state, src = is_trivial_explained(cat, suspend(h1, n))
        trace.append(TraceLine(f"S^{n} H1(alpha) = 0", state.value, src))
        if state is TriState.ZERO:
            return CatValue.exact(2, footnote="(1)")
        state1, src1 = is_trivial_explained(cat, suspend(h1, n + 1))
        trace.append(TraceLine(f"S^{n + 1} H1(alpha) != 0", state1.value, src1))
        if state1 is TriState.NONZERO:
            return CatValue.exact(3, footnote="(1)")
        return CatValue.undecided(
            2, 3,
            predicate=f"S^{n} H1(alpha) = 0 forces 2; S^{n + 1} H1(alpha) != 0 forces 3",
            footnote="(1)",
        )
    # no n given: report the for-all-n verdict when the facts give one
    if level_state(cat, h1, 1) is TriState.ZERO:
        trace.append(TraceLine("S^n H1(alpha) = 0 for all n >= 1", "zero",
                               "rule:zero-is-stable"))
        return CatValue.exact(2, footnote="(1)")
    if stable_class(cat, h1) is TriState.NONZERO:
        trace.append(TraceLine("S^{n+1} H1(alpha) != 0 for all n", "nonzero",
                               "rule:stably-nonzero"))
        return CatValue.exact(3, footnote="(1)")
    return CatValue.undecided(
        2, 3, predicate="depends on n: S^n H1(alpha) = 0 forces 2; "
                        "S^{n+1} H1(alpha) != 0 forces 3",
        footnote="(1)",
    )


def _footnote2(cat: Catalog, spec: BundleSpec, h1: CompositionClass, n: int | None,
               metastable_guard: bool, trace: list[TraceLine]) -> CatValue:
    """cat(E x S^n) on the S^r H1 != 0 row."""
    r = spec.r
    alpha = spec.alpha
    h2_usable = (not metastable_guard) or (
        isinstance(alpha, CompositionClass) and alpha.dom <= 3 * alpha.cod - 3
    )
    if n is not None:
        state, src = is_trivial_explained(cat, suspend(h1, r + n))
        trace.append(TraceLine(f"S^{r + n} H1(alpha) = 0", state.value, src))
        if state is TriState.ZERO:
            return CatValue.exact(3, footnote="(2)")
        if h2_usable:
            state1, src1 = is_trivial_explained(cat, suspend(h1, r + n + 1))
            trace.append(TraceLine(f"S^{r + n + 1} h2(alpha) != 0", state1.value, src1))
            if state1 is TriState.NONZERO:
                return CatValue.exact(4, footnote="(2)")
        else:
            trace.append(TraceLine(
                "h2(alpha) branch", "skipped",
                "rule:alpha-outside-meta-stable-range"))
        return CatValue.undecided(
            3, 4,
            predicate=f"S^{r + n} H1(alpha) = 0 forces 3; "
                      f"S^{r + n + 1} h2(alpha) != 0 forces 4",
            footnote="(2)",
        )
    if level_state(cat, h1, r + 1) is TriState.ZERO:
        trace.append(TraceLine("S^(r+n) H1(alpha) = 0 for all n >= 1", "zero",
                               "rule:zero-is-stable"))
        return CatValue.exact(3, footnote="(2)")
    if h2_usable and stable_class(cat, h1) is TriState.NONZERO:
        trace.append(TraceLine("S^(r+n+1) h2(alpha) != 0 for all n", "nonzero",
                               "rule:stably-nonzero"))
        return CatValue.exact(4, footnote="(2)")
    return CatValue.undecided(
        3, 4, predicate="depends on n: S^(r+n) H1(alpha) = 0 forces 3; "
                        "S^(r+n+1) h2(alpha) != 0 forces 4",
        footnote="(2)",
    )


def classify(cat: Catalog, spec: BundleSpec, n: int | None = None, *,
             metastable_guard: bool = True) -> CatReport:
    """Select the table row for the bundle and evaluate its conditions.

    ``n`` picks the sphere factor for the product columns; without it those
    columns report the for-all-n verdict when one exists and an n-dependent
    range otherwise.
    """
    spec.validate()
    if n is not None and n < 1:
        raise SpecError("n must be >= 1")
    r, t = spec.r, spec.t
    trace: list[TraceLine] = []

    if r == 1:
        if t == 0:
            return _exact_report("r=1, t=0", n, trace)
        if t == 1:
            if not isinstance(spec.alpha, Degree):
                if spec.alpha.is_identity:
                    return _exact_report("r=1, t=1, alpha=+-1", n, trace)
                raise SpecError("for r = 1, t = 1 alpha is classified by its degree")
            d = spec.alpha.d
            if abs(d) == 1:
                return _exact_report("r=1, t=1, alpha=+-1", n, trace)
            if d == 0:
                return _exact_report("r=1, t=1, alpha=0", n, trace)
            return _exact_report("r=1, t=1, alpha!=0,+-1", n, trace)
        return _exact_report("r=1, t>1", n, trace)

    if t < r:
        return _exact_report("r>1, t<r", n, trace)
    if t == r:
        if spec.is_unit_degree:
            return _exact_report("r>1, t=r, alpha=+-1", n, trace)
        return _exact_report("r>1, t=r, alpha!=+-1", n, trace)

    # t > r: the rows branch on the Hopf invariant of alpha
    h1 = _resolve_h1(cat, spec, metastable_guard, trace)
    if isinstance(h1, ZeroClass):
        return _exact_report("r>1, t>r, H1=0", n, trace, h1=h1)

    if isinstance(h1, UnknownClass):
        trace.append(TraceLine("row selected", ROW_H1_UNKNOWN, "rule:span-candidate-rows"))
        return CatReport(
            row=ROW_H1_UNKNOWN,
            cat_Q=CatValue.undecided(1, 2, "H1(alpha) = 0 forces 1; H1(alpha) != 0 forces 2"),
            cat_E=CatValue.undecided(2, 3, "spans the H1 = 0 and H1 != 0 rows"),
            cat_QxSn=CatValue.undecided(2, 3, "spans the H1 = 0 and H1 != 0 rows"),
            cat_ExSn=CatValue.undecided(3, 4, "spans the H1 = 0 and H1 != 0 rows"),
            n=n,
            alpha_h1=h1,
            trace=trace,
        )

    nz, nz_src = is_trivial_explained(cat, h1)
    trace.append(TraceLine("H1(alpha) != 0", nz.value, nz_src))
    if nz is TriState.ZERO:
        return _exact_report("r>1, t>r, H1=0", n, trace, h1=h1)
    if nz is TriState.UNKNOWN:
        # span rows; the product columns can still collapse when a footnote
        # predicate agrees with the H1 = 0 row's value
        trace.append(TraceLine("row selected", ROW_H1_UNKNOWN, "rule:span-candidate-rows"))
        qxs = _footnote1(cat, h1, n, trace).hull(
            CatValue.exact(2), predicate="H1(alpha) vanishing undecided")
        exs = _merge_exsn(cat, spec, h1, n, metastable_guard, trace)
        return CatReport(
            row=ROW_H1_UNKNOWN,
            cat_Q=CatValue.undecided(1, 2, "H1(alpha) = 0 forces 1; H1(alpha) != 0 forces 2"),
            cat_E=CatValue.undecided(2, 3, "undecided between the candidate rows"),
            cat_QxSn=qxs,
            cat_ExSn=exs,
            n=n,
            alpha_h1=h1,
            trace=trace,
        )

    # H1(alpha) != 0: cat(Q) = 2; the remaining split is on S^r H1
    srh1, sr_src = is_trivial_explained(cat, suspend(h1, r))
    trace.append(TraceLine(f"S^{r} H1(alpha) = 0", srh1.value, sr_src))
    if srh1 is TriState.ZERO:
        row = ROW_SRH1_ZERO
        trace.append(TraceLine("row selected", row, f"table:{row}"))
        return CatReport(
            row=row,
            cat_Q=CatValue.exact(2),
            cat_E=CatValue.exact(2),
            cat_QxSn=_footnote1(cat, h1, n, trace),
            cat_ExSn=CatValue.exact(3),  # cat(E)=2 forces cat(E x S^n)=3 for all n
            n=n,
            alpha_h1=h1,
            trace=trace,
        )
    if srh1 is TriState.NONZERO:
        row = ROW_SRH1_NONZERO
        trace.append(TraceLine("row selected", row, f"table:{row}"))
        return CatReport(
            row=row,
            cat_Q=CatValue.exact(2),
            cat_E=CatValue.exact(3),
            cat_QxSn=_footnote1(cat, h1, n, trace),
            cat_ExSn=_footnote2(cat, spec, h1, n, metastable_guard, trace),
            n=n,
            alpha_h1=h1,
            trace=trace,
        )

    row = ROW_SRH1_UNKNOWN
    trace.append(TraceLine("row selected", row, "rule:span-candidate-rows"))
    return CatReport(
        row=row,
        cat_Q=CatValue.exact(2),
        cat_E=CatValue.undecided(2, 3, f"S^{r} H1(alpha) = 0 forces 2, != 0 forces 3"),
        cat_QxSn=_footnote1(cat, h1, n, trace),
        cat_ExSn=_merge_exsn(cat, spec, h1, n, metastable_guard, trace),
        n=n,
        alpha_h1=h1,
        trace=trace,
    )


def _merge_exsn(cat, spec, h1, n, metastable_guard, trace):
    """cat(E x S^n) hulled over the candidate rows when the row split is open.

    The rows not governed by the conditional column all give the value 3,
    so the hull can still collapse to 3 when the predicate does."""
    fn2 = _footnote2(cat, spec, h1, n, metastable_guard, trace)
    return fn2.hull(CatValue.exact(3), predicate=fn2.predicate)


# -- derived criteria ------------------------------------------------------------


def _require_t_gt_r_gt_1(spec: BundleSpec) -> None:
    spec.validate()
    if not (spec.t > spec.r > 1):
        raise PreconditionError(f"needs t > r > 1, got r={spec.r}, t={spec.t}")


def _decided_nonzero_h1(cat: Catalog, spec: BundleSpec,
                        metastable_guard: bool = True) -> CompositionClass:
    """H1(alpha) when it is decidedly nonzero; PreconditionError otherwise."""
    trace: list[TraceLine] = []
    h1 = _resolve_h1(cat, spec, metastable_guard, trace)
    if isinstance(h1, ZeroClass):
        raise PreconditionError("cat(Q) = 2 fails: H1(alpha) = 0")
    if isinstance(h1, UnknownClass):
        raise PreconditionError("cat(Q) = 2 not established: H1(alpha) is unknown")
    state = is_trivial(cat, h1)
    if state is TriState.ZERO:
        raise PreconditionError("cat(Q) = 2 fails: H1(alpha) = 0")
    if state is TriState.UNKNOWN:
        raise PreconditionError("cat(Q) = 2 not established: H1(alpha) vanishing undecided")
    return h1


def hopf2_contains_zero(cat: Catalog, spec: BundleSpec, *,
                        metastable_guard: bool = True) -> TriState:
    """Does the top-cell Hopf set contain zero (the cat(E) = 2 criterion)?

    Valid for t > r > 1 with cat(Q) = 2, i.e. H1(alpha) != 0; the verdict
    is exactly the vanishing of S^r H1(alpha).  ZERO means cat(E) = 2,
    NONZERO means cat(E) = 3.
    """
    _require_t_gt_r_gt_1(spec)
    h1 = _decided_nonzero_h1(cat, spec, metastable_guard)
    return is_trivial(cat, suspend(h1, spec.r))


@dataclass(frozen=True)
class Hopf2Representative:
    """Symbolic representative of the top-cell Hopf invariant, up to sign:
    the r-fold suspension of H1(alpha) pushed in along the bottom-cell
    inclusion of the join.  Report artifact only."""

    r: int
    h1: MaybeClass

    @property
    def text(self) -> str:
        return f"+-(i^*1)oS^{self.r}({self.h1.render()})"

    def __str__(self) -> str:
        return self.text


def hopf2_representative(cat: Catalog, spec: BundleSpec, *,
                         metastable_guard: bool = True) -> Hopf2Representative:
    """The symbolic expression for a representative of the top-cell Hopf set.

    Unknown H1 propagates into the expression; a derivably zero H1 is a
    precondition failure (cat(Q) would be 1, not 2).
    """
    _require_t_gt_r_gt_1(spec)
    trace: list[TraceLine] = []
    h1 = _resolve_h1(cat, spec, metastable_guard, trace)
    if isinstance(h1, ZeroClass) or (
        isinstance(h1, CompositionClass) and is_trivial(cat, h1) is TriState.ZERO
    ):
        raise PreconditionError("cat(Q) = 2 fails: H1(alpha) = 0")
    return Hopf2Representative(r=spec.r, h1=h1)


def punctured_equal(cat: Catalog, spec: BundleSpec, *,
                    metastable_guard: bool = True) -> TriState:
    """Does removing a point preserve the category of the total space?

    NONZERO means yes, ZERO means no, UNKNOWN when the facts cannot decide.
    Equality holds exactly when H1(alpha) != 0 and S^r H1(alpha) = 0.
    """
    _require_t_gt_r_gt_1(spec)
    trace: list[TraceLine] = []
    h1 = _resolve_h1(cat, spec, metastable_guard, trace)
    if isinstance(h1, ZeroClass):
        return TriState.ZERO  # first conjunct fails
    if isinstance(h1, UnknownClass):
        return TriState.UNKNOWN
    nz = is_trivial(cat, h1)
    if nz is TriState.ZERO:
        return TriState.ZERO
    sr = is_trivial(cat, suspend(h1, spec.r))
    if sr is TriState.NONZERO:
        return TriState.ZERO  # second conjunct fails
    if nz is TriState.NONZERO and sr is TriState.ZERO:
        return TriState.NONZERO
    return TriState.UNKNOWN


@dataclass(frozen=True)
class GaneaReport:
    """Verdict on cat(M x S^n) = cat(M): is the total space a counterexample
    to the product-raises-category rule, and for which n can the facts
    certify it."""

    is_counterexample: TriState
    minimal_n: int | None


def ganea_check(cat: Catalog, spec: BundleSpec, *,
                metastable_guard: bool = True) -> GaneaReport:
    """Counterexample test: S^r H1(alpha) != 0 while H1(alpha) stabilizes to
    zero.  minimal_n is the least n >= 1 with S^{n+r} H1(alpha) = 0 that the
    catalog can certify (the least n with cat(M x S^n) = cat(M) = 3)."""
    _require_t_gt_r_gt_1(spec)
    trace: list[TraceLine] = []
    h1 = _resolve_h1(cat, spec, metastable_guard, trace)
    if isinstance(h1, ZeroClass):
        return GaneaReport(TriState.ZERO, minimal_n=1)
    if isinstance(h1, UnknownClass):
        return GaneaReport(TriState.UNKNOWN, minimal_n=None)

    sr = is_trivial(cat, suspend(h1, spec.r))
    stable = stable_class(cat, h1)
    if sr is TriState.NONZERO and stable is TriState.ZERO:
        verdict = TriState.NONZERO
    elif sr is TriState.ZERO or stable is TriState.NONZERO:
        verdict = TriState.ZERO
    else:
        verdict = TriState.UNKNOWN

    min_zero = cat.min_zero_level(h1)
    minimal_n = None if min_zero is None else max(1, min_zero - spec.r)
    return GaneaReport(verdict, minimal_n=minimal_n)


def attach_along(cat: Catalog, spec: BundleSpec, beta: CompositionClass, *,
                 metastable_guard: bool = True) -> TriState:
    """Category of the complex obtained by attaching along the top cell
    precomposed with a co-H map beta : S^v -> S^{r+t}.

    NONZERO means the category stays 3, ZERO means it drops to 2; the
    verdict is the vanishing of S^r H1(alpha) o beta.  beta must carry a
    co-H certificate and H1(alpha) must be decidedly nonzero.
    """
    _require_t_gt_r_gt_1(spec)
    h1 = _decided_nonzero_h1(cat, spec, metastable_guard)
    if is_coh(cat, beta) is not True:
        raise PreconditionError("beta has no co-H certificate; refusing to guess")
    if beta.cod != spec.r + spec.t:
        raise DimensionMismatch(
            f"beta must land in S^{spec.r + spec.t}, got S^{beta.cod}"
        )
    return is_trivial(cat, compose(suspend(h1, spec.r), beta))


@dataclass(frozen=True)
class SpaceBounds:
    """Independent sanity intervals (lower, upper) for cat(Q) and cat(E)."""

    q: tuple[int, int]
    e: tuple[int, int]


def bounds(spec: BundleSpec, cat: Catalog | None = None) -> SpaceBounds:
    """Classical bounds: cup-length lower bounds, cells-minus-one upper bounds.

    With alpha = +-1 both spaces degenerate (Q is contractible, E a sphere).
    Otherwise Q is a two-cell complex, so cat(Q) <= 2, with lower bound 2
    when t + 1 = 2r and a catalog Hopf fact certifies the cup square; E is a
    closed manifold carrying its cup product, so 2 <= cat(E) <= 3.
    """
    spec.validate()
    if spec.is_unit_degree:
        return SpaceBounds(q=(0, 0), e=(1, 1))
    q_lower = 1
    if cat is not None and spec.t + 1 == 2 * spec.r and isinstance(spec.alpha, CompositionClass):
        try:
            h1 = hopf_h1(cat, spec.alpha)
        except PreconditionError:
            h1 = None
        if isinstance(h1, CompositionClass) and is_trivial(cat, h1) is TriState.NONZERO:
            q_lower = 2
    return SpaceBounds(q=(q_lower, 2), e=(2, 3))


def report_to_json_text(report: CatReport) -> str:
    """Deterministic JSON rendering of a report."""
    return json.dumps(report.to_json(), sort_keys=True, ensure_ascii=True)
