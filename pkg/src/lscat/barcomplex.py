"""Bar differential on tensor powers of the loop-space homology of a sphere.

The homology of the based loop space of S^r (r >= 2) is a polynomial ring
on one generator x in degree r - 1.  A basis word of the (m+1)-fold tensor
power is written by its exponents (a0, ..., am), all >= 1, standing for
x^{a0} (x) x^{a1} (x) ... (x) x^{am}.  The bar differential collapses
adjacent factors with alternating signs:

    d(a0, ..., am) = sum_{i=1..m} (-1)^i (a0, ..., a_{i-1}+a_i, ..., am)

It preserves the total exponent sum and shortens words by one; d o d = 0.
Dividing out words whose first exponent is 1 gives the quotient
differential d'(1, j, k) = -(j+1, k), which matches the bases
{(1, j, k) : j, k >= 1} and {(j', k') : j' >= 2, k' >= 1} degree by degree;
`iso_check` verifies that bijection by brute force.

Coefficients are exact integers throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError


@dataclass(frozen=True)
class TensorWord:
    """Exponent tuple (a0, ..., am) of a tensor-power basis word over S^r."""

    exponents: tuple[int, ...]
    r: int = 2

    def __post_init__(self):
        if len(self.exponents) < 1:
            raise ValueError("a tensor word needs at least one factor")
        if any(a < 1 for a in self.exponents):
            raise ValueError(f"exponents must be >= 1, got {self.exponents}")
        if self.r < 2:
            raise ValueError("the sphere parameter r must be >= 2")

    @property
    def length(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        """Homological degree of the underlying smash word: sum(a_i) * (r-1)."""
        return sum(self.exponents) * (self.r - 1)

    @property
    def join_degree(self) -> int:
        """Degree inside the join model: the smash degree plus one shift per
        extra factor (reported only; the data model stores exponents)."""
        return self.degree + (self.length - 1)

    def render(self) -> str:
        return "(x)".join(f"x^{a}" if a > 1 else "x" for a in self.exponents)


@dataclass(frozen=True)
class FormalSum:
    """Integer combination of same-length, same-degree tensor words.

    Canonical form: terms sorted lexicographically by exponents, zero
    coefficients dropped.  The grading constraint (equal length and equal
    exponent sum across terms) is enforced at construction.
    """

    terms: tuple[tuple[int, TensorWord], ...] = ()

    @classmethod
    def of(cls, terms) -> "FormalSum":
        acc: dict[TensorWord, int] = {}
        for coeff, word in terms:
            acc[word] = acc.get(word, 0) + coeff
        kept = sorted(
            ((c, w) for w, c in acc.items() if c != 0), key=lambda cw: cw[1].exponents
        )
        shapes = {(w.length, sum(w.exponents), w.r) for _, w in kept}
        if len(shapes) > 1:
            raise ValueError(f"mixed gradings in one formal sum: {sorted(shapes)}")
        return cls(terms=tuple(kept))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "FormalSum") -> "FormalSum":
        return FormalSum.of(self.terms + other.terms)

    def __neg__(self) -> "FormalSum":
        return FormalSum.of((-c, w) for c, w in self.terms)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def render(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for coeff, word in self.terms:
            sign = "-" if coeff < 0 else ("+" if parts else "")
            mag = "" if abs(coeff) == 1 else f"{abs(coeff)}*"
            parts.append(f"{sign}{mag}{word.render()}")
        return " ".join(parts)


def bar_differential(w: TensorWord | FormalSum) -> FormalSum:
    """The alternating adjacent-collapse differential; extends linearly."""
    if isinstance(w, FormalSum):
        out = FormalSum()
        for coeff, word in w.terms:
            out = out + FormalSum.of(
                (coeff * c, ww) for c, ww in bar_differential(word).terms
            )
        return out
    a = w.exponents
    terms = []
    for i in range(1, len(a)):
        merged = a[:i - 1] + (a[i - 1] + a[i],) + a[i + 1:]
        terms.append(((-1) ** i, TensorWord(merged, r=w.r)))
    return FormalSum.of(terms)


def quotient_differential(w: TensorWord) -> FormalSum:
    """Differential into the quotient killing words with first exponent 1.

    Defined on words (1, j, k) with j, k >= 1; equals the bar differential
    followed by the projection, i.e. -(j+1, k).
    """
    if w.length != 3 or w.exponents[0] != 1:
        raise PreconditionError(
            f"quotient differential needs a word (1, j, k), got {w.exponents}"
        )
    projected = [
        (c, ww) for c, ww in bar_differential(w).terms if ww.exponents[0] != 1
    ]
    return FormalSum.of(projected)


def words_of(length: int, total: int, r: int = 2):
    """All exponent words of the given length and exponent sum (each a_i >= 1)."""
    if length == 1:
        if total >= 1:
            yield TensorWord((total,), r=r)
        return
    for head in range(1, total - length + 2):
        for tail in words_of(length - 1, total - head, r=r):
            yield TensorWord((head,) + tail.exponents, r=r)


def iso_check(degree_bound: int, r: int = 2) -> bool:
    """Brute-force check that the quotient differential is a signed bijection.

    Source basis: words (1, j, k); target basis: words (j', k') with j' >= 2.
    Compared degree by degree for every exponent degree <= degree_bound.
    Vacuously true when the bound admits no basis words.
    """
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    max_total = degree_bound // (r - 1)
    for total in range(3, max_total + 1):
        source = [
            TensorWord((1, j, total - 1 - j), r=r) for j in range(1, total - 1)
        ]
        target = {(jp, total - jp) for jp in range(2, total)}
        image = set()
        for word in source:
            out = quotient_differential(word)
            if len(out.terms) != 1:
                return False
            coeff, hit = out.terms[0]
            if abs(coeff) != 1 or hit.exponents in image:
                return False
            if hit.exponents not in target:
                return False
            image.add(hit.exponents)
        if image != target:
            return False
    return True


def differential_matrix_text(length: int, total: int, r: int = 2) -> str:
    """Textual dump of the bar differential matrix in one bidegree, rows
    indexed by source words, columns by target words."""
    source = list(words_of(length, total, r=r))
    target = list(words_of(length - 1, total, r=r)) if length > 1 else []
    col_index = {w.exponents: i for i, w in enumerate(target)}
    lines = [
        f"bar differential, r={r}, exponent sum {total}: "
        f"{length} factors ({len(source)} words) -> {length - 1} factors ({len(target)} words)"
    ]
    header = " | ".join(w.render() for w in target) or "(zero target)"
    lines.append(f"{'':>24} | {header}")
    for word in source:
        row = [0] * len(target)
        for coeff, hit in bar_differential(word).terms:
            row[col_index[hit.exponents]] = coeff
        cells = " | ".join(f"{c:>{len(t.render())}}" for c, t in zip(row, target))
        lines.append(f"{word.render():>24} | {cells}")
    return "\n".join(lines)
