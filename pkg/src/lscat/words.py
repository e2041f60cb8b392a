"""Composition words of sphere-map generators.

A class of maps S^t -> S^r is represented as a formal composite
g1*g2*...*gm of named generators together with a uniform suspension
count.  The word is stored outermost-first: g1 is applied last, gm
first, so the composite runs S^t -> ... -> S^r from right to left.
No relations beyond identity elision are assumed; two words are equal
exactly when their names, dimensions and suspension level agree.

Triviality questions about these words are answered elsewhere against a
fact catalog; this module only provides the structural algebra
(composition, suspension, rendering).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DimensionMismatch


class TriState(Enum):
    """Answer to "is this class zero?": only what the facts certify."""

    ZERO = "zero"
    NONZERO = "nonzero"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class CompositionClass:
    """A composite g1*g2*...*gm : S^dom -> S^cod, suspended `susp` times.

    `dom` and `cod` are the effective dimensions, i.e. they already
    include the suspension shift.  An empty word is the identity of
    S^dom and requires dom == cod.
    """

    dom: int
    cod: int
    word: tuple[str, ...] = ()
    susp: int = 0

    def __post_init__(self):
        if self.dom < 1 or self.cod < 1:
            raise DimensionMismatch(f"sphere dimensions must be >= 1, got {self.dom}->{self.cod}")
        if self.susp < 0:
            raise DimensionMismatch("suspension count must be >= 0")
        if not self.word and self.dom != self.cod:
            raise DimensionMismatch(
                f"identity class requires dom == cod, got {self.dom} != {self.cod}"
            )

    @property
    def is_identity(self) -> bool:
        return not self.word

    def render(self) -> str:
        """Canonical text form: "g1*g2*...*gm^S<j>" ("iota_k" for identities)."""
        if self.is_identity:
            base = f"iota_{self.dom}"
            return base
        base = "*".join(self.word)
        if self.susp:
            return f"{base}^S{self.susp}"
        return base

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class ZeroClass:
    """The zero element of the homotopy group pi_dom(S^cod)."""

    dom: int
    cod: int

    def render(self) -> str:
        return "0"


@dataclass(frozen=True)
class UnknownClass:
    """A class the rewrite rules cannot name; never treated as zero or nonzero."""

    def render(self) -> str:
        return "?"


# hopf_h1 and friends return one of these three shapes.
MaybeClass = ZeroClass | CompositionClass | UnknownClass


def identity(k: int, susp: int = 0) -> CompositionClass:
    """The identity class of S^k (already including any suspension shift)."""
    return CompositionClass(dom=k, cod=k, word=(), susp=susp)


def compose(f: CompositionClass, g: CompositionClass) -> CompositionClass:
    """The composite f after g, i.e. S^{dom g} --g--> S^{cod g} = S^{dom f} --f--> S^{cod f}.

    Identities are elided.  Non-identity factors must live at the same
    suspension level: a word stores one uniform suspension count, so a
    genuinely mixed-level composite is not representable here.
    """
    if g.cod != f.dom:
        raise DimensionMismatch(
            f"cannot compose: target of right factor is S^{g.cod}, "
            f"source of left factor is S^{f.dom}"
        )
    if f.is_identity:
        return g
    if g.is_identity:
        return f
    if f.susp != g.susp:
        raise DimensionMismatch(
            f"cannot concatenate words at different suspension levels ({f.susp} vs {g.susp})"
        )
    return CompositionClass(dom=g.dom, cod=f.cod, word=f.word + g.word, susp=f.susp)


def suspend(f: CompositionClass, j: int) -> CompositionClass:
    """Apply j suspensions; all dimensions shift by j. suspend(suspend(f,i),j) == suspend(f,i+j)."""
    if j < 0:
        raise DimensionMismatch("cannot desuspend")
    if j == 0:
        return f
    return CompositionClass(dom=f.dom + j, cod=f.cod + j, word=f.word, susp=f.susp + j)
