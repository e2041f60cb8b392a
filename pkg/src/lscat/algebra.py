"""Catalog-aware algebra on composition classes.

The operations here answer the questions the classification engine asks:

* is a class trivial (zero / nonzero / unknown) at its suspension level,
* is its stabilization trivial,
* does it carry a co-H certificate,
* what is its first Hopf invariant.

The Hopf invariant is computed by rewrite rules, never by homotopy-group
arithmetic:

  (a) a suspension class has trivial Hopf invariant;
  (b) for f = g*w with g a single generator carrying a declared Hopf
      invariant h and w certified co-H, the invariant of f is h*w;
  (c) anything else is unknown.

Rule (b) composes an invariant declared for g (typically sourced from
James-Hopf computations) with w; the identification of those declared
values with the Hopf invariant used here is only safe in the meta-stable
range, so by default (b) fires only when the leading generator g satisfies
dom(g) <= 3*cod(g) - 3.  The guard can be disabled per call.
"""

from __future__ import annotations

from .catalog import H1_ZERO, Catalog
from .errors import PreconditionError, UnknownGenerator
from .words import (
    CompositionClass,
    MaybeClass,
    TriState,
    UnknownClass,
    ZeroClass,
    compose,
    suspend,
)


def is_trivial_explained(cat: Catalog, f: CompositionClass) -> tuple[TriState, str]:
    """Tri-state triviality verdict plus the citation that decides it."""
    if f.is_identity:
        return TriState.NONZERO, "rule:identity-is-essential"
    if f.dom < f.cod:
        return TriState.ZERO, "rule:trivial-group-below-target-dimension"
    if f.cod == 1 and f.dom > 1:
        return TriState.ZERO, "rule:higher-homotopy-of-circle-vanishes"
    return cat.explain_vanishing(f, 0)


def is_trivial(cat: Catalog, f: CompositionClass) -> TriState:
    """Is the class zero?  Identity classes are nonzero; dimension-forced
    zeros (dom < cod, or target S^1 with dom > 1) are zero; everything else
    is looked up in the catalog at the class's suspension level."""
    return is_trivial_explained(cat, f)[0]


def is_coh(cat: Catalog, f: CompositionClass) -> bool | None:
    """Co-H certificate: True when certified, None when unknown (never False).

    Certified cases: identities, suspended classes, and words all of whose
    factors are either declared suspensions or carry a declared h1=0 (a
    vanishing Hopf invariant is exactly the co-H obstruction for a map
    between spheres).
    """
    if f.is_identity or f.susp > 0:
        return True
    for name in f.word:
        gen = cat.generators.get(name)
        if gen is None:
            raise UnknownGenerator(f"undeclared generator '{name}'")
        if gen.susp_of is None and gen.h1 != H1_ZERO:
            return None
    return True


def hopf_h1(cat: Catalog, f: CompositionClass, *, metastable_guard: bool = True) -> MaybeClass:
    """First Hopf invariant of f : S^dom -> S^cod, landing in S^{2*cod-1}.

    Requires dom > cod > 1.  Returns ZeroClass, a CompositionClass, or
    UnknownClass per the rewrite rules in the module docstring.
    """
    if not (f.dom > f.cod > 1):
        raise PreconditionError(
            f"hopf_h1 needs dom > cod > 1, got S^{f.dom} -> S^{f.cod}"
        )
    target = 2 * f.cod - 1

    # (a) suspensions have trivial Hopf invariant
    if f.susp > 0:
        return ZeroClass(dom=f.dom, cod=target)
    gens = [cat.generators.get(name) for name in f.word]
    if any(g is None for g in gens):
        missing = f.word[[g is None for g in gens].index(True)]
        raise UnknownGenerator(f"undeclared generator '{missing}'")
    if all(g.susp_of is not None for g in gens):
        return ZeroClass(dom=f.dom, cod=target)

    # (b) peel the leading generator when its invariant is declared and the
    #     rest of the word is certified co-H
    lead = gens[0]
    declared = cat.h1_declaration(lead.name)
    implicit_zero = declared is None and lead.susp_of is not None
    if declared is None and not implicit_zero:
        return UnknownClass()
    if not implicit_zero and metastable_guard and lead.dom > 3 * lead.cod - 3:
        # declared invariants are only trusted in the meta-stable range
        return UnknownClass()
    if len(f.word) == 1:
        rest = None
    else:
        rest = cat.word_class(f.word[1:])
    if rest is not None and is_coh(cat, rest) is not True:
        return UnknownClass()
    if implicit_zero or declared == H1_ZERO:
        return ZeroClass(dom=f.dom, cod=target)
    if rest is None:
        return declared
    return compose(declared, rest)


def stable_class(cat: Catalog, f: CompositionClass) -> TriState:
    """Triviality of the stabilization (the class after arbitrarily many
    suspensions).  Zero once any finite suspension kills the word; nonzero
    only for identities or words flagged stable in the catalog."""
    if f.is_identity:
        return TriState.NONZERO
    if f.dom < f.cod or (f.cod == 1 and f.dom > 1):
        # dimension-forced zero classes suspend to zero classes
        return TriState.ZERO
    if cat.min_zero_level(f) is not None:
        return TriState.ZERO
    if cat.stably_nonzero(f):
        return TriState.NONZERO
    return TriState.UNKNOWN


def level_state(cat: Catalog, f: CompositionClass, j: int) -> TriState:
    """Triviality of Sigma^j f; convenience used by the engine's predicates."""
    return is_trivial(cat, suspend(f, j))
