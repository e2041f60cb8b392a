"""lscat: symbolic L-S category oracle for sphere bundles over spheres."""

from .algebra import hopf_h1, is_coh, is_trivial, stable_class
from .barcomplex import (
    FormalSum,
    TensorWord,
    bar_differential,
    iso_check,
    quotient_differential,
)
from .catalog import (
    Catalog,
    GeneratorFact,
    VanishingFact,
    default_catalog,
    load_facts,
    load_facts_path,
    query_vanishing,
)
from .engine import (
    BundleSpec,
    CatReport,
    CatValue,
    Degree,
    GaneaReport,
    SpaceBounds,
    attach_along,
    bounds,
    classify,
    ganea_check,
    hopf2_contains_zero,
    hopf2_representative,
    punctured_equal,
)
from .errors import (
    ConsistencyError,
    DimensionMismatch,
    LscatError,
    MissingParameter,
    ParseError,
    PreconditionError,
    SpecError,
    UnknownGenerator,
)
from .words import (
    CompositionClass,
    MaybeClass,
    TriState,
    UnknownClass,
    ZeroClass,
    compose,
    identity,
    suspend,
)

__version__ = "0.1.0"

__all__ = [
    "BundleSpec",
    "CatReport",
    "CatValue",
    "Catalog",
    "CompositionClass",
    "ConsistencyError",
    "Degree",
    "DimensionMismatch",
    "FormalSum",
    "GaneaReport",
    "GeneratorFact",
    "LscatError",
    "MaybeClass",
    "MissingParameter",
    "ParseError",
    "PreconditionError",
    "SpaceBounds",
    "SpecError",
    "TensorWord",
    "TriState",
    "UnknownClass",
    "UnknownGenerator",
    "VanishingFact",
    "ZeroClass",
    "attach_along",
    "bar_differential",
    "bounds",
    "classify",
    "compose",
    "default_catalog",
    "ganea_check",
    "hopf2_contains_zero",
    "hopf2_representative",
    "hopf_h1",
    "identity",
    "is_coh",
    "is_trivial",
    "iso_check",
    "load_facts",
    "load_facts_path",
    "punctured_equal",
    "quotient_differential",
    "query_vanishing",
    "stable_class",
    "suspend",
]
