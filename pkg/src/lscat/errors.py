"""Exception hierarchy shared by all lscat modules."""

from __future__ import annotations


class LscatError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(LscatError):
    """Malformed fact file or expression syntax."""

    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", col {col})" if col is not None else ")")
        super().__init__(message + loc)
        self.line = line
        self.col = col


class ConsistencyError(LscatError):
    """Fact catalog fails internal validation (conflicts, dangling names, bad dims)."""


class UnknownGenerator(LscatError):
    """A composition word references a generator the catalog does not declare."""


class DimensionMismatch(LscatError):
    """Source/target sphere dimensions do not chain."""


class SpecError(LscatError):
    """A bundle description is structurally invalid (wrong alpha kind or dims)."""


class PreconditionError(LscatError):
    """An engine operation was called outside its domain of validity."""


class MissingParameter(LscatError):
    """An expression mentions a prime-parameterized family but p is not determined."""
