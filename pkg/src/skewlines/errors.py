"""Exception hierarchy.

Every error raised on purpose by the library derives from ``SkewlinesError``,
itself a ``ValueError``, so callers can catch bad input in one place. Mathematical
verdicts (not geproci, not equivalent, exceeds cap) are return values, not errors.
"""

from __future__ import annotations

from typing import Any


class SkewlinesError(ValueError):
    """Base class for all library errors."""


class FieldMismatchError(SkewlinesError):
    """Operands belong to different field contexts."""


class FieldDivisionError(SkewlinesError, ZeroDivisionError):
    """Division by zero (or inversion of zero) in an exact field."""


class CharacteristicError(SkewlinesError):
    """The field characteristic divides an order that must be invertible."""


class RootOfUnityUnavailableError(SkewlinesError):
    """The requested root of unity cannot be produced in this context."""


class IrreducibilityError(SkewlinesError):
    """An extension modulus is not irreducible over its base."""


class IncidenceError(SkewlinesError):
    """A geometric incidence precondition failed (coincident points, point on line...)."""


class NotSkewError(SkewlinesError):
    """Lines that must be pairwise skew meet."""


class DegenerateQuadricError(SkewlinesError):
    """The quadric through three lines is not unique or not smooth."""


class ParameterRangeError(SkewlinesError):
    """A numeric parameter lies outside its admissible range."""


class ConstructionError(SkewlinesError):
    """A named configuration cannot be built from the given input."""


class CardinalityError(SkewlinesError):
    """A point set has the wrong number of points."""


class FieldTooSmallError(SkewlinesError):
    """A finite field is too small for random general-position draws."""


class UnequalLineCountsError(SkewlinesError):
    """A point set does not carry the same number of points on every line."""


class SchemaError(SkewlinesError):
    """A JSON document is malformed or has the wrong schema version."""


class NotCollinearlyCompleteError(SkewlinesError):
    """A point set is not a union of groupoid orbits."""

    def __init__(self, message: str, certificate: Any = None) -> None:
        super().__init__(message)
        self.certificate = certificate
