"""Exception types raised by the verification library."""

from __future__ import annotations


class ConeCurveError(ValueError):
    """Base class for all domain errors in this package."""


class ParityError(ConeCurveError):
    """D^2 + D.K_S is odd, so the class has no integral arithmetic genus."""


class SpecialRangeError(ConeCurveError):
    """h^0 requested in the special range [0, 2g-2] for an unrecognized class."""


class InvariantMismatch(ConeCurveError):
    """(d, g) do not come from any multiplicity m for the given base curve."""


class UnsupportedMultiplicity(ConeCurveError):
    pass


class ShapeError(ConeCurveError):
    """Betti table step count is incompatible with its ambient dimension."""


class PurityError(ConeCurveError):
    """The Hilbert numerator does not certify a pure resolution.

    The offending numerator coefficients are kept on ``numerator``
    (index ``i`` is the coefficient of ``t**i``).
    """

    def __init__(self, message: str, numerator: list[int]):
        super().__init__(message)
        self.numerator = numerator


class HypothesisError(ConeCurveError):
    """(gamma, e) lie outside the range gamma >= 3, e >= 4*gamma + 5."""


class NonspecialityError(ConeCurveError):
    pass
