"""Exception types raised by fefbound.

Every error carries a ``magnitude`` when the failure is quantitative (how far
an input is from satisfying the violated invariant), so callers such as the
CLI can report it without parsing the message.
"""


class FefError(ValueError):
    """Base class for all validation errors in this package."""

    def __init__(self, message, magnitude=None):
        super().__init__(message)
        self.magnitude = magnitude


class DimensionMismatch(FefError):
    pass


class NonSquare(DimensionMismatch):
    pass


class InvalidDimension(FefError):
    pass


class NonFinite(FefError):
    pass


class NotHermitian(FefError):
    pass


class TraceNotOne(FefError):
    pass


class NotPositive(FefError):
    pass


class ReconstructionNotPositive(NotPositive):
    pass


class NotOrthogonal(FefError):
    pass


class OutOfRange(FefError):
    pass


class NormViolation(FefError):
    pass


class ImaginaryResidue(FefError):
    """A quantity that must be real for Hermitian input had an imaginary part."""
