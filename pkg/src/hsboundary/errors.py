"""Exception hierarchy shared by every module."""


class HSBoundaryError(Exception):
    """Base class for all package errors."""


class WeightError(HSBoundaryError, ValueError):
    """Raised when a tuple of integers is not a valid dominant weight."""


class NotDominant(WeightError):
    pass


class ParityViolation(WeightError):
    pass


class EmptyEmbeddingSet(WeightError):
    pass


class DimensionMismatch(HSBoundaryError, ValueError):
    pass


class SizeLimit(HSBoundaryError, ValueError):
    pass


class UnsupportedField(HSBoundaryError, ValueError):
    pass


class InvalidBeta(HSBoundaryError, ValueError):
    pass
