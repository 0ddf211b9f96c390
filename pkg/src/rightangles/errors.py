"""Exception types shared across the package."""


class Error(Exception):
    """Base class for every error raised by this package."""


class NotPrime(Error):
    """The claimed characteristic is not a prime number."""


class NotMonic(Error):
    """The field modulus is not monic of the stated degree."""


class Reducible(Error):
    """The field modulus factors over the prime field."""


class ZeroDegree(Error):
    """The extension degree must be at least 1."""


class DivisionByZero(Error, ZeroDivisionError):
    """Multiplicative inverse of the zero element was requested."""


class DimensionMismatch(Error):
    """Vectors of different lengths (or over different fields) were combined."""


class BadDimension(Error):
    """The ambient dimension is too small for the requested construction."""


class EvenCharacteristic(Error):
    """The operation is only defined over fields of odd characteristic."""


class ZeroCoefficient(Error):
    """A coefficient vector contains a zero entry where nonzero is required."""


class SizeMismatch(Error):
    """A coefficient vector and point set have different lengths."""


class IndexSetMismatch(Error):
    """Two tensors (or a decomposition and a tensor) are indexed by different sets."""


class TooLarge(Error):
    """The instance exceeds a documented size cap."""


class DuplicatePoint(Error):
    """A point set contains the same point twice."""
