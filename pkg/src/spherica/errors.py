"""Exception types shared across the package."""


class SphericaError(Exception):
    """Base class for every error raised by this library."""


class DomainError(SphericaError, ValueError):
    """Input lies outside the mathematical domain of an operation."""


class ShapeError(DomainError):
    """Paired arguments have mismatched dimensions."""


class DegeneracyError(DomainError):
    """Coincident squared entries.

    Determinant forms are 0/0 at such points; callers should switch to a
    series path, which handles degeneracies without division.
    """


class RangeError(SphericaError, OverflowError):
    """A value exceeds what can be represented safely in double precision."""


class ConvergenceError(SphericaError, RuntimeError):
    """A truncated series failed to certify the requested tolerance.

    The partial sum reached is available as ``partial`` and the last
    certified error bound (possibly infinite) as ``abs_error``.
    """

    def __init__(self, message, partial=None, abs_error=None):
        super().__init__(message)
        self.partial = partial
        self.abs_error = abs_error


class ValidationError(SphericaError, ValueError):
    """A serialized parameter object violates its schema."""
