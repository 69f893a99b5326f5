"""Exception types shared across the package."""


class ShefferDunklError(Exception):
    """Base class for all library errors."""


class DomainError(ShefferDunklError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NotInvertibleError(DomainError):
    """A series has no reciprocal or compositional inverse."""


class PrecisionError(ShefferDunklError, ValueError):
    """A requested result needs more series terms than are available."""


class UnsupportedExactError(ShefferDunklError):
    """An exact evaluation was requested for an object that only has a numeric form."""


class QuadratureError(ShefferDunklError, ArithmeticError):
    """A numerical integral did not reach its requested tolerance."""
