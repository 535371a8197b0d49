"""Exception hierarchy shared by every module of the package."""


class SlengthError(Exception):
    """Base class for all errors raised by this package."""


class AmbientDimensionError(SlengthError, ValueError):
    """Two objects live in polynomial rings with different variable counts."""


class DomainError(SlengthError, ValueError):
    """An operation was applied outside the class of inputs it is defined on."""


class TrivialQuotient(SlengthError):
    """The requested module is zero (for example (I:v) = (J:v)), so there is
    nothing to decompose."""


class SizeBudgetExceeded(SlengthError, RuntimeError):
    """An exact search or enumeration would exceed its configured budget."""
