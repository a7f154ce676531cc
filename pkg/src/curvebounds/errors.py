"""Exception hierarchy shared by every module."""


class CurveBoundsError(Exception):
    """Base class for all library errors."""


class DomainError(CurveBoundsError, ValueError):
    """Inputs fall outside the domain where a formula is defined."""


class DivisibilityError(DomainError):
    """A required divisibility relation between degrees fails."""


class IntegralityError(CurveBoundsError, ArithmeticError):
    """A quantity that must be an integer evaluated to a proper fraction."""


class RegimeError(CurveBoundsError):
    """A numerical hypothesis under which a bound is asserted does not hold."""
