"""Exception types raised by the library."""


class PowerSumError(Exception):
    """Base class for all library errors."""


class NonFiniteResult(PowerSumError, ArithmeticError):
    """A floating-point evaluation overflowed or produced NaN."""


class SingularPoint(PowerSumError, ZeroDivisionError):
    """An identity was evaluated at a point excluded from its domain."""

    def __init__(self, message: str, point=None):
        super().__init__(message)
        self.point = point


class InvalidParams(PowerSumError, ValueError):
    """Parameters are inconsistent with the requested operation or mode."""
