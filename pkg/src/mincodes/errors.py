"""Exception types raised across the package."""


class MinCodesError(Exception):
    """Base class for all errors raised by this package."""


class NotPrimePower(MinCodesError):
    """The requested field order is not a prime power >= 2."""


class DivisionByZero(MinCodesError):
    """Multiplicative inverse of zero (or division by zero) was requested."""


class FieldMismatch(MinCodesError):
    """Operands live over different fields."""


class DimensionMismatch(MinCodesError):
    """Operand shapes are incompatible."""


class RankDeficient(MinCodesError):
    """A generator matrix does not have full row rank."""


class TrivialDual(MinCodesError):
    """The dual code is zero-dimensional (n == k)."""


class NotInCode(MinCodesError):
    """A vector claimed to be a codeword is not in the code."""


class BudgetExceeded(MinCodesError):
    """An exhaustive enumeration would exceed the configured budget."""

    def __init__(self, needed: int, budget: int):
        self.needed = needed
        self.budget = budget
        super().__init__(
            f"enumeration needs {needed} words, budget is {budget}"
        )


class BadParams(MinCodesError):
    """Construction or operation parameters are out of range."""


class PreconditionFailed(MinCodesError):
    """An operation's verified precondition does not hold for its input."""


class Unauthorized(MinCodesError):
    """A participant subset is not authorized to reconstruct the secret."""


class InconsistentShares(MinCodesError):
    """Submitted shares do not match any codeword of the scheme."""


class ZeroColumn(MinCodesError):
    """A generator column is the zero vector where a nonzero one is required."""
