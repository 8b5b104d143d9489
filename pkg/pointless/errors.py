"""Exceptions raised across the pointless package."""


class PointlessError(Exception):
    """Base class for all errors raised by pointless."""


class ConfigurationError(PointlessError):
    """Invalid job configuration or curve file."""


class InvalidDiscriminantError(PointlessError, ValueError):
    """D is a perfect square or divisible by 4."""


class NonResidueError(PointlessError, ArithmeticError):
    """No square root exists in the field."""


class NotASquareError(PointlessError, ArithmeticError):
    """h is not a square modulo u (the caller should retry with a new u)."""


class GuardExceededError(PointlessError):
    """A brute-force oracle was asked for more work than its guard allows."""


class _ReasonError(PointlessError):
    reasons = ()

    def __init__(self, reason: str, message: str = ""):
        if self.reasons and reason not in self.reasons:
            raise ValueError(f"Unknown reason for {type(self).__name__}: {reason}")
        self.reason = reason
        super().__init__(f"{reason}: {message}" if message else reason)


class ModelError(_ReasonError):
    """The hyperelliptic model over O_K could not be built."""

    reasons = ("square-discriminant", "degenerate-line", "point-on-line", "not-genus-3")


class ExceptionalPrimeError(_ReasonError):
    """The prime cannot be processed by the batch algorithm."""

    reasons = ("bad-h0", "translates-collide", "bad-reduction")


class NotRationalError(PointlessError):
    """Coefficients of det(I - T W W^(p)) are not in the prime field."""


class NoCandidatesError(PointlessError):
    """No L-polynomial candidate is compatible with the mod-p data."""


class NotMultipleError(PointlessError):
    """m does not annihilate the element."""


class InconsistentCountsError(PointlessError, ValueError):
    """Point counts over F_p, F_{p^2}, F_{p^3} do not come from an L-polynomial."""


class ReductionError(PointlessError, RuntimeError):
    """Divisor reduction did not reach a reduced representative."""
