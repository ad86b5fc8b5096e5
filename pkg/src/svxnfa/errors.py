"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SvxnfaError(Exception):
    """Base class for all library errors."""


class DimensionError(SvxnfaError, ValueError):
    """Operands have incompatible sizes."""


class SingularMatrixError(SvxnfaError, ArithmeticError):
    """A matrix has no inverse over GF(2).

    ``dependent_rows`` holds the indices of a set of rows whose XOR is zero.
    """

    def __init__(self, message: str, dependent_rows: tuple[int, ...] = ()):
        super().__init__(message)
        self.dependent_rows = dependent_rows


class StateLimitError(SvxnfaError, RuntimeError):
    """Subset construction exceeded the configured state cap."""


class EnumerationLimitError(SvxnfaError, ValueError):
    """Exhaustive enumeration was requested above its size cap."""


class PreconditionError(SvxnfaError, ValueError):
    """An operation's hypothesis does not hold for the given input."""


class SvViolationError(SvxnfaError):
    """A machine breaks the self-verifying condition where it is required."""

    def __init__(self, message: str, state=None, verdict=None):
        super().__init__(message)
        self.state = state
        self.verdict = verdict
