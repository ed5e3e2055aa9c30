"""Exception types shared across the package."""

from __future__ import annotations


class QutritBlochError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(QutritBlochError, ValueError):
    """A parameter vector contains NaN/infinite entries or unknown names."""


class InvalidMatrixError(QutritBlochError, ValueError):
    """An input matrix violates a structural precondition.

    ``check`` names the violated requirement (e.g. ``"hermiticity"`` or
    ``"unit_trace"``) so callers can report it without parsing the message.
    """

    def __init__(self, check: str, message: str) -> None:
        super().__init__(message)
        self.check = check


class NoPrintedFormError(QutritBlochError, KeyError):
    """The requested (cluster, inequality, normalization) has no printed form."""


class ArityMismatchError(QutritBlochError, ValueError):
    """Slot values supplied to a cluster case do not match its arity."""


class SamplerStallError(QutritBlochError, RuntimeError):
    """Rejection sampling exceeded the per-point attempt budget."""
