"""Exceptions for the nwlab package."""
# exceptions.py

from typing import Optional


class NappiWittenError(Exception):
    """Base class for all errors raised by nwlab."""


class ZeroLevel(NappiWittenError, ValueError):
    """Exception raised when a construction requires a nonzero level."""


class LevelMismatch(NappiWittenError, ValueError):
    """Exception raised when combining enveloping algebra elements of different levels."""


class TruncationOverflow(NappiWittenError):
    """Exception raised when a result would leave the truncated module."""


class TruncationTooShallow(NappiWittenError):
    """Exception raised when the raising operators do not reach the component height."""


class InvalidTruncation(NappiWittenError, ValueError):
    """Exception raised when window, depth or cap parameters are inconsistent."""


class ParameterMismatch(NappiWittenError, ValueError):
    """Exception raised when module parameters do not satisfy the requested case."""


class DegenerateSystem(NappiWittenError):
    """Exception raised when a coefficient system does not have a one-dimensional solution space."""


class VerificationFailed(NappiWittenError):
    """Exception raised when an independent re-check disagrees with a computed result."""


class UsageError(NappiWittenError):
    """Exception raised for malformed command-line input."""

    def __init__(self, message: str, flag: Optional[str] = None) -> None:
        super().__init__(message)
        self.flag = flag
