"""Exception hierarchy shared by every package."""
from __future__ import annotations


class EngineError(Exception):
    """Base class for errors raised by the corner engine."""


class UsageError(EngineError, ValueError):
    """A caller broke an operation's contract (cap mismatch, bad bound, bad parameter)."""


class AlgebraDomainError(EngineError, ArithmeticError):
    """Inversion of a jet or series whose constant part is zero."""


class InvalidWordError(EngineError, ValueError):
    """A height word or set-partition word that violates its invariants."""


class ConfigurationError(EngineError):
    """A requested size exceeds the configured resource bounds."""
