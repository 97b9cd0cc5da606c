"""Exception types shared across flopkit."""

from __future__ import annotations


class FlopkitError(Exception):
    """Base class for all flopkit errors."""


class DomainError(FlopkitError, ValueError):
    """An input violates an operation's precondition."""


class InvalidRankError(DomainError):
    pass


class UnknownVertexError(DomainError):
    pass


class NotShadedError(DomainError):
    pass


class EmptyWindowError(DomainError):
    pass


class UnknownGeneratorError(DomainError):
    pass


class UnsupportedKindError(DomainError):
    pass


class PeriodGuardError(FlopkitError, RuntimeError):
    """The wall-crossing walk failed to close up within the crossing bound."""
