"""Shared exception types."""


class DomainError(ValueError):
    """Raised when an argument violates a domain precondition.

    Kept distinct from plain ValueError so callers (notably the command
    line interface) can tell domain violations apart from parse and usage
    errors.
    """
