"""Error hierarchy shared by the services, the HTTP routes and the CLI."""

from __future__ import annotations

from typing import Any


class RichardsonError(Exception):
    """Base class for every error raised by this package."""


class InvalidRankError(RichardsonError):
    pass


class ParseError(RichardsonError):
    pass


class InvalidElementError(RichardsonError):
    pass


class NotARootError(RichardsonError):
    pass


class RankMismatchError(RichardsonError):
    pass


class NotMinimalRepresentativeError(RichardsonError):
    def __init__(self, message: str, suggestion: Any | None = None) -> None:
        super().__init__(message)
        self.suggestion = suggestion


class NotComparableError(RichardsonError):
    pass


class BudgetExceededError(RichardsonError):
    pass


class ConstructionError(RichardsonError):
    """A closed form disagreed with its recomputation. Always an internal bug."""
