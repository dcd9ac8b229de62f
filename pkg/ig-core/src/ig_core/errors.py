# src/ig_core/errors.py

from typing import List, Optional, Tuple


class IgBandsError(Exception):
    """Base class for every error raised by the ig-bands libraries."""


class PresentationSyntaxError(IgBandsError):
    """Raised when presentation text cannot be parsed.

    Carries the 1-based line and column of the offending token so the CLI
    can print a precise diagnostic.
    """

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class PresentationValidationError(IgBandsError):
    """Raised when a presentation object violates its invariants."""

    def __init__(self, errors: List[str]):
        self.errors = errors
        super().__init__(f"invalid presentation: {'; '.join(errors)}")


class BandConstructionError(IgBandsError):
    """Raised when a band cannot be assembled from the given elements."""


class NotABandError(IgBandsError):
    """Raised when an operation that requires a band receives something else."""

    def __init__(self, message: str, counterexample: Optional[Tuple[int, ...]] = None):
        self.counterexample = counterexample
        super().__init__(message)


class GridError(IgBandsError):
    """Raised for D-class grid requests that do not fit the band."""


class SquareComputationError(IgBandsError):
    """Raised when action maps cannot be read off a grid."""


class WordSyntaxError(IgBandsError):
    """Raised when a word over band elements cannot be parsed."""
