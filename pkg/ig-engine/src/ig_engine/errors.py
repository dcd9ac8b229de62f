# src/ig_engine/errors.py

from ig_core.errors import IgBandsError


class EliminationError(IgBandsError):
    """Raised when a generator cannot be eliminated with the given word."""


class TietzeError(IgBandsError):
    """Raised when a simplification strategy cannot proceed."""


class EnumerationOverflow(IgBandsError):
    """Raised when coset enumeration defines more cosets than allowed.

    The group order is unknown at this limit; this is never a proof that the
    group is infinite.
    """

    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"coset enumeration exceeded {limit} cosets (order unknown at limit)")


class MissingGeneratorImage(IgBandsError):
    def __init__(self, generator: str):
        self.generator = generator
        super().__init__(f"no image given for generator {generator}")


class ReesModelError(IgBandsError):
    """Raised when the Rees model is inconsistent or asked about foreign elements."""
