# src/ig_core/bands/index_sets.py

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Dict, Optional, Sequence, Tuple

from ig_core.errors import GridError


class IndexBase(str, Enum):
    ZERO = "zero"
    GEN = "gen"
    INFINITY = "infinity"


@dataclass(frozen=True)
class IndexSymbol:
    """One of ``0``, ``a``, ``0'``, ``a'`` or ``inf``."""

    base: IndexBase
    gen: Optional[str] = None
    primed: bool = False

    def __post_init__(self) -> None:
        if self.base is IndexBase.INFINITY and self.primed:
            raise ValueError("inf is never primed")
        if (self.base is IndexBase.GEN) != (self.gen is not None):
            raise ValueError("a generator index needs exactly one generator name")

    @classmethod
    def zero(cls, primed: bool = False) -> "IndexSymbol":
        return cls(IndexBase.ZERO, primed=primed)

    @classmethod
    def of(cls, gen: str, primed: bool = False) -> "IndexSymbol":
        return cls(IndexBase.GEN, gen=gen, primed=primed)

    @classmethod
    def infinity(cls) -> "IndexSymbol":
        return cls(IndexBase.INFINITY)

    @property
    def label(self) -> str:
        if self.base is IndexBase.INFINITY:
            return "inf"
        core = "0" if self.base is IndexBase.ZERO else str(self.gen)
        return core + ("'" if self.primed else "")

    @property
    def token(self) -> str:
        """Label safe for use inside generator names (``'`` becomes ``p``)."""
        return self.label.replace("'", "p")

    def unprimed(self) -> "IndexSymbol":
        return IndexSymbol(self.base, self.gen, False)

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class IndexSets:
    """The row set ``I = A_0 ∪ A_0'`` and column set ``J = A_0 ∪ {inf}``.

    Both are ordered 0 first, then the generators in declaration order; the
    primed copy of ``A_0`` follows ``A_0`` in ``I``.
    """

    alphabet: Tuple[str, ...]
    I: Tuple[IndexSymbol, ...]
    J: Tuple[IndexSymbol, ...]

    @classmethod
    def from_alphabet(cls, alphabet: Sequence[str]) -> "IndexSets":
        a0 = [IndexSymbol.zero()] + [IndexSymbol.of(a) for a in alphabet]
        a0_primed = [IndexSymbol.zero(True)] + [IndexSymbol.of(a, True) for a in alphabet]
        return cls(
            tuple(alphabet),
            tuple(a0 + a0_primed),
            tuple(a0 + [IndexSymbol.infinity()]),
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.I), len(self.J))

    def row(self, symbol: IndexSymbol) -> int:
        return self._row_lookup[symbol.label]

    def col(self, symbol: IndexSymbol) -> int:
        return self._col_lookup[symbol.label]

    def row_of(self, label: str) -> int:
        try:
            return self._row_lookup[label.strip()]
        except KeyError:
            raise GridError(f"unknown row index {label!r}") from None

    def col_of(self, label: str) -> int:
        try:
            return self._col_lookup[label.strip()]
        except KeyError:
            raise GridError(f"unknown column index {label!r}") from None

    def zero_row(self, primed: bool = False) -> int:
        return len(self.alphabet) + 1 if primed else 0

    def gen_row(self, gen: str, primed: bool = False) -> int:
        return self.row(IndexSymbol.of(gen, primed))

    def gen_col(self, gen: str) -> int:
        return self.col(IndexSymbol.of(gen))

    @property
    def infinity_col(self) -> int:
        return len(self.J) - 1

    @cached_property
    def _row_lookup(self) -> Dict[str, int]:
        return {s.label: position for position, s in enumerate(self.I)}

    @cached_property
    def _col_lookup(self) -> Dict[str, int]:
        return {s.label: position for position, s in enumerate(self.J)}
