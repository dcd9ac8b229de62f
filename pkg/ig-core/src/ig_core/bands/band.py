# src/ig_core/bands/band.py

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple, Union

import numpy as np

from ig_core.errors import BandConstructionError

from .index_sets import IndexSets
from .labels import ElementLabel
from .transformations import TransformationPair


@dataclass(frozen=True, eq=False)
class Band:
    """A finite band held as a multiplication table over element ids ``0..n-1``.

    Transformation-backed bands (such as ``B_G``) also keep the pairs the
    table was computed from, the index sets, and the split into the minimal
    ideal ``kernel`` and the left-zero part ``upper``.
    """

    table: np.ndarray
    labels: Tuple[ElementLabel, ...]
    pairs: Optional[Tuple[TransformationPair, ...]] = None
    index_sets: Optional[IndexSets] = None
    kernel: FrozenSet[int] = field(default_factory=frozenset)
    upper: FrozenSet[int] = field(default_factory=frozenset)

    @property
    def size(self) -> int:
        return int(self.table.shape[0])

    def __len__(self) -> int:
        return self.size

    def multiply(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def product(self, elements: Sequence[int]) -> int:
        if not elements:
            raise ValueError("empty product")
        value = elements[0]
        for e in elements[1:]:
            value = int(self.table[value, e])
        return value

    def label(self, x: int) -> str:
        return self.labels[x].render()

    def index_of(self, label: Union[str, ElementLabel]) -> int:
        if isinstance(label, str):
            label = ElementLabel.parse(label)
        try:
            return self._label_lookup()[label]
        except KeyError:
            raise KeyError(f"{label.render()} is not an element of this band") from None

    def _label_lookup(self) -> Dict[ElementLabel, int]:
        cached = self.__dict__.get("_lookup")
        if cached is None:
            cached = {label: position for position, label in enumerate(self.labels)}
            object.__setattr__(self, "_lookup", cached)
        return cached

    @property
    def is_bg(self) -> bool:
        return self.index_sets is not None and bool(self.kernel)

    @classmethod
    def from_pairs(
        cls,
        pairs: Sequence[TransformationPair],
        index_sets: Optional[IndexSets] = None,
        kernel: FrozenSet[int] = frozenset(),
        upper: FrozenSet[int] = frozenset(),
    ) -> "Band":
        """Computes the multiplication table of a set of pairs.

        Raises:
            BandConstructionError: if two pairs coincide or a product falls
                outside the set.
        """
        lookup: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = {}
        for position, pair in enumerate(pairs):
            if pair.key in lookup:
                raise BandConstructionError(
                    f"{pair.describe()} and {pairs[lookup[pair.key]].describe()} are the same pair"
                )
            lookup[pair.key] = position

        n = len(pairs)
        sigmas = np.array([p.sigma for p in pairs], dtype=np.int64)
        taus = np.array([p.tau for p in pairs], dtype=np.int64)
        rows = np.arange(n)
        # sigma of x*y is x.sigma after y.sigma; tau of x*y is y.tau after x.tau
        prod_sigma = sigmas[rows[:, None, None], sigmas[None, :, :]]
        prod_tau = taus[rows[None, :, None], taus[:, None, :]]

        table = np.empty((n, n), dtype=np.int64)
        for x in range(n):
            for y in range(n):
                key = (tuple(prod_sigma[x, y].tolist()), tuple(prod_tau[x, y].tolist()))
                found = lookup.get(key)
                if found is None:
                    raise BandConstructionError(
                        f"product {pairs[x].describe()} * {pairs[y].describe()} is not in the set"
                    )
                table[x, y] = found

        labels = tuple(
            p.label if p.label is not None else ElementLabel.named(f"x{i}")
            for i, p in enumerate(pairs)
        )
        return cls(table, labels, tuple(pairs), index_sets, kernel, upper)

    @classmethod
    def from_table(
        cls, table: Union[np.ndarray, Sequence[Sequence[int]]], names: Optional[Sequence[str]] = None
    ) -> "Band":
        """Wraps a raw multiplication table; see :func:`is_band` for the band check.

        Raises:
            BandConstructionError: if the table is not square or has entries
                outside ``0..n-1``.
        """
        array = np.asarray(table, dtype=np.int64)
        if array.ndim != 2 or array.shape[0] != array.shape[1]:
            raise BandConstructionError(f"multiplication table must be square, got {array.shape}")
        n = array.shape[0]
        if n == 0:
            raise BandConstructionError("a band needs at least one element")
        if array.min() < 0 or array.max() >= n:
            raise BandConstructionError(f"table entries must lie in 0..{n - 1}")
        names = list(names) if names is not None else [f"x{i}" for i in range(n)]
        if len(names) != n or len(set(names)) != n:
            raise BandConstructionError("element names must be distinct, one per row")
        return cls(array, tuple(ElementLabel.named(name) for name in names))


def multiply(b: Band, x: int, y: int) -> int:
    """Returns the element of ``b`` equal to ``x*y``."""
    return b.multiply(x, y)


def load_band_json(source: Union[str, Path]) -> Band:
    """Reads a ``{"n": ..., "table": [[...]]}`` document (optionally with ``names``).

    Raises:
        FileNotFoundError: if ``source`` is a path that does not exist.
        BandConstructionError: if the document is malformed.
    """
    path = Path(source)
    if not path.is_file():
        raise FileNotFoundError(f"Band file not found at: {path}")
    try:
        document = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise BandConstructionError(f"Error decoding JSON from {path}: {e}") from e
    if not isinstance(document, dict) or "table" not in document:
        raise BandConstructionError(f"{path}: expected an object with a 'table' field")
    table: List[List[int]] = document["table"]
    n = document.get("n", len(table))
    if n != len(table):
        raise BandConstructionError(f"{path}: n={n} but the table has {len(table)} rows")
    return Band.from_table(table, document.get("names"))
