# src/ig_core/bands/checks.py

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple, Union

import numpy as np

from .band import Band
from .transformations import TransformationPair, compose_pairs


@dataclass(frozen=True)
class BandCheck:
    """Verdict of :func:`is_band`; ``counterexample`` holds element ids."""

    ok: bool
    failure: Optional[str] = None
    counterexample: Tuple[int, ...] = ()

    def describe(self) -> str:
        if self.ok:
            return "ok"
        return f"{self.failure} fails at {self.counterexample}"


def is_band_table(table: Union[np.ndarray, Sequence[Sequence[int]]]) -> BandCheck:
    """Checks closure, idempotency and associativity of a full table."""
    array = np.asarray(table, dtype=np.int64)
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        return BandCheck(False, "closure", ())
    n = array.shape[0]
    outside = np.argwhere((array < 0) | (array >= n))
    if outside.size:
        x, y = outside[0]
        return BandCheck(False, "closure", (int(x), int(y)))

    diagonal = array[np.arange(n), np.arange(n)]
    not_idempotent = np.flatnonzero(diagonal != np.arange(n))
    if not_idempotent.size:
        return BandCheck(False, "idempotency", (int(not_idempotent[0]),))

    for x in range(n):
        # left[y, z] = (x*y)*z, right[y, z] = x*(y*z)
        left = array[array[x]]
        right = array[x][array]
        bad = np.argwhere(left != right)
        if bad.size:
            y, z = bad[0]
            return BandCheck(False, "associativity", (x, int(y), int(z)))
    return BandCheck(True)


def is_band_pairs(pairs: Sequence[TransformationPair]) -> BandCheck:
    """Checks closure and idempotency of a set of transformation pairs.

    Associativity is inherited from composition of maps and is not tested.
    """
    lookup: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = {
        p.key: position for position, p in enumerate(pairs)
    }
    for position, pair in enumerate(pairs):
        if not pair.is_idempotent():
            return BandCheck(False, "idempotency", (position,))
    for x, left in enumerate(pairs):
        for y, right in enumerate(pairs):
            if compose_pairs(left, right).key not in lookup:
                return BandCheck(False, "closure", (x, y))
    return BandCheck(True)


def is_band(b: Union[Band, Sequence[TransformationPair]]) -> BandCheck:
    """Checks that ``b`` is a band and returns the first counterexample otherwise.

    Transformation-backed input skips the associativity test; table input
    is checked in full.
    """
    if isinstance(b, Band):
        if b.pairs is not None:
            return is_band_pairs(b.pairs)
        return is_band_table(b.table)
    return is_band_pairs(b)
