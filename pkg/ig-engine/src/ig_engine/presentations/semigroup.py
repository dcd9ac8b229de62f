# src/ig_engine/presentations/semigroup.py

"""The defining presentation of ``IG(E)``: generators ``E``, one relation
``e*f = ef`` for every ordered basic pair.
"""

from dataclasses import dataclass
from typing import List, Tuple

import numpy as np

from ig_core.bands import Band
from ig_core.logging import log_step


@dataclass(frozen=True)
class BasicRelation:
    left: int
    right: int
    product: int


@dataclass(frozen=True)
class SemigroupPresentation:
    generators: Tuple[str, ...]
    relations: Tuple[BasicRelation, ...]

    def render(self) -> str:
        lines = ["# IG(E) generators: " + " ".join(self.generators)]
        for r in self.relations:
            lines.append(
                f"{self.generators[r.left]} * {self.generators[r.right]} = "
                f"{self.generators[r.product]}"
            )
        return "\n".join(lines) + "\n"


def basic_pair_mask(b: Band) -> np.ndarray:
    """``mask[e, f]`` is true iff ``{ef, fe}`` meets ``{e, f}``."""
    table = b.table
    ids = np.arange(b.size)
    ef, fe = table, table.T
    return (
        (ef == ids[:, None])
        | (ef == ids[None, :])
        | (fe == ids[:, None])
        | (fe == ids[None, :])
    )


def is_basic_pair(b: Band, e: int, f: int) -> bool:
    return bool({b.multiply(e, f), b.multiply(f, e)} & {e, f})


def ig_presentation(b: Band) -> SemigroupPresentation:
    relations: List[BasicRelation] = [
        BasicRelation(int(e), int(f), b.multiply(int(e), int(f)))
        for e, f in np.argwhere(basic_pair_mask(b))
    ]
    log_step(f"IG(E) presentation: {b.size} generators, {len(relations)} relations")
    return SemigroupPresentation(tuple(b.label(x) for x in range(b.size)), tuple(relations))
