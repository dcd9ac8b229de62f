# src/ig_core/squares/singular.py

"""Singular squares of a D-class grid.

A square ``(i, k; j, l)`` is singular, induced by an element ``f`` strictly
above the class, when either

    (left-right)  sigma(i) = i, sigma(k) = k and (j)tau = (l)tau in {j, l}
    (up-down)     sigma(i) = sigma(k) in {i, k} and (j)tau = j, (l)tau = l

Both conditions are symmetric in ``i, k`` and in ``j, l``, so squares are
reported once with ``i < k`` and ``j < l``.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Dict, List, Tuple

import numpy as np

from ig_core.bands import Band, DClassGrid, GreenStructure
from ig_core.errors import SquareComputationError
from ig_core.logging import log_step

from .actions import ActionMaps, action_maps


class SquareKind(str, Enum):
    LEFT_RIGHT = "left-right"
    UP_DOWN = "up-down"


_KIND_ORDER = {SquareKind.UP_DOWN: 0, SquareKind.LEFT_RIGHT: 1}


@dataclass(frozen=True)
class SingularSquare:
    i: int
    k: int
    j: int
    l: int  # noqa: E741
    kind: SquareKind
    witnesses: Tuple[int, ...]

    @property
    def quadruple(self) -> Tuple[int, int, int, int]:
        return (self.i, self.k, self.j, self.l)

    def render(self, grid: DClassGrid) -> str:
        r, c = grid.row_labels, grid.col_labels
        return f"({r[self.i]},{r[self.k]};{c[self.j]},{c[self.l]})"


def _left_right(maps: ActionMaps) -> List[Tuple[int, int, int, int]]:
    tau = maps.tau
    col_pairs = [
        (j, l)
        for j, l in combinations(range(len(tau)), 2)
        if tau[j] == tau[l] and tau[j] in (j, l)
    ]
    row_pairs = list(combinations(maps.fixed_rows(), 2))
    return [(i, k, j, l) for i, k in row_pairs for j, l in col_pairs]


def _up_down(maps: ActionMaps) -> List[Tuple[int, int, int, int]]:
    sigma = maps.sigma
    row_pairs = [
        (i, k)
        for i, k in combinations(range(len(sigma)), 2)
        if sigma[i] == sigma[k] and sigma[i] in (i, k)
    ]
    col_pairs = list(combinations(maps.fixed_cols(), 2))
    return [(i, k, j, l) for i, k in row_pairs for j, l in col_pairs]


def singular_squares(b: Band, green: GreenStructure, grid: DClassGrid) -> List[SingularSquare]:
    """Enumerates every singular square of ``grid`` with merged witness sets.

    Only elements strictly above the grid's D-class are considered as
    witnesses. The result is sorted row-major by ``(i, k, j, l)``.
    """
    found: Dict[Tuple[int, int, int, int, SquareKind], List[int]] = {}
    for f in green.elements_strictly_above(grid.d_index):
        maps = action_maps(b, green, f, grid)
        for quad in _left_right(maps):
            found.setdefault(quad + (SquareKind.LEFT_RIGHT,), []).append(f)
        for quad in _up_down(maps):
            found.setdefault(quad + (SquareKind.UP_DOWN,), []).append(f)

    squares = [
        SingularSquare(i, k, j, l, kind, tuple(sorted(set(witnesses))))
        for (i, k, j, l, kind), witnesses in found.items()
    ]
    squares.sort(key=lambda s: (s.quadruple, _KIND_ORDER[s.kind]))
    log_step(
        f"Singular squares: {count_by_kind(squares)[SquareKind.UP_DOWN]} up-down, "
        f"{count_by_kind(squares)[SquareKind.LEFT_RIGHT]} left-right"
    )
    return squares


def count_by_kind(squares: List[SingularSquare]) -> Dict[SquareKind, int]:
    counts = {kind: 0 for kind in SquareKind}
    for square in squares:
        counts[square.kind] += 1
    return counts


def is_singular_square_oracle(
    b: Band, green: GreenStructure, grid: DClassGrid, quad: Tuple[int, int, int, int]
) -> bool:
    """Decides singularity of one square from raw products, without action maps.

    Raises:
        SquareComputationError: for degenerate squares with ``i = k`` or ``j = l``.
    """
    i, k, j, l = quad  # noqa: E741
    if i == k or j == l:
        raise SquareComputationError(f"degenerate square {quad}")
    above = np.asarray(green.elements_strictly_above(grid.d_index), dtype=np.int64)
    if not above.size:
        return False
    rows, cols = grid.position_lookup(b.size)
    table = b.table

    sigma_i = rows[table[above, grid.cell(i, j)]]
    sigma_k = rows[table[above, grid.cell(k, j)]]
    tau_j = cols[table[grid.cell(i, j), above]]
    tau_l = cols[table[grid.cell(i, l), above]]

    left_right = (sigma_i == i) & (sigma_k == k) & (tau_j == tau_l) & ((tau_j == j) | (tau_j == l))
    up_down = (sigma_i == sigma_k) & ((sigma_i == i) | (sigma_i == k)) & (tau_j == j) & (tau_l == l)
    return bool((left_right | up_down).any())
