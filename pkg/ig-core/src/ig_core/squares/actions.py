# src/ig_core/squares/actions.py

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from ig_core.bands import Band, DClassGrid, GreenStructure
from ig_core.errors import SquareComputationError


@dataclass(frozen=True)
class ActionMaps:
    """The idempotent maps an element ``f`` induces on a grid.

    ``f * e_ij = e_{sigma(i), j}`` and ``e_ij * f = e_{i, (j)tau}``.
    """

    witness: int
    sigma: Tuple[int, ...]
    tau: Tuple[int, ...]

    def fixed_rows(self) -> Tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.sigma) if v == i)

    def fixed_cols(self) -> Tuple[int, ...]:
        return tuple(j for j, v in enumerate(self.tau) if v == j)


def action_maps(
    b: Band, green: GreenStructure, f: int, grid: DClassGrid
) -> ActionMaps:
    """Reads ``sigma`` and ``tau`` of ``f`` off the products with the grid cells.

    Raises:
        SquareComputationError: if ``f`` is not strictly above the grid's
            D-class, or the products are inconsistent across rows/columns.
    """
    if not green.is_strictly_above(green.d_class_of[f], grid.d_index):
        raise SquareComputationError(
            f"{b.label(f)} is not strictly above D-class {grid.d_index}"
        )
    rows, cols = grid.position_lookup(b.size)
    n_rows, n_cols = grid.shape

    left = b.table[f][grid.cells]  # f * e_ij
    right = b.table[:, f][grid.cells]  # e_ij * f
    left_rows, left_cols = rows[left], cols[left]
    right_rows, right_cols = rows[right], cols[right]

    if (left_rows < 0).any() or (right_rows < 0).any():
        raise SquareComputationError(f"products with {b.label(f)} leave the D-class")
    if not (left_cols == np.arange(n_cols)[None, :]).all():
        raise SquareComputationError(f"{b.label(f)} * e_ij changes the column")
    if not (right_rows == np.arange(n_rows)[:, None]).all():
        raise SquareComputationError(f"e_ij * {b.label(f)} changes the row")
    if not (left_rows == left_rows[:, :1]).all():
        raise SquareComputationError(f"sigma of {b.label(f)} depends on the column")
    if not (right_cols == right_cols[:1, :]).all():
        raise SquareComputationError(f"tau of {b.label(f)} depends on the row")

    sigma = left_rows[:, 0]
    tau = right_cols[0, :]
    if not (np.array_equal(sigma[sigma], sigma) and np.array_equal(tau[tau], tau)):
        raise SquareComputationError(f"maps induced by {b.label(f)} are not idempotent")
    return ActionMaps(f, tuple(int(v) for v in sigma), tuple(int(v) for v in tau))
