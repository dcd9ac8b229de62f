# src/ig_core/bands/grid.py

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from ig_core.errors import GridError

from .band import Band
from .green import GreenStructure
from .index_sets import IndexSymbol


@dataclass(frozen=True, eq=False)
class DClassGrid:
    """A D-class laid out as an ``I x J`` table of idempotents ``e_ij``.

    ``cells[i, j]`` is the element id in row ``i`` (an R-class) and column
    ``j`` (an L-class). Row and column tokens are safe to embed in generator
    names; row and column labels are for display.
    """

    d_index: int
    cells: np.ndarray
    row_labels: Tuple[str, ...]
    col_labels: Tuple[str, ...]
    row_tokens: Tuple[str, ...]
    col_tokens: Tuple[str, ...]
    row_symbols: Optional[Tuple[IndexSymbol, ...]] = None
    col_symbols: Optional[Tuple[IndexSymbol, ...]] = None

    @property
    def shape(self) -> Tuple[int, int]:
        return (int(self.cells.shape[0]), int(self.cells.shape[1]))

    @property
    def base(self) -> int:
        return int(self.cells[0, 0])

    def cell(self, i: int, j: int) -> int:
        return int(self.cells[i, j])

    def position_lookup(self, n: int) -> Tuple[np.ndarray, np.ndarray]:
        """Row and column of every band element, ``-1`` outside the grid."""
        rows = np.full(n, -1, dtype=np.int64)
        cols = np.full(n, -1, dtype=np.int64)
        for i in range(self.cells.shape[0]):
            for j in range(self.cells.shape[1]):
                rows[self.cells[i, j]] = i
                cols[self.cells[i, j]] = j
        return rows, cols

    def position(self, element: int) -> Tuple[int, int]:
        found = np.argwhere(self.cells == element)
        if not found.size:
            raise GridError(f"element {element} is not in this D-class")
        return int(found[0][0]), int(found[0][1])

    def contains(self, element: int) -> bool:
        return bool((self.cells == element).any())

    def row_index(self, label: str) -> int:
        return _lookup(self.row_labels, label, "row")

    def col_index(self, label: str) -> int:
        return _lookup(self.col_labels, label, "column")

    def is_rectangular(self, b: Band) -> bool:
        """Checks ``cell(i,j) * cell(k,l) = cell(i,l)`` for every pair of cells."""
        flat = self.cells.reshape(-1)
        n_rows, n_cols = self.shape
        products = b.table[np.ix_(flat, flat)].reshape(n_rows, n_cols, n_rows, n_cols)
        expected = np.broadcast_to(
            self.cells[:, None, None, :], (n_rows, n_cols, n_rows, n_cols)
        )
        return bool(np.array_equal(products, expected))


def _lookup(labels: Tuple[str, ...], label: str, what: str) -> int:
    try:
        return labels.index(label.strip())
    except ValueError:
        raise GridError(f"unknown {what} {label!r}") from None


def dclass_grid(b: Band, green: GreenStructure, d_index: int, base: int) -> DClassGrid:
    """Lays out D-class ``d_index`` as a grid with ``base`` in the first cell.

    For the minimal ideal of ``B_G`` rows and columns follow the index-set
    order, so the base ``K(0,0)`` sits at cell (0, 0); other classes order
    their R- and L-classes by least element after the base's own.

    Raises:
        GridError: if ``base`` is not in the D-class.
    """
    if not 0 <= d_index < len(green.d_classes):
        raise GridError(f"no D-class with index {d_index}")
    members = green.d_classes[d_index]
    if base not in members:
        raise GridError(f"{b.label(base)} is not in D-class {d_index}")

    if b.is_bg and b.index_sets is not None and set(members) == set(b.kernel):
        return _bg_kernel_grid(b, d_index, base)

    base_r, base_l = green.r_class_of[base], green.l_class_of[base]
    r_ids = sorted({green.r_class_of[x] for x in members}, key=lambda r: (r != base_r, r))
    l_ids = sorted({green.l_class_of[x] for x in members}, key=lambda c: (c != base_l, c))
    # any member of R-class r times any member of L-class c lands in cell (r, c)
    row_reps = [green.r_classes[r][0] for r in r_ids]
    col_reps = [green.l_classes[c][0] for c in l_ids]
    cells = b.table[np.ix_(row_reps, col_reps)].copy()

    row_labels = tuple(b.label(int(cells[i, 0])) for i in range(len(r_ids)))
    col_labels = tuple(b.label(int(cells[0, j])) for j in range(len(l_ids)))
    return DClassGrid(
        d_index,
        cells,
        row_labels,
        col_labels,
        tuple(f"r{i}" for i in range(len(r_ids))),
        tuple(f"c{j}" for j in range(len(l_ids))),
    )


def _bg_kernel_grid(b: Band, d_index: int, base: int) -> DClassGrid:
    assert b.index_sets is not None and b.pairs is not None
    index_sets = b.index_sets
    base_pair = b.pairs[base]
    base_row, base_col = base_pair.sigma[0], base_pair.tau[0]
    rows = [base_row] + [i for i in range(len(index_sets.I)) if i != base_row]
    cols = [base_col] + [j for j in range(len(index_sets.J)) if j != base_col]

    by_cell: Dict[Tuple[int, int], int] = {}
    for x in b.kernel:
        pair = b.pairs[x]
        by_cell[(pair.sigma[0], pair.tau[0])] = x
    cells = np.array([[by_cell[(i, j)] for j in cols] for i in rows], dtype=np.int64)

    row_symbols = tuple(index_sets.I[i] for i in rows)
    col_symbols = tuple(index_sets.J[j] for j in cols)
    return DClassGrid(
        d_index,
        cells,
        tuple(s.label for s in row_symbols),
        tuple(s.label for s in col_symbols),
        tuple(s.token for s in row_symbols),
        tuple(s.token for s in col_symbols),
        row_symbols,
        col_symbols,
    )


def kernel_grid(b: Band, green: GreenStructure, base: Optional[int] = None) -> DClassGrid:
    """Grid of the minimal ideal, based at ``K(0,0)`` for ``B_G``."""
    d_index = green.minimal_class()
    if base is None:
        base = b.index_of("K(0,0)") if b.is_bg else green.d_classes[d_index][0]
    return dclass_grid(b, green, d_index, base)
