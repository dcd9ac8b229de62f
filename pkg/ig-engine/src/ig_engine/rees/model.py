# src/ig_engine/rees/model.py

"""The minimal ideal of ``IG(B_G)`` as a Rees matrix semigroup over ``G``.

Elements are triples ``(i, g, j)`` with ``i`` a grid row, ``j`` a grid
column and ``g`` a canonical group word; the sandwich entry ``p[j][i]`` is
the inverse of the table entry ``a_ij``, which makes every
``(i, a_ij, j)`` idempotent.
"""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from ig_core.bands import Band, DClassGrid
from ig_core.logging import log_step
from ig_core.presentations import Word

from ig_engine.errors import ReesModelError
from ig_engine.groups import FiniteGroupOracle, GroupOracle
from ig_engine.tietze import GridTable


@dataclass(frozen=True)
class KbarForm:
    """An element ``(row, group, col)`` of the minimal ideal."""

    row: int
    group: Word
    col: int
    row_label: str = field(default="", compare=False)
    col_label: str = field(default="", compare=False)

    def render(self) -> str:
        return f"Kbar({self.row_label or self.row}, {self.group.render()}, {self.col_label or self.col})"


@dataclass(frozen=True)
class LbarForm:
    """An element of the left-zero part, named by the band element it came from."""

    element: int
    label: str = field(default="", compare=False)

    def render(self) -> str:
        return f"Lbar({self.label or self.element})"


@dataclass(frozen=True, eq=False)
class ReesModel:
    rows: Tuple[str, ...]
    cols: Tuple[str, ...]
    entries: Tuple[Tuple[Word, ...], ...]
    sandwich: Tuple[Tuple[Word, ...], ...]
    group: GroupOracle
    band: Optional[Band] = None
    grid: Optional[DClassGrid] = None

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def entry(self, i: int, j: int) -> Word:
        return self.entries[i][j]

    def p(self, j: int, i: int) -> Word:
        return self.sandwich[j][i]

    def kbar(self, row: int, group: Word, col: int) -> KbarForm:
        return KbarForm(row, self.group.canonical(group), col, self.rows[row], self.cols[col])

    def iota(self, i: int, j: int) -> KbarForm:
        return self.kbar(i, self.entries[i][j], j)


def rees_multiply(m: ReesModel, x: KbarForm, y: KbarForm) -> KbarForm:
    """``(i, g, j)(k, h, l) = (i, g p_jk h, l)``."""
    return m.kbar(x.row, m.group.product(x.group, m.p(x.col, y.row), y.group), y.col)


def build_rees_model(
    t: GridTable,
    o: GroupOracle,
    band: Optional[Band] = None,
    grid: Optional[DClassGrid] = None,
) -> ReesModel:
    """Builds ``M(G; I, J; P)`` with ``p_ji = a_ij^-1``.

    In finite mode the normalization of ``P`` and the idempotency of every
    ``(i, a_ij, j)`` are checked exhaustively.

    Raises:
        ReesModelError: if the base row or column of ``P`` is not the
            identity, or some cell fails the idempotency check.
    """
    n_rows, n_cols = t.shape
    if grid is not None and grid.shape != t.shape:
        raise ReesModelError(f"grid shape {grid.shape} does not match table shape {t.shape}")
    entries = tuple(tuple(o.canonical(t.entry(i, j)) for j in range(n_cols)) for i in range(n_rows))
    sandwich = tuple(
        tuple(o.inverse(entries[i][j]) for i in range(n_rows)) for j in range(n_cols)
    )
    model = ReesModel(t.row_labels, t.col_labels, entries, sandwich, o, band, grid)

    for i in range(n_rows):
        if o.equal(sandwich[0][i], o.identity) is False:
            raise ReesModelError(f"sandwich entry p[{t.col_labels[0]}][{t.row_labels[i]}] is not 1")
    for j in range(n_cols):
        if o.equal(sandwich[j][0], o.identity) is False:
            raise ReesModelError(f"sandwich entry p[{t.col_labels[j]}][{t.row_labels[0]}] is not 1")

    if o.is_finite:
        for i in range(n_rows):
            for j in range(n_cols):
                e = model.iota(i, j)
                if rees_multiply(model, e, e) != e:
                    raise ReesModelError(
                        f"({t.row_labels[i]}, {entries[i][j].render()}, {t.col_labels[j]}) "
                        "is not idempotent"
                    )
    log_step(f"Rees model over a {n_rows}x{n_cols} grid ({o.mode} group)")
    return model


def base_h_class(m: ReesModel) -> List[KbarForm]:
    """The group ``{(0, g, 0)}`` of the base idempotent (finite mode only).

    Raises:
        ReesModelError: in symbolic mode.
    """
    if not isinstance(m.group, FiniteGroupOracle):
        raise ReesModelError("the base H-class can only be listed over a finite group")
    return [m.kbar(0, g, 0) for g in m.group.elements()]


def is_closed_group(m: ReesModel, elements: List[KbarForm]) -> bool:
    """Checks closure of ``elements`` under Rees multiplication and that ``iota(0,0)`` is among them."""
    members = set(elements)
    if m.iota(0, 0) not in members:
        return False
    return all(rees_multiply(m, x, y) in members for x in elements for y in elements)


@dataclass(frozen=True)
class ReesCheck:
    idempotent_cells: int
    cells: int
    basic_pairs_checked: int
    basic_pair_failures: List[str]
    h_class_order: Optional[int]

    @property
    def ok(self) -> bool:
        return self.idempotent_cells == self.cells and not self.basic_pair_failures


def check_rees_model(m: ReesModel) -> ReesCheck:
    """Idempotency of every ``iota(e_ij)``, ``iota(e)iota(f) = iota(ef)`` on basic pairs of
    the minimal ideal, and the order of the base H-class (finite mode)."""
    n_rows, n_cols = m.shape
    idempotent = 0
    for i in range(n_rows):
        for j in range(n_cols):
            e = m.iota(i, j)
            if rees_multiply(m, e, e) == e:
                idempotent += 1

    failures: List[str] = []
    checked = 0
    if m.grid is not None and m.band is not None and m.group.is_finite:
        cells = m.grid.cells.reshape(-1)
        rows, cols = m.grid.position_lookup(m.band.size)
        products = m.band.table[np.ix_(cells, cells)]
        for x_pos, x in enumerate(cells):
            for y_pos, y in enumerate(cells):
                xy, yx = int(products[x_pos, y_pos]), int(products[y_pos, x_pos])
                if not {xy, yx} & {int(x), int(y)}:
                    continue
                checked += 1
                ex = m.iota(int(rows[x]), int(cols[x]))
                ey = m.iota(int(rows[y]), int(cols[y]))
                left = rees_multiply(m, ex, ey)
                if left != m.iota(int(rows[xy]), int(cols[xy])):
                    failures.append(f"{m.band.label(int(x))} * {m.band.label(int(y))}")

    order = None
    if isinstance(m.group, FiniteGroupOracle):
        elements = base_h_class(m)
        order = len(set(elements)) if is_closed_group(m, elements) else None
    return ReesCheck(idempotent, n_rows * n_cols, checked, failures, order)
