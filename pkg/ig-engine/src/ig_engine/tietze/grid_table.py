# src/ig_engine/tietze/grid_table.py

from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Sequence, Tuple

from ig_core.bands import DClassGrid, IndexBase, IndexSymbol
from ig_core.errors import GridError
from ig_core.presentations import Word, free_reduce

from ig_engine.presentations import cell_generator_names

from .trace import SimplificationTrace


@dataclass(frozen=True)
class GridTable:
    """The ``I x J`` table of group words ``a_ij`` left over by simplification."""

    entries: Tuple[Tuple[Word, ...], ...]
    row_labels: Tuple[str, ...]
    col_labels: Tuple[str, ...]
    phase: str = "final"

    @property
    def shape(self) -> Tuple[int, int]:
        return (len(self.row_labels), len(self.col_labels))

    def entry(self, i: int, j: int) -> Word:
        return self.entries[i][j]

    def entry_at(self, row: str, col: str) -> Word:
        try:
            return self.entries[self.row_labels.index(row)][self.col_labels.index(col)]
        except ValueError:
            raise GridError(f"no cell ({row},{col}) in this table") from None

    def is_normalized(self) -> bool:
        return all(w.is_empty() for w in self.entries[0]) and all(
            row[0].is_empty() for row in self.entries
        )


def _table(
    substitution: Mapping[str, Word], grid: DClassGrid, phase: str
) -> GridTable:
    names = cell_generator_names(grid)
    entries = tuple(
        tuple(free_reduce(substitution.get(name, Word.of(name))) for name in row)
        for row in names
    )
    return GridTable(entries, grid.row_labels, grid.col_labels, phase)


def grid_table(
    trace: SimplificationTrace, grid: DClassGrid, phase: Optional[str] = None
) -> GridTable:
    """Images of every ``f_ij`` under the trace's substitution.

    With ``phase`` the table reflects the substitution recorded at the end
    of that phase instead of the final one.

    Raises:
        GridError: if ``phase`` was not recorded by the trace.
    """
    if phase is None:
        return _table(trace.substitution, grid, "final")
    for name, substitution in trace.phases:
        if name == phase:
            return _table(substitution, grid, name)
    raise GridError(f"trace has no phase {phase!r}")


def phase_tables(trace: SimplificationTrace, grid: DClassGrid) -> Sequence[GridTable]:
    return [_table(substitution, grid, name) for name, substitution in trace.phases]


def expected_grid_entry(row: IndexSymbol, col: IndexSymbol) -> Word:
    """Closed form of the final table of ``B_G`` for a Cayley-form alphabet.

    Unprimed rows are ``1`` except column ``inf`` of a generator row, which
    reads that generator. Primed rows read the column's generator, and the
    row's generator in column ``inf``.
    """
    if row.primed and col.base is IndexBase.GEN:
        return Word.of(str(col.gen))
    if col.base is IndexBase.INFINITY and row.base is IndexBase.GEN:
        return Word.of(str(row.gen))
    return Word.empty()


def expected_grid_table(grid: DClassGrid) -> GridTable:
    """The closed-form table laid out like ``grid``.

    Raises:
        GridError: if ``grid`` is not the kernel grid of ``B_G``.
    """
    if grid.row_symbols is None or grid.col_symbols is None:
        raise GridError("the closed-form table exists only for the kernel of B_G")
    entries = tuple(
        tuple(expected_grid_entry(r, c) for c in grid.col_symbols) for r in grid.row_symbols
    )
    return GridTable(entries, grid.row_labels, grid.col_labels, "expected")


def cell_symbols(grid: DClassGrid) -> Dict[Tuple[int, int], Tuple[IndexSymbol, IndexSymbol]]:
    if grid.row_symbols is None or grid.col_symbols is None:
        return {}
    return {
        (i, j): (r, c)
        for i, r in enumerate(grid.row_symbols)
        for j, c in enumerate(grid.col_symbols)
    }


def render_grid_table(t: GridTable) -> str:
    """Aligned text with a header row of column labels; the identity prints as ``1``."""
    cells = [[""] + list(t.col_labels)]
    for label, row in zip(t.row_labels, t.entries):
        cells.append([label] + [w.render() for w in row])
    widths = [max(len(line[k]) for line in cells) for k in range(len(cells[0]))]
    lines = ["  ".join(v.ljust(w) for v, w in zip(line, widths)).rstrip() for line in cells]
    return "\n".join(lines) + "\n"
