# src/ig_engine/presentations/maximal.py

"""Presentation of the maximal subgroup of ``IG(E)`` at a base idempotent.

Generators are the symbols ``f_ij`` for all cells of the grid; relations
force the base row and column to ``1`` and give, for every singular square
``(i, k; j, l)``, the relator ``f_ij^-1 f_il f_kl^-1 f_kj``.
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ig_core.bands import Band, DClassGrid, IndexSymbol
from ig_core.logging import log_step
from ig_core.presentations import (
    GenOrigin,
    GenSymbol,
    GroupPresentation,
    OriginKind,
    Relation,
    Word,
    canonical_relator,
)
from ig_core.squares import SingularSquare

from ig_engine.errors import TietzeError


@dataclass(frozen=True)
class FGenSymbol:
    """The generator ``f_ij`` attached to grid cell ``(row, col)``."""

    row: int
    col: int
    name: str


@dataclass(frozen=True)
class RelationProvenance:
    """Why a relation is present: ``base-row``, ``base-col``, ``up-down`` or ``left-right``."""

    kind: str
    square: Optional[SingularSquare] = None
    witnesses: Tuple[str, ...] = ()


@dataclass(frozen=True)
class IgPresentation:
    generators: Tuple[FGenSymbol, ...]
    relations: Tuple[Relation, ...]
    provenance: Tuple[RelationProvenance, ...]
    base: Tuple[int, int]
    shape: Tuple[int, int]
    row_labels: Tuple[str, ...]
    col_labels: Tuple[str, ...]
    row_symbols: Optional[Tuple[IndexSymbol, ...]] = None
    col_symbols: Optional[Tuple[IndexSymbol, ...]] = None

    def name(self, row: int, col: int) -> str:
        return self.generators[row * self.shape[1] + col].name

    def cell_of(self) -> Dict[str, Tuple[int, int]]:
        return {g.name: (g.row, g.col) for g in self.generators}

    def generator_names(self) -> Tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def line_one_relations(self) -> List[Relation]:
        return [
            r for r, p in zip(self.relations, self.provenance) if p.kind.startswith("base")
        ]

    def line_two_relations(self) -> List[Relation]:
        return [
            r for r, p in zip(self.relations, self.provenance) if not p.kind.startswith("base")
        ]

    def base_names(self) -> Tuple[str, str]:
        """The base cell as grid labels and in the ``(1, 1)`` convention."""
        i, j = self.base
        return (f"({self.row_labels[i]},{self.col_labels[j]})", "(1,1)")

    def as_group_presentation(self) -> GroupPresentation:
        return GroupPresentation(
            tuple(GenSymbol(g.name, GenOrigin(OriginKind.CELL)) for g in self.generators),
            self.relations,
        )

    def render(self) -> str:
        return self.as_group_presentation().render()


def cell_generator_names(grid: DClassGrid) -> List[List[str]]:
    names = [[f"f_{r}_{c}" for c in grid.col_tokens] for r in grid.row_tokens]
    flat = [n for row in names for n in row]
    if len(set(flat)) != len(flat):
        n_rows, n_cols = grid.shape
        names = [[f"f_r{i}_c{j}" for j in range(n_cols)] for i in range(n_rows)]
    return names


def maximal_subgroup_presentation(
    b: Band,
    grid: DClassGrid,
    squares: Sequence[SingularSquare],
    base: Tuple[int, int] = (0, 0),
) -> IgPresentation:
    """Builds the maximal-subgroup presentation at the base cell of ``grid``.

    Raises:
        TietzeError: if ``base`` lies outside the grid.
    """
    n_rows, n_cols = grid.shape
    base_row, base_col = base
    if not (0 <= base_row < n_rows and 0 <= base_col < n_cols):
        raise TietzeError(f"base {base} outside the {n_rows}x{n_cols} grid")

    names = cell_generator_names(grid)
    generators = tuple(
        FGenSymbol(i, j, names[i][j]) for i in range(n_rows) for j in range(n_cols)
    )

    relations: List[Relation] = []
    provenance: List[RelationProvenance] = []
    seen: Set[tuple] = set()

    def add(relation: Relation, origin: RelationProvenance) -> None:
        key = canonical_relator(relation.relator())
        if key in seen:
            return
        seen.add(key)
        relations.append(relation)
        provenance.append(origin)

    for j in range(n_cols):
        add(
            Relation(Word.of(names[base_row][j]), source="base row"),
            RelationProvenance("base-row"),
        )
    for i in range(n_rows):
        add(
            Relation(Word.of(names[i][base_col]), source="base column"),
            RelationProvenance("base-col"),
        )

    for square in squares:
        i, k, j, l = square.quadruple  # noqa: E741
        relator = (
            Word.of(names[i][j]).inverse()
            * Word.of(names[i][l])
            * Word.of(names[k][l]).inverse()
            * Word.of(names[k][j])
        )
        witnesses = tuple(b.label(w) for w in square.witnesses)
        add(
            Relation(relator, source=f"{square.kind.value} {square.render(grid)}"),
            RelationProvenance(square.kind.value, square, witnesses),
        )

    log_step(
        f"Maximal subgroup presentation: {len(generators)} generators, "
        f"{len(relations)} relations"
    )
    return IgPresentation(
        generators,
        tuple(relations),
        tuple(provenance),
        base,
        (n_rows, n_cols),
        grid.row_labels,
        grid.col_labels,
        grid.row_symbols,
        grid.col_symbols,
    )
