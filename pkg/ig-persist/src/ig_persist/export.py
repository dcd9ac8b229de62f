# src/ig_persist/export.py

"""Conversions from pipeline objects to their JSON documents."""

from typing import Sequence

from ig_core.bands import Band, DClassGrid
from ig_core.squares import SingularSquare, count_by_kind
from ig_engine.groups import CosetTable
from ig_engine.tietze import SimplificationTrace

from .models import (
    CheckpointRecord,
    CosetTableDocument,
    PhaseRecord,
    SquareRecord,
    SquaresDocument,
    TraceDocument,
    TraceStepRecord,
)


def squares_document(
    b: Band, grid: DClassGrid, squares: Sequence[SingularSquare]
) -> SquaresDocument:
    records = [
        SquareRecord(
            rows=[grid.row_labels[s.i], grid.row_labels[s.k]],
            cols=[grid.col_labels[s.j], grid.col_labels[s.l]],
            kind=s.kind.value,
            witnesses=[b.label(w) for w in s.witnesses],
        )
        for s in squares
    ]
    counts = {kind.value: n for kind, n in count_by_kind(list(squares)).items()}
    return SquaresDocument(grid_shape=list(grid.shape), counts=counts, squares=records)


def coset_table_document(table: CosetTable) -> CosetTableDocument:
    return CosetTableDocument(
        n=table.n,
        generators=list(table.generators),
        columns=table.column_labels(),
        action=table.action.tolist(),
        origin=table.origin,
    )


def trace_document(trace: SimplificationTrace) -> TraceDocument:
    steps = [
        TraceStepRecord(
            kind=s.kind.value,
            before=list(s.before),
            after=list(s.after),
            generator=s.generator,
            word=s.word.render() if s.word is not None else None,
            relation_index=s.relation_index,
            relation=s.relation.render() if s.relation is not None else None,
            new_name=s.new_name,
            phase=s.phase,
        )
        for s in trace.steps
    ]
    return TraceDocument(
        strategy=trace.strategy,
        steps=steps,
        substitution={g: w.render() for g, w in trace.substitution.items()},
        survivors=list(trace.survivors),
        checkpoints=[
            CheckpointRecord(eliminations=c.eliminations, order=c.order, status=c.status)
            for c in trace.checkpoints
        ],
        phases=[
            PhaseRecord(name=name, substitution={g: w.render() for g, w in sub.items()})
            for name, sub in trace.phases
        ],
        warnings=list(trace.warnings),
    )
