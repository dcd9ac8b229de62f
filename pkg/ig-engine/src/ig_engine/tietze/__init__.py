# src/ig_engine/tietze/__init__.py

from .engine import (
    CheckpointPolicy,
    TietzeState,
    eliminate_generator,
    reduce_relations,
    remove_trivial,
    rename_generator,
    replay_trace,
)
from .grid_table import (
    GridTable,
    cell_symbols,
    expected_grid_entry,
    expected_grid_table,
    grid_table,
    phase_tables,
    render_grid_table,
)
from .strategies import (
    GREEDY,
    PAPER,
    GreedyStrategy,
    PaperStrategy,
    SimplificationStrategy,
    SimplifyOptions,
    relation_triples,
    simplify,
    strategy_named,
)
from .trace import Checkpoint, SimplificationTrace, StepKind, TraceStep

__all__ = [
    "Checkpoint",
    "CheckpointPolicy",
    "GREEDY",
    "GreedyStrategy",
    "GridTable",
    "PAPER",
    "PaperStrategy",
    "SimplificationStrategy",
    "SimplificationTrace",
    "SimplifyOptions",
    "StepKind",
    "TietzeState",
    "TraceStep",
    "cell_symbols",
    "eliminate_generator",
    "expected_grid_entry",
    "expected_grid_table",
    "grid_table",
    "phase_tables",
    "reduce_relations",
    "relation_triples",
    "remove_trivial",
    "rename_generator",
    "render_grid_table",
    "replay_trace",
    "simplify",
    "strategy_named",
]
