# src/ig_engine/tietze/trace.py

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from ig_core.presentations import Relation, Word


class StepKind(str, Enum):
    ELIMINATE = "eliminate"
    REMOVE_TRIVIAL = "remove-trivial"
    FREE_REDUCE = "free-reduce"
    REORIENT = "reorient"
    RENAME = "rename"


@dataclass(frozen=True)
class TraceStep:
    """One Tietze move with presentation sizes ``(generators, relations)``."""

    kind: StepKind
    before: Tuple[int, int]
    after: Tuple[int, int]
    generator: Optional[str] = None
    word: Optional[Word] = None
    relation_index: Optional[int] = None
    relation: Optional[Relation] = None
    new_name: Optional[str] = None
    phase: str = ""

    def describe(self) -> str:
        if self.kind is StepKind.ELIMINATE:
            return f"eliminate {self.generator} = {self.word.render() if self.word else '1'}"
        if self.kind is StepKind.REORIENT and self.relation is not None:
            return f"reorient relation {self.relation_index} as {self.relation.render()}"
        if self.kind is StepKind.RENAME:
            return f"rename {self.generator} -> {self.new_name}"
        dropped = self.before[1] - self.after[1]
        return f"{self.kind.value}: {dropped} relation(s) dropped"


@dataclass(frozen=True)
class Checkpoint:
    """Group order at a given number of eliminations; ``order`` is ``None`` on overflow."""

    eliminations: int
    order: Optional[int]
    status: str


@dataclass
class SimplificationTrace:
    """Full log of a simplification run.

    ``substitution`` maps every original generator to a word over the
    surviving (renamed) generators. ``survivor_cells`` records the grid cell
    each surviving generator came from, and ``phases`` holds a copy of the
    substitution after each named phase of the run.
    """

    strategy: str
    steps: List[TraceStep] = field(default_factory=list)
    substitution: Dict[str, Word] = field(default_factory=dict)
    survivors: Tuple[str, ...] = ()
    survivor_cells: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    checkpoints: List[Checkpoint] = field(default_factory=list)
    phases: List[Tuple[str, Dict[str, Word]]] = field(default_factory=list)
    warnings: List[str] = field(default_factory=list)

    @property
    def eliminations(self) -> int:
        return sum(1 for s in self.steps if s.kind is StepKind.ELIMINATE)

    def steps_of(self, kind: StepKind) -> List[TraceStep]:
        return [s for s in self.steps if s.kind is kind]

    def checkpoint_status(self) -> str:
        """``pass`` unless some checkpoint failed; ``unknown`` if none were decided."""
        statuses = {c.status for c in self.checkpoints}
        if "fail" in statuses:
            return "fail"
        if "pass" in statuses:
            return "pass"
        return "unknown" if self.checkpoints else "skipped"
