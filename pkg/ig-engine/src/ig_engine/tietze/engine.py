# src/ig_engine/tietze/engine.py

"""Tietze moves on group presentations, with tracing.

Relations keep their ``lhs = rhs`` shape; every move that touches a
relation freely reduces both sides. Relations that become trivial are
dropped; equal relations are never merged.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ig_core.logging import log_step
from ig_core.presentations import (
    GenSymbol,
    GroupPresentation,
    Relation,
    Word,
    canonical_relator,
    free_reduce,
    substitute,
)

from ig_engine.errors import EliminationError, EnumerationOverflow, TietzeError
from ig_engine.groups import todd_coxeter

from .trace import Checkpoint, SimplificationTrace, StepKind, TraceStep


def _mentions(relation: Relation, name: str) -> bool:
    return name in relation.lhs.names or name in relation.rhs.names


def _defining_index(relations: Sequence[Relation], g: str, w: Word) -> Optional[int]:
    target = canonical_relator(Word.of(g) * w.inverse())
    for index, relation in enumerate(relations):
        if _mentions(relation, g) and canonical_relator(relation.relator()) == target:
            return index
    return None


def _check_elimination(names: Sequence[str], relations: Sequence[Relation], g: str, w: Word) -> None:
    if g not in names:
        raise EliminationError(f"{g} is not a generator")
    if g in w.names:
        raise EliminationError(f"{g} occurs in its own defining word {w.render()}")
    unknown = w.names - set(names)
    if unknown:
        raise EliminationError(f"defining word uses unknown generators {sorted(unknown)}")
    if _defining_index(relations, g, w) is None:
        raise EliminationError(f"no relation defines {g} = {w.render()}")


def _substituted(relation: Relation, g: str, w: Word) -> Relation:
    images = {g: w}
    return Relation(substitute(relation.lhs, images), substitute(relation.rhs, images), relation.source)


def eliminate_generator(p: GroupPresentation, g: str, w: Word) -> GroupPresentation:
    """Removes ``g`` using a relation equivalent to ``g = w``.

    Raises:
        EliminationError: if ``g`` occurs in ``w`` or no relation of ``p``
            reduces to ``g = w``.
    """
    w = free_reduce(w)
    _check_elimination(p.generator_names(), p.relations, g, w)
    relations = []
    for relation in p.relations:
        if _mentions(relation, g):
            relation = _substituted(relation, g, w)
        if not relation.is_trivial():
            relations.append(relation)
    return GroupPresentation(
        tuple(s for s in p.generators if s.name != g), tuple(relations)
    )


def remove_trivial(p: GroupPresentation) -> GroupPresentation:
    return GroupPresentation(p.generators, tuple(r for r in p.relations if not r.is_trivial()))


def reduce_relations(p: GroupPresentation) -> GroupPresentation:
    return GroupPresentation(
        p.generators,
        tuple(Relation(free_reduce(r.lhs), free_reduce(r.rhs), r.source) for r in p.relations),
    )


def rename_generator(p: GroupPresentation, old: str, new: str) -> GroupPresentation:
    if new in p.generator_names():
        raise TietzeError(f"cannot rename {old} to existing generator {new}")
    images = {old: Word.of(new)}
    return GroupPresentation(
        tuple(GenSymbol(new, s.origin) if s.name == old else s for s in p.generators),
        tuple(
            Relation(substitute(r.lhs, images), substitute(r.rhs, images), r.source)
            for r in p.relations
        ),
    )


@dataclass
class CheckpointPolicy:
    enabled: bool = False
    interval: int = 10
    max_cosets: int = 20_000


class TietzeState:
    """Mutable presentation plus the trace of the moves applied to it.

    ``tags`` run parallel to ``relations`` and carry whatever provenance the
    caller attached; they follow their relation through every move.
    """

    def __init__(
        self,
        p: GroupPresentation,
        strategy: str,
        tags: Optional[Sequence[Any]] = None,
        checkpoints: Optional[CheckpointPolicy] = None,
    ):
        self.generators: List[GenSymbol] = list(p.generators)
        self.relations: List[Relation] = list(p.relations)
        self.tags: List[Any] = list(tags) if tags is not None else [None] * len(self.relations)
        self.substitution: Dict[str, Word] = {name: Word.of(name) for name in p.generator_names()}
        self.original_of: Dict[str, str] = {name: name for name in p.generator_names()}
        self.trace = SimplificationTrace(strategy)
        self.policy = checkpoints or CheckpointPolicy()
        self.phase = ""
        self._reference_order: Optional[int] = None

    @property
    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    def size(self) -> Tuple[int, int]:
        return (len(self.generators), len(self.relations))

    def presentation(self) -> GroupPresentation:
        return GroupPresentation(tuple(self.generators), tuple(self.relations))

    def _record(self, step: TraceStep) -> None:
        self.trace.steps.append(step)

    def normalize(self) -> None:
        """Freely reduces every relation and drops the trivial ones."""
        before = self.size()
        reduced = [Relation(free_reduce(r.lhs), free_reduce(r.rhs), r.source) for r in self.relations]
        if reduced != self.relations:
            self.relations = reduced
            self._record(TraceStep(StepKind.FREE_REDUCE, before, self.size(), phase=self.phase))
        self._drop_trivial()

    def _drop_trivial(self) -> None:
        before = self.size()
        keep = [k for k, r in enumerate(self.relations) if not r.is_trivial()]
        if len(keep) == len(self.relations):
            return
        self.relations = [self.relations[k] for k in keep]
        self.tags = [self.tags[k] for k in keep]
        self._record(TraceStep(StepKind.REMOVE_TRIVIAL, before, self.size(), phase=self.phase))

    def defining_index(self, g: str, w: Word) -> Optional[int]:
        return _defining_index(self.relations, g, w)

    def eliminate(self, g: str, w: Word) -> None:
        """Eliminates ``g = w``; see :func:`eliminate_generator`."""
        w = free_reduce(w)
        _check_elimination(self.names, self.relations, g, w)
        before = self.size()
        self.relations = [
            _substituted(r, g, w) if _mentions(r, g) else r for r in self.relations
        ]
        self.generators = [s for s in self.generators if s.name != g]
        for name, image in self.substitution.items():
            if g in image.names:
                self.substitution[name] = substitute(image, {g: w})
        self._record(
            TraceStep(
                StepKind.ELIMINATE,
                before,
                (before[0] - 1, before[1]),
                generator=g,
                word=w,
                phase=self.phase,
            )
        )
        self._drop_trivial()
        if self.policy.enabled and self.trace.eliminations % self.policy.interval == 0:
            self.checkpoint()

    def reorient(self, index: int, relation: Relation) -> None:
        """Replaces relation ``index`` by an equivalent one.

        Raises:
            TietzeError: if the new relation defines a different normal closure
                element (up to cyclic permutation and inversion).
        """
        current = self.relations[index]
        if canonical_relator(current.relator()) != canonical_relator(relation.relator()):
            raise TietzeError(
                f"{relation.render()} is not equivalent to {current.render()}"
            )
        relation = Relation(relation.lhs, relation.rhs, current.source)
        before = self.size()
        self.relations[index] = relation
        self._record(
            TraceStep(
                StepKind.REORIENT,
                before,
                before,
                relation_index=index,
                relation=relation,
                phase=self.phase,
            )
        )

    def rename(self, old: str, new: str) -> None:
        if new in self.names:
            raise TietzeError(f"cannot rename {old} to existing generator {new}")
        before = self.size()
        images = {old: Word.of(new)}
        self.generators = [GenSymbol(new, s.origin) if s.name == old else s for s in self.generators]
        self.relations = [
            Relation(substitute(r.lhs, images), substitute(r.rhs, images), r.source)
            for r in self.relations
        ]
        for name, image in self.substitution.items():
            if old in image.names:
                self.substitution[name] = substitute(image, images)
        self.original_of[new] = self.original_of.pop(old, old)
        self._record(
            TraceStep(StepKind.RENAME, before, before, generator=old, new_name=new, phase=self.phase)
        )

    def snapshot(self, phase: str) -> None:
        self.trace.phases.append((phase, dict(self.substitution)))
        log_step(f"Tietze phase '{phase}' done: {self.size()[0]} generators, {self.size()[1]} relations")

    def checkpoint(self) -> None:
        """Compares the current group order with the order before simplification."""
        if not self.policy.enabled:
            return
        eliminations = self.trace.eliminations
        try:
            order: Optional[int] = todd_coxeter(self.presentation(), self.policy.max_cosets).n
        except EnumerationOverflow:
            order = None
        if eliminations == 0 and not self.trace.checkpoints:
            self._reference_order = order
            self.trace.checkpoints.append(Checkpoint(0, order, "reference" if order else "unknown"))
            if order is None:
                self.policy.enabled = False
                self.trace.warnings.append(
                    "initial presentation did not enumerate within the checkpoint limit; "
                    "checkpoints skipped"
                )
            return
        if order is None or self._reference_order is None:
            status = "unknown"
        else:
            status = "pass" if order == self._reference_order else "fail"
        self.trace.checkpoints.append(Checkpoint(eliminations, order, status))


def replay_trace(p: GroupPresentation, trace: SimplificationTrace) -> GroupPresentation:
    """Re-applies the moves of ``trace`` to ``p`` and returns the result."""
    current = p
    for step in trace.steps:
        if step.kind is StepKind.FREE_REDUCE:
            current = reduce_relations(current)
        elif step.kind is StepKind.REMOVE_TRIVIAL:
            current = remove_trivial(current)
        elif step.kind is StepKind.ELIMINATE:
            assert step.generator is not None and step.word is not None
            current = eliminate_generator(current, step.generator, step.word)
        elif step.kind is StepKind.REORIENT:
            assert step.relation is not None and step.relation_index is not None
            relations = list(current.relations)
            old = relations[step.relation_index]
            if canonical_relator(old.relator()) != canonical_relator(step.relation.relator()):
                raise TietzeError(f"replay: reorientation of relation {step.relation_index} is not a Tietze move")
            relations[step.relation_index] = step.relation
            current = GroupPresentation(current.generators, tuple(relations))
        elif step.kind is StepKind.RENAME:
            assert step.generator is not None and step.new_name is not None
            current = rename_generator(current, step.generator, step.new_name)
    return current
