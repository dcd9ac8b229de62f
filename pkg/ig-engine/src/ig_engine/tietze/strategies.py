# src/ig_engine/tietze/strategies.py

"""Simplification strategies for maximal-subgroup presentations.

The ``paper`` strategy eliminates the generators of the ``B_G`` kernel grid
in a fixed order (base row and column, the up-down consequences, the
left-right relations by witness type) and leaves one relation
``f_0'a * f_0'b = f_0'c`` per input triple, then renames ``f_0'a`` to ``a``.
The ``greedy`` strategy works on any presentation.
"""

from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ig_core.bands import ElementLabel, IndexBase, IndexSymbol, LabelKind
from ig_core.errors import WordSyntaxError
from ig_core.logging import log_step, warn
from ig_core.presentations import GroupPresentation, Relation, Word, free_reduce

from ig_engine.errors import EliminationError, TietzeError
from ig_engine.presentations import IgPresentation, RelationProvenance

from .engine import CheckpointPolicy, TietzeState
from .trace import SimplificationTrace

PAPER = "paper"
GREEDY = "greedy"


@dataclass(frozen=True)
class SimplifyOptions:
    """Knobs for :func:`simplify`.

    ``verify_checkpoints=None`` turns order checkpoints on exactly when the
    alphabet has at most ``checkpoint_alphabet_limit`` letters.
    """

    max_defining_length: int = 16
    checkpoint_interval: int = 10
    verify_checkpoints: Optional[bool] = None
    checkpoint_alphabet_limit: int = 4
    checkpoint_max_cosets: int = 20_000

    def policy(self, alphabet_size: int) -> CheckpointPolicy:
        enabled = self.verify_checkpoints
        if enabled is None:
            enabled = alphabet_size <= self.checkpoint_alphabet_limit
        return CheckpointPolicy(enabled, self.checkpoint_interval, self.checkpoint_max_cosets)


class SimplificationStrategy(ABC):
    name: str = ""

    @abstractmethod
    def run(self, state: TietzeState, source: Optional[IgPresentation]) -> None:
        """Applies the strategy's moves to ``state`` in place."""
        raise NotImplementedError


def _triple_of(tag: object) -> Optional[Tuple[str, str, str]]:
    if not isinstance(tag, RelationProvenance) or tag.kind != "left-right":
        return None
    for witness in tag.witnesses:
        try:
            label = ElementLabel.parse(witness)
        except WordSyntaxError:
            continue
        if label.kind is LabelKind.R:
            a, b, c = label.args
            return (a, b, c)
    return None


class PaperStrategy(SimplificationStrategy):
    name = PAPER

    def run(self, state: TietzeState, source: Optional[IgPresentation]) -> None:
        if source is None or source.row_symbols is None or source.col_symbols is None:
            raise TietzeError("needs the presentation of the B_G kernel grid")
        zero, zero_p, inf = IndexSymbol.zero(), IndexSymbol.zero(True), IndexSymbol.infinity()
        if source.base != (0, 0) or source.row_symbols[0] != zero or source.col_symbols[0] != zero:
            raise TietzeError("needs the base at K(0,0)")

        rows = {s: k for k, s in enumerate(source.row_symbols)}
        cols = {s: k for k, s in enumerate(source.col_symbols)}
        alphabet = [str(s.gen) for s in source.col_symbols if s.base is IndexBase.GEN]

        def f(row: IndexSymbol, col: IndexSymbol) -> str:
            return source.name(rows[row], cols[col])

        def gen(a: str, primed: bool = False) -> IndexSymbol:
            return IndexSymbol.of(a, primed)

        one = Word.empty()

        state.phase = "base"
        for col in source.col_symbols:
            state.eliminate(f(zero, col), one)
        for row in source.row_symbols[1:]:
            state.eliminate(f(row, zero), one)
        state.snapshot("base")

        state.phase = "up-down"
        for a in alphabet:
            for c in alphabet:
                state.eliminate(f(gen(a), gen(c)), one)
        state.snapshot("up-down")

        state.phase = "up-down primed"
        for a in alphabet:
            for c in alphabet:
                state.eliminate(f(gen(a, True), gen(c)), Word.of(f(zero_p, gen(c))))
        state.snapshot("up-down primed")

        state.phase = "left-right Z"
        state.eliminate(f(zero_p, inf), one)
        state.snapshot("left-right Z")

        state.phase = "left-right G"
        for a in alphabet:
            state.eliminate(f(gen(a, True), inf), Word.of(f(zero_p, gen(a))))
        state.snapshot("left-right G")

        state.phase = "left-right Gbar"
        for a in alphabet:
            state.eliminate(f(gen(a), inf), Word.of(f(zero_p, gen(a))))
        state.snapshot("left-right Gbar")

        state.phase = "relations"
        state.normalize()
        for index, (relation, tag) in enumerate(zip(list(state.relations), list(state.tags))):
            triple = _triple_of(tag)
            if triple is None:
                raise TietzeError(f"relation {relation.render()} is left over")
            a, b, c = (f(zero_p, gen(x)) for x in triple)
            state.reorient(index, Relation(Word.of(a, b), Word.of(c), relation.source))
        for a in alphabet:
            state.rename(f(zero_p, gen(a)), a)
        state.snapshot("relations")


class GreedyStrategy(SimplificationStrategy):
    """Eliminates the generator with the shortest defining word until none is left.

    A generator qualifies when it occurs exactly once in some freely reduced
    relator ``x g^e y``; its defining word is then ``(yx)^-1`` or ``yx``.
    Ties go to the earlier generator, then the earlier relation.
    """

    name = GREEDY

    def __init__(self, max_defining_length: int = 16):
        self.max_defining_length = max_defining_length

    def candidate(
        self, state: TietzeState, order: Dict[str, int]
    ) -> Optional[Tuple[str, Word]]:
        best: Optional[Tuple[Tuple[int, int, int], str, Word]] = None
        for index, relation in enumerate(state.relations):
            relator = free_reduce(relation.relator())
            counts = Counter(name for name, _ in relator.letters)
            for position, (name, exponent) in enumerate(relator.letters):
                if counts[name] != 1:
                    continue
                x = Word(relator.letters[:position])
                y = Word(relator.letters[position + 1 :])
                w = free_reduce((y * x).inverse() if exponent == 1 else y * x)
                if len(w) >= self.max_defining_length:
                    continue
                key = (len(w), order[name], index)
                if best is None or key < best[0]:
                    best = (key, name, w)
        return None if best is None else (best[1], best[2])

    def run(self, state: TietzeState, source: Optional[IgPresentation]) -> None:
        state.phase = "greedy"
        order = {name: k for k, name in enumerate(state.names)}
        state.normalize()
        while True:
            found = self.candidate(state, order)
            if found is None:
                break
            state.eliminate(*found)
        state.snapshot("greedy")


def strategy_named(name: str, options: Optional[SimplifyOptions] = None) -> SimplificationStrategy:
    options = options or SimplifyOptions()
    if name == PAPER:
        return PaperStrategy()
    if name == GREEDY:
        return GreedyStrategy(options.max_defining_length)
    raise TietzeError(f"unknown simplification strategy {name!r}")


def _alphabet_size(source: Optional[IgPresentation], group: GroupPresentation) -> int:
    if source is not None and source.col_symbols is not None:
        return sum(1 for s in source.col_symbols if s.base is IndexBase.GEN)
    return len(group.generators)


def _run(
    runner: SimplificationStrategy,
    group: GroupPresentation,
    source: Optional[IgPresentation],
    tags: Optional[Sequence[object]],
    options: SimplifyOptions,
) -> TietzeState:
    state = TietzeState(group, runner.name, tags, options.policy(_alphabet_size(source, group)))
    state.checkpoint()
    runner.run(state, source)
    checkpoints = state.trace.checkpoints
    if state.policy.enabled and (not checkpoints or checkpoints[-1].eliminations != state.trace.eliminations):
        state.checkpoint()
    return state


def simplify(
    p: Union[IgPresentation, GroupPresentation],
    strategy: str = PAPER,
    options: Optional[SimplifyOptions] = None,
) -> Tuple[GroupPresentation, SimplificationTrace]:
    """Simplifies ``p`` by traced Tietze moves.

    Args:
        p: A maximal-subgroup presentation, or any group presentation for the
            greedy strategy.
        strategy: ``"paper"`` or ``"greedy"``.
        options: Length limit and checkpoint settings.

    Returns:
        The simplified presentation and the trace that produced it. When the
        paper strategy does not apply, the greedy result is returned and the
        trace carries the fallback warning.

    Raises:
        TietzeError: for an unknown strategy name.
    """
    options = options or SimplifyOptions()
    runner = strategy_named(strategy, options)
    source = p if isinstance(p, IgPresentation) else None
    group = source.as_group_presentation() if source is not None else p
    assert isinstance(group, GroupPresentation)
    tags = source.provenance if source is not None else None

    fallback: Optional[str] = None
    try:
        state = _run(runner, group, source, tags, options)
    except (TietzeError, EliminationError) as e:
        if runner.name != PAPER:
            raise
        fallback = f"paper strategy does not apply ({e}); falling back to greedy"
        warn(fallback)
        state = _run(GreedyStrategy(options.max_defining_length), group, source, tags, options)

    trace = state.trace
    if fallback:
        trace.warnings.insert(0, fallback)
    trace.substitution = dict(state.substitution)
    trace.survivors = tuple(state.names)
    if source is not None:
        cells = source.cell_of()
        trace.survivor_cells = {name: cells[state.original_of[name]] for name in trace.survivors}
    result = state.presentation()
    log_step(
        f"Simplified ({trace.strategy}): {len(result.generators)} generators, "
        f"{len(result.relations)} relations after {trace.eliminations} eliminations"
    )
    return result, trace


def relation_triples(p: GroupPresentation) -> Optional[List[Tuple[str, str, str]]]:
    """Reads every relation of ``p`` as ``a*b = c``; ``None`` if one has another shape."""
    triples = []
    for relation in p.relations:
        lhs, rhs = relation.lhs, relation.rhs
        if len(lhs) != 2 or len(rhs) != 1 or not (lhs.is_positive() and rhs.is_positive()):
            return None
        triples.append((lhs.letters[0][0], lhs.letters[1][0], rhs.letters[0][0]))
    return triples
