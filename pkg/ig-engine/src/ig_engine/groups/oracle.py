# src/ig_engine/groups/oracle.py

from abc import ABC, abstractmethod
from typing import List, Optional

import networkx as nx

from ig_core.logging import warn
from ig_core.presentations import GroupPresentation, Word, free_reduce

from ig_engine.errors import EnumerationOverflow

from .coset_table import DEFAULT_MAX_COSETS, CosetTable, todd_coxeter


class GroupOracle(ABC):
    """Arithmetic in the group a presentation defines.

    Finite oracles decide equality; symbolic ones only compose and freely
    reduce words.
    """

    mode: str = ""

    @abstractmethod
    def canonical(self, w: Word) -> Word:
        raise NotImplementedError

    @abstractmethod
    def equal(self, w1: Word, w2: Word) -> Optional[bool]:
        """``True``/``False`` when decided, ``None`` when unknown."""
        raise NotImplementedError

    @property
    def identity(self) -> Word:
        return Word.empty()

    def multiply(self, w1: Word, w2: Word) -> Word:
        return self.canonical(w1 * w2)

    def inverse(self, w: Word) -> Word:
        return self.canonical(w.inverse())

    def product(self, *words: Word) -> Word:
        letters = tuple(letter for w in words for letter in w.letters)
        return self.canonical(Word(letters))

    @property
    def is_finite(self) -> bool:
        return self.mode == "finite"


class FiniteGroupOracle(GroupOracle):
    """Canonical forms are the BFS words of the standardized coset table.

    Every element is represented by the first shortest word found by a
    breadth-first search from the identity coset, trying generator columns
    in table order.
    """

    mode = "finite"

    def __init__(self, table: CosetTable):
        self.table = table
        graph = nx.DiGraph()
        graph.add_nodes_from(range(table.n))
        letters = [(g, e) for g in table.generators for e in (1, -1)]
        for coset in range(table.n):
            for column, letter in enumerate(letters):
                target = int(table.action[coset, column])
                if not graph.has_edge(coset, target):
                    graph.add_edge(coset, target, letter=letter)

        representatives: List[Word] = [Word.empty()] * table.n
        for u, v in nx.bfs_edges(graph, 0):
            representatives[v] = representatives[u] * Word((graph.edges[u, v]["letter"],))
        self.representatives = representatives

    @property
    def order(self) -> int:
        return self.table.n

    def element_of(self, w: Word) -> int:
        return self.table.trace(w)

    def canonical(self, w: Word) -> Word:
        return self.representatives[self.element_of(w)]

    def equal(self, w1: Word, w2: Word) -> Optional[bool]:
        return self.element_of(w1) == self.element_of(w2)

    def elements(self) -> List[Word]:
        return list(self.representatives)


class SymbolicGroupOracle(GroupOracle):
    """Formal composition only; equality is known just for identical reduced words."""

    mode = "symbolic"

    def canonical(self, w: Word) -> Word:
        return free_reduce(w)

    def equal(self, w1: Word, w2: Word) -> Optional[bool]:
        return True if free_reduce(w1) == free_reduce(w2) else None


def group_multiply(o: GroupOracle, w1: Word, w2: Word) -> Word:
    return o.multiply(w1, w2)


def oracle_for(p: GroupPresentation, max_cosets: int = DEFAULT_MAX_COSETS) -> GroupOracle:
    """A finite oracle when ``p`` enumerates within the limit, else a symbolic one."""
    try:
        return FiniteGroupOracle(todd_coxeter(p, max_cosets))
    except EnumerationOverflow as e:
        warn(f"{e}; falling back to symbolic group arithmetic")
        return SymbolicGroupOracle()
