# src/ig_engine/groups/coset_table.py

"""Todd-Coxeter coset enumeration over the trivial subgroup.

Enumeration itself is sympy's relator-based (HLT) routine. Relators are
first freely and cyclically reduced, collapsed up to cyclic permutation and
inversion, and sorted by length, so the scan order does not depend on how
the presentation lists its relations. The finished table is compressed and
standardized.
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np
from sympy import Symbol
from sympy.combinatorics.coset_table import coset_enumeration_r
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from ig_core.logging import log_step
from ig_core.presentations import GroupPresentation, Word, canonical_relator

from ig_engine.errors import EnumerationOverflow

DEFAULT_MAX_COSETS = 100_000


@dataclass(frozen=True, eq=False)
class CosetTable:
    """A complete coset table of a group acting on the cosets of ``{1}``.

    ``action[c, 2*g]`` is coset ``c`` times generator ``g`` and
    ``action[c, 2*g + 1]`` is ``c`` times its inverse. Coset 0 is the
    subgroup itself, i.e. the identity element.
    """

    n: int
    generators: Tuple[str, ...]
    action: np.ndarray
    origin: str = ""

    def column(self, name: str, exponent: int) -> int:
        return 2 * self.generators.index(name) + (0 if exponent == 1 else 1)

    def column_labels(self) -> List[str]:
        return [label for g in self.generators for label in (g, f"{g}^-1")]

    def trace(self, word: Word, start: int = 0) -> int:
        coset = start
        for name, exponent in word.letters:
            coset = int(self.action[coset, self.column(name, exponent)])
        return coset

    def is_identity(self, word: Word) -> bool:
        return self.trace(word) == 0

    def satisfies(self, relators: Sequence[Word]) -> bool:
        """Checks that actions are mutually inverse permutations and every relator
        fixes every coset."""
        cosets = np.arange(self.n)
        for g in range(len(self.generators)):
            forward, backward = self.action[:, 2 * g], self.action[:, 2 * g + 1]
            if not np.array_equal(np.sort(forward), cosets):
                return False
            if not np.array_equal(backward[forward], cosets):
                return False
        for relator in relators:
            current = cosets.copy()
            for name, exponent in relator.letters:
                current = self.action[current, self.column(name, exponent)]
            if not np.array_equal(current, cosets):
                return False
        return True


def prepared_relators(p: GroupPresentation) -> List[Word]:
    """Reduced relators of ``p``, one per cyclic/inverse class, shortest first."""
    keys = {canonical_relator(w) for w in p.relators()}
    keys.discard(())
    return [Word(key) for key in sorted(keys, key=lambda k: (len(k), k))]


def todd_coxeter(p: GroupPresentation, max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    """Enumerates the cosets of the trivial subgroup of the group ``p`` presents.

    Raises:
        EnumerationOverflow: if more than ``max_cosets`` cosets get defined.
    """
    names = p.generator_names()
    relators = prepared_relators(p)
    origin = f"<{len(names)} generators | {len(relators)} relators>"
    if not names:
        return CosetTable(1, (), np.zeros((1, 0), dtype=np.int64), origin)

    free = free_group(tuple(Symbol(name) for name in names))
    group, generators = free[0], free[1:]
    position: Dict[str, int] = {name: k for k, name in enumerate(names)}

    sympy_relators = []
    for relator in relators:
        element = group.identity
        for name, exponent in relator.letters:
            element = element * generators[position[name]] ** exponent
        sympy_relators.append(element)

    try:
        table = coset_enumeration_r(FpGroup(group, sympy_relators), [], max_cosets=max_cosets)
    except ValueError as e:
        if "coset" in str(e):
            raise EnumerationOverflow(max_cosets) from e
        raise
    table.compress()
    table.standardize()

    action = np.array(table.table, dtype=np.int64).reshape(len(table.table), 2 * len(names))
    log_step(f"Todd-Coxeter on {origin}: {action.shape[0]} cosets")
    return CosetTable(int(action.shape[0]), tuple(names), action, origin)
