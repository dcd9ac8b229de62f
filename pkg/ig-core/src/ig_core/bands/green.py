# src/ig_core/bands/green.py

"""Green's relations of a finite band.

In a band ``x R y`` iff ``xy = y`` and ``yx = x``, and ``x L y`` iff
``xy = x`` and ``yx = y``. ``D`` is the join of the two; its classes are
rectangular bands arranged in a semilattice.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

import networkx as nx
import numpy as np

from ig_core.errors import NotABandError
from ig_core.logging import log_step

from .band import Band

Classes = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class GreenStructure:
    """R-, L- and D-classes of a band plus the semilattice of D-classes.

    Classes are tuples of element ids, ordered by their least element.
    ``order`` has an edge ``alpha -> beta`` whenever ``D_alpha > D_beta``.
    """

    r_classes: Classes
    l_classes: Classes
    d_classes: Classes
    d_class_of: Tuple[int, ...]
    r_class_of: Tuple[int, ...]
    l_class_of: Tuple[int, ...]
    order: nx.DiGraph

    def is_strictly_above(self, alpha: int, beta: int) -> bool:
        return bool(self.order.has_edge(alpha, beta))

    def elements_strictly_above(self, d_index: int) -> List[int]:
        above = sorted(self.order.predecessors(d_index))
        return sorted(x for alpha in above for x in self.d_classes[alpha])

    def maximal_classes(self) -> List[int]:
        return sorted(n for n in self.order.nodes if self.order.in_degree(n) == 0)

    def minimal_class(self) -> int:
        """The D-class below every other one (the minimal ideal)."""
        lows = [n for n in self.order.nodes if self.order.out_degree(n) == 0]
        return min(lows)

    def d_class_containing(self, x: int) -> int:
        return self.d_class_of[x]


def _classes(n: int, related: np.ndarray) -> Tuple[Classes, Tuple[int, ...]]:
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    graph.add_edges_from((int(x), int(y)) for x, y in np.argwhere(related) if x < y)
    classes = sorted(tuple(sorted(c)) for c in nx.connected_components(graph))
    class_of = [0] * n
    for position, members in enumerate(classes):
        for x in members:
            class_of[x] = position
    return tuple(classes), tuple(class_of)


def green_classes(b: Band) -> GreenStructure:
    """Computes Green's relations from the multiplication table.

    Raises:
        NotABandError: if some element is not idempotent.
    """
    table = b.table
    n = b.size
    ids = np.arange(n)
    bad = np.flatnonzero(table[ids, ids] != ids)
    if bad.size:
        raise NotABandError(
            f"{b.label(int(bad[0]))} is not idempotent", (int(bad[0]),)
        )

    # r_rel[x, y]: xy = y and yx = x;  l_rel[x, y]: xy = x and yx = y
    r_rel = (table == ids[None, :]) & (table.T == ids[:, None])
    l_rel = (table == ids[:, None]) & (table.T == ids[None, :])
    r_classes, r_class_of = _classes(n, r_rel)
    l_classes, l_class_of = _classes(n, l_rel)
    d_classes, d_class_of = _classes(n, r_rel | l_rel)

    order = nx.DiGraph()
    order.add_nodes_from(range(len(d_classes)))
    reps = [members[0] for members in d_classes]
    for alpha, x in enumerate(reps):
        for beta, y in enumerate(reps):
            if alpha == beta:
                continue
            if d_class_of[table[x, y]] == beta and d_class_of[table[y, x]] == beta:
                order.add_edge(alpha, beta)

    log_step(
        f"Green's relations: {len(r_classes)} R-, {len(l_classes)} L-, {len(d_classes)} D-classes"
    )
    return GreenStructure(
        r_classes, l_classes, d_classes, d_class_of, r_class_of, l_class_of, order
    )
