# tests/catalogue.py

"""Small groups, random Cayley-form presentations and random table bands.

Plain builders shared by the test packages; fixtures wrapping them live
in ``tests/conftest.py``.
"""

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, List, Sequence, Tuple

from ig_core.bands import (
    Band,
    DClassGrid,
    ElementLabel,
    GreenStructure,
    TransformationPair,
    build_bg,
    green_classes,
    kernel_grid,
)
from ig_core.presentations import CayleyFormPresentation, GroupPresentation
from ig_core.squares import SingularSquare, singular_squares
from ig_engine.groups import oracle_for
from ig_engine.presentations import IgPresentation, maximal_subgroup_presentation
from ig_engine.rees import ReesModel, build_rees_model
from ig_engine.tietze import (
    GridTable,
    SimplificationTrace,
    SimplifyOptions,
    grid_table,
    simplify,
)

Table = List[List[int]]

Q8_TEXT = """\
# quaternion group as F(2,3)
gens a b c
rel a*b = c
rel b*c = a
rel c*a = b
"""


def _table(elements: Sequence, op: Callable) -> Table:
    index = {x: k for k, x in enumerate(elements)}
    return [[index[op(x, y)] for y in elements] for x in elements]


def _cyclic(n: int) -> Table:
    return [[(x + y) % n for y in range(n)] for x in range(n)]


def _direct(a: Table, b: Table) -> Table:
    pairs = list(product(range(len(a)), range(len(b))))
    return _table(pairs, lambda x, y: (a[x[0]][y[0]], b[x[1]][y[1]]))


def _permutation_group(generators: Sequence[Tuple[int, ...]]) -> Table:
    def compose(p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(p[q[i]] for i in range(len(q)))

    identity = tuple(range(len(generators[0])))
    elements = [identity]
    frontier = [identity]
    while frontier:
        fresh = []
        for x in frontier:
            for g in generators:
                y = compose(x, g)
                if y not in elements:
                    elements.append(y)
                    fresh.append(y)
        frontier = fresh
    return _table(elements, compose)


_UNITS = {
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def _quaternions() -> Table:
    elements = [(s, u) for s in (1, -1) for u in ("1", "i", "j", "k")]

    def op(x: Tuple[int, str], y: Tuple[int, str]) -> Tuple[int, str]:
        sign, unit = _UNITS[(x[1], y[1])]
        return (x[0] * y[0] * sign, unit)

    return _table(elements, op)


# Every group of order at most 8, up to isomorphism.
SMALL_GROUPS: Dict[str, Table] = {
    "trivial": _cyclic(1),
    "Z2": _cyclic(2),
    "Z3": _cyclic(3),
    "Z4": _cyclic(4),
    "Z2xZ2": _direct(_cyclic(2), _cyclic(2)),
    "Z5": _cyclic(5),
    "Z6": _cyclic(6),
    "S3": _permutation_group([(1, 0, 2), (1, 2, 0)]),
    "Z7": _cyclic(7),
    "Z8": _cyclic(8),
    "Z4xZ2": _direct(_cyclic(4), _cyclic(2)),
    "Z2xZ2xZ2": _direct(_direct(_cyclic(2), _cyclic(2)), _cyclic(2)),
    "D4": _permutation_group([(1, 2, 3, 0), (0, 3, 2, 1)]),
    "Q8": _quaternions(),
}


def cayley_table_presentation(table: Table) -> CayleyFormPresentation:
    """``<x0..x(n-1) | xa*xb = x(ab)>``, one triple per table entry."""
    names = [f"x{k}" for k in range(len(table))]
    triples = [
        (names[a], names[b], names[table[a][b]])
        for a in range(len(table))
        for b in range(len(table))
    ]
    return CayleyFormPresentation.build(names, triples)


def random_cayley_presentation(
    rng: random.Random, max_generators: int = 5, max_relations: int = 10
) -> CayleyFormPresentation:
    n = rng.randint(1, max_generators)
    names = [f"g{k}" for k in range(n)]
    triples = {tuple(rng.choice(names) for _ in range(3)) for _ in range(rng.randint(0, max_relations))}
    return CayleyFormPresentation.build(names, sorted(triples))


def _idempotent_with_kernel(rng: random.Random, classes: List[List[int]], size: int) -> Tuple[int, ...]:
    sigma = [0] * size
    for members in classes:
        rep = rng.choice(members)
        for x in members:
            sigma[x] = rep
    return tuple(sigma)


def _idempotent_with_image(rng: random.Random, image: List[int], size: int) -> Tuple[int, ...]:
    return tuple(x if x in image else rng.choice(image) for x in range(size))


def random_table_band(rng: random.Random, with_semilattice: bool = False) -> Band:
    """A band ``K ∪ L`` given only by its multiplication table.

    ``K`` is the rectangular band of constant pairs over random index sets;
    the pairs of ``L`` share the kernel of ``sigma`` and the image of ``tau``,
    which makes ``L`` a left-zero band acting on ``K``. With
    ``with_semilattice`` the result is multiplied by the two-element
    semilattice.
    """
    limit = 3 if with_semilattice else 4
    n_rows, n_cols = rng.randint(2, limit), rng.randint(2, limit)

    rows = list(range(n_rows))
    rng.shuffle(rows)
    cut = rng.randint(1, n_rows)
    classes = [sorted(rows[:cut])] + ([sorted(rows[cut:])] if rows[cut:] else [])
    image = sorted(rng.sample(range(n_cols), rng.randint(1, n_cols)))

    pairs = [
        TransformationPair.constant(i, j, n_rows, n_cols, ElementLabel.named(f"k{i}_{j}"))
        for i in range(n_rows)
        for j in range(n_cols)
    ]
    seen = {p.key for p in pairs}
    for _ in range(rng.randint(1, 6)):
        sigma = _idempotent_with_kernel(rng, classes, n_rows)
        tau = _idempotent_with_image(rng, image, n_cols)
        if (sigma, tau) in seen:
            continue
        seen.add((sigma, tau))
        pairs.append(TransformationPair(sigma, tau, ElementLabel.named(f"u{len(pairs)}")))

    band = Band.from_pairs(pairs)
    if not with_semilattice:
        return Band.from_table(band.table, [band.label(x) for x in range(band.size)])

    n = band.size
    table = [
        [band.multiply(x, y) + n * min(s, t) for t, y in product((0, 1), range(n))]
        for s, x in product((0, 1), range(n))
    ]
    names = [f"{band.label(x)}_{s}" for s, x in product((0, 1), range(n))]
    return Band.from_table(table, names)


@dataclass
class BgPipeline:
    """Every artifact of one run from a Cayley-form presentation to the Rees model."""

    cayley: CayleyFormPresentation
    band: Band
    green: GreenStructure
    grid: DClassGrid
    squares: List[SingularSquare]
    ig: IgPresentation
    simplified: GroupPresentation
    trace: SimplificationTrace
    table: GridTable
    rees: ReesModel


def run_bg_pipeline(
    cayley: CayleyFormPresentation, verify_checkpoints: bool = False, max_cosets: int = 10_000
) -> BgPipeline:
    band = build_bg(cayley)
    green = green_classes(band)
    grid = kernel_grid(band, green)
    squares = singular_squares(band, green, grid)
    ig = maximal_subgroup_presentation(band, grid, squares)
    simplified, trace = simplify(ig, "paper", SimplifyOptions(verify_checkpoints=verify_checkpoints))
    table = grid_table(trace, grid)
    rees = build_rees_model(table, oracle_for(simplified, max_cosets), band, grid)
    return BgPipeline(cayley, band, green, grid, squares, ig, simplified, trace, table, rees)
