# src/ig_core/bands/construction.py

"""Construction of the band ``B_G = K ∪ L`` from a Cayley-form presentation.

``K`` holds every constant pair over ``I x J``. Every element of ``L`` has
``ker(sigma) = {A_0, A_0'}`` and ``tau`` fixing ``A_0``, so it is pinned down
by three indices: the image ``x`` of ``A_0``, the image ``y'`` of ``A_0'``
and the value ``v = (inf)tau``:

    Z          x=0  y'=0'  v=0
    G(a)       x=0  y'=a'  v=a
    Gbar(a)    x=a  y'=a'  v=0
    R(a,b,c)   x=b  y'=c'  v=a
"""

from typing import List, Optional

from ig_core.errors import BandConstructionError, PresentationValidationError
from ig_core.logging import log_step, warn
from ig_core.presentations import CayleyFormPresentation, validate_cayley_form

from .band import Band
from .index_sets import IndexSets, IndexSymbol
from .labels import ElementLabel, LabelKind
from .transformations import TransformationPair


def expected_bg_size(n_generators: int, n_relations: int) -> int:
    """``|B_G| = (2|A|+2)(|A|+2) + 1 + 2|A| + |R|``."""
    return (2 * n_generators + 2) * (n_generators + 2) + 1 + 2 * n_generators + n_relations


def upper_pair(
    index_sets: IndexSets,
    x: Optional[str],
    y: Optional[str],
    v: Optional[str],
    label: ElementLabel,
) -> TransformationPair:
    """Builds the element of ``L`` with the given images; ``None`` stands for 0."""
    n_unprimed = len(index_sets.alphabet) + 1
    row_x = index_sets.row(IndexSymbol.of(x) if x else IndexSymbol.zero())
    row_y = index_sets.row(IndexSymbol.of(y, True) if y else IndexSymbol.zero(True))
    sigma = tuple(row_x if i < n_unprimed else row_y for i in range(len(index_sets.I)))

    col_v = index_sets.col(IndexSymbol.of(v) if v else IndexSymbol.zero())
    tau = tuple(range(len(index_sets.J) - 1)) + (col_v,)
    return TransformationPair(sigma, tau, label)


def build_bg(p: CayleyFormPresentation) -> Band:
    """Constructs ``B_G`` for the presentation ``p``.

    Raises:
        PresentationValidationError: if ``p`` fails :func:`validate_cayley_form`.
        BandConstructionError: if the element count misses the closed formula.
    """
    report = validate_cayley_form(p)
    if not report.ok or report.presentation is None:
        raise PresentationValidationError(report.errors)
    for message in report.warnings:
        if message.startswith("duplicate"):
            warn(message)
    p = report.presentation

    index_sets = IndexSets.from_alphabet(p.generator_names())
    n_rows, n_cols = index_sets.shape

    pairs: List[TransformationPair] = []
    for i, row in enumerate(index_sets.I):
        for j, col in enumerate(index_sets.J):
            pairs.append(
                TransformationPair.constant(
                    i, j, n_rows, n_cols, ElementLabel.cell(row.label, col.label)
                )
            )
    kernel = frozenset(range(len(pairs)))

    pairs.append(upper_pair(index_sets, None, None, None, ElementLabel(LabelKind.Z)))
    for a in index_sets.alphabet:
        pairs.append(upper_pair(index_sets, None, a, a, ElementLabel(LabelKind.G, (a,))))
    for a in index_sets.alphabet:
        pairs.append(upper_pair(index_sets, a, a, None, ElementLabel(LabelKind.GBAR, (a,))))
    for triple in p.relations:
        pairs.append(
            upper_pair(
                index_sets, triple.b, triple.c, triple.a, ElementLabel(LabelKind.R, triple.names())
            )
        )
    upper = frozenset(range(len(kernel), len(pairs)))

    band = Band.from_pairs(pairs, index_sets, kernel, upper)

    expected = expected_bg_size(len(index_sets.alphabet), len(p.relations))
    if band.size != expected:
        raise BandConstructionError(
            f"|B_G| = {band.size} but the size formula gives {expected}"
        )
    log_step(
        f"Built B_G: {band.size} elements, K {n_rows}x{n_cols}, |L| = {len(upper)}"
    )
    return band
