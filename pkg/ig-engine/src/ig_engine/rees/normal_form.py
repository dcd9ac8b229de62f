# src/ig_engine/rees/normal_form.py

"""Normal forms of words over the idempotents of ``B_G`` in ``IG(B_G)``.

``IG(B_G)`` splits into the left-zero part (one ``Lbar`` per element of
``L``) and the minimal ideal, modelled by :class:`ReesModel`. A word that
contains a letter of ``K`` evaluates into the ideal; an upper letter acts on
an ideal element through a basic product with a suitable ``e_ij``:

* on the left, ``e (i, g, j) = (i sigma, a_{i sigma, j'} a_{i j'}^-1 g, j)``
  where ``j'`` is the least column fixed by ``tau``;
* on the right, ``(i, g, j) e = (i, g a_{i' j}^-1 a_{i', j tau}, j tau)``
  where ``i'`` is the least row in the image of ``sigma``.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from ig_core.bands import Band, parse_element_word
from ig_core.presentations import Word

from ig_engine.errors import ReesModelError

from .model import KbarForm, LbarForm, ReesModel, rees_multiply

IgNormalForm = Union[LbarForm, KbarForm]

EQUAL = "equal"
NOT_EQUAL = "not-equal"
REDUCES_TO = "reduces-to"


@dataclass(frozen=True)
class IgEquality:
    status: str
    left: IgNormalForm
    right: IgNormalForm
    equation: Optional[Tuple[Word, Word]] = None

    def describe(self) -> str:
        if self.status == REDUCES_TO and self.equation is not None:
            g1, g2 = self.equation
            return f"reduces-to {g1.render()} =? {g2.render()}"
        return self.status


def _require_bg(m: ReesModel) -> Tuple[Band, "_Indexing"]:
    if m.band is None or m.grid is None or not m.band.is_bg:
        raise ReesModelError("the Rees model was built without the band B_G and its kernel grid")
    return m.band, _Indexing(m)


class _Indexing:
    """Translates between grid positions and index-set positions of ``B_G``."""

    def __init__(self, m: ReesModel):
        assert m.band is not None and m.grid is not None
        index_sets = m.band.index_sets
        grid = m.grid
        if index_sets is None or grid.row_symbols is None or grid.col_symbols is None:
            raise ReesModelError("the grid is not the kernel grid of B_G")
        self.row_index = [index_sets.row(s) for s in grid.row_symbols]
        self.col_index = [index_sets.col(s) for s in grid.col_symbols]
        self.row_of_index = {k: i for i, k in enumerate(self.row_index)}
        self.col_of_index = {k: j for j, k in enumerate(self.col_index)}
        self.rows, self.cols = grid.position_lookup(m.band.size)

    def in_kernel(self, e: int) -> bool:
        return bool(self.rows[e] >= 0)

    def position(self, e: int) -> Tuple[int, int]:
        return int(self.rows[e]), int(self.cols[e])


def embed_idempotent(m: ReesModel, e: int) -> IgNormalForm:
    """``e`` in ``L`` maps to ``Lbar(e)``; ``e_ij`` maps to ``(i, a_ij, j)``.

    Raises:
        ReesModelError: if ``e`` is not an element of the band.
    """
    band, index = _require_bg(m)
    if not 0 <= e < band.size:
        raise ReesModelError(f"{e} is not an element of B_G")
    if index.in_kernel(e):
        return m.iota(*index.position(e))
    return LbarForm(e, band.label(e))


def left_act(m: ReesModel, e: int, x: KbarForm) -> KbarForm:
    """``e * x`` for an upper letter ``e``, through the basic product ``e e_{i j'}``."""
    band, index = _require_bg(m)
    pair = band.pairs[e] if band.pairs is not None else None
    if pair is None:
        raise ReesModelError(f"{band.label(e)} has no transformation pair")
    fixed = [j for j, k in enumerate(index.col_index) if pair.tau[k] == k]
    if not fixed:
        raise ReesModelError(f"{band.label(e)} fixes no column")
    j_prime = fixed[0]
    target = index.row_of_index[pair.sigma[index.row_index[x.row]]]
    g = m.group.product(m.entry(target, j_prime), m.entry(x.row, j_prime).inverse(), x.group)
    return m.kbar(target, g, x.col)


def right_act(m: ReesModel, x: KbarForm, e: int) -> KbarForm:
    """``x * e`` for an upper letter ``e``, through the basic product ``e_{i' j} e``."""
    band, index = _require_bg(m)
    pair = band.pairs[e] if band.pairs is not None else None
    if pair is None:
        raise ReesModelError(f"{band.label(e)} has no transformation pair")
    image = sorted(index.row_of_index[k] for k in set(pair.sigma))
    i_prime = image[0]
    target = index.col_of_index[pair.tau[index.col_index[x.col]]]
    g = m.group.product(x.group, m.entry(i_prime, x.col).inverse(), m.entry(i_prime, target))
    return m.kbar(x.row, g, target)


def ig_normal_form(m: ReesModel, w: Sequence[int]) -> IgNormalForm:
    """Evaluates the word ``w`` (band element ids) in ``IG(B_G)``.

    Raises:
        ReesModelError: if ``w`` is empty or names a foreign element.
    """
    if not w:
        raise ReesModelError("cannot normalize the empty word")
    band, index = _require_bg(m)
    for e in w:
        if not 0 <= e < band.size:
            raise ReesModelError(f"{e} is not an element of B_G")
    first_k = next((k for k, e in enumerate(w) if index.in_kernel(e)), None)
    if first_k is None:
        # L is a left zero semigroup
        return LbarForm(w[0], band.label(w[0]))

    value = m.iota(*index.position(w[first_k]))
    if first_k > 0:
        value = left_act(m, w[0], value)
    for e in w[first_k + 1 :]:
        if index.in_kernel(e):
            value = rees_multiply(m, value, m.iota(*index.position(e)))
        else:
            value = right_act(m, value, e)
    return value


def ig_equal(m: ReesModel, w1: Sequence[int], w2: Sequence[int]) -> IgEquality:
    """Decides ``w1 = w2`` in ``IG(B_G)``, or reduces it to a group equation.

    Over a finite group the answer is always ``equal`` or ``not-equal``. Over
    a symbolic group two ideal elements in the same cell whose group words
    differ leave the equation ``g1 = g2`` in ``G`` open.
    """
    left, right = ig_normal_form(m, w1), ig_normal_form(m, w2)
    if isinstance(left, LbarForm) or isinstance(right, LbarForm):
        return IgEquality(EQUAL if left == right else NOT_EQUAL, left, right)
    if (left.row, left.col) != (right.row, right.col):
        return IgEquality(NOT_EQUAL, left, right)
    verdict = m.group.equal(left.group, right.group)
    if verdict is None:
        return IgEquality(REDUCES_TO, left, right, (left.group, right.group))
    return IgEquality(EQUAL if verdict else NOT_EQUAL, left, right)


def project(m: ReesModel, x: IgNormalForm) -> int:
    """The band element a normal form maps to: ``Kbar(i, g, j)`` goes to ``e_ij``."""
    if isinstance(x, LbarForm):
        return x.element
    if m.grid is None:
        raise ReesModelError("the Rees model was built without a grid")
    return m.grid.cell(x.row, x.col)


def parse_band_word(b: Band, text: str) -> List[int]:
    """Reads ``K(0,a) K(a',inf)``-style text into element ids of ``b``.

    Raises:
        ReesModelError: if a letter is not an element of ``b``.
        WordSyntaxError: if the text cannot be read.
    """
    ids = []
    for label in parse_element_word(text):
        try:
            ids.append(b.index_of(label))
        except KeyError as e:
            raise ReesModelError(str(e.args[0])) from e
    return ids
