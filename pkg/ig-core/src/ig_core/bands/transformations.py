# src/ig_core/bands/transformations.py

"""Pairs of finite transformations, the elements of ``T = T_I^(l) x T_J^(r)``.

``sigma`` acts on row positions from the left and ``tau`` on column
positions from the right, so a product composes ``sigma`` right-to-left and
``tau`` left-to-right.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

import numpy as np

from ig_core.errors import BandConstructionError

from .labels import ElementLabel


@dataclass(frozen=True)
class TransformationPair:
    """An element ``(sigma, tau)``; equality ignores the label."""

    sigma: Tuple[int, ...]
    tau: Tuple[int, ...]
    label: Optional[ElementLabel] = field(default=None, compare=False)

    @classmethod
    def constant(
        cls, i: int, j: int, n_rows: int, n_cols: int, label: Optional[ElementLabel] = None
    ) -> "TransformationPair":
        return cls((i,) * n_rows, (j,) * n_cols, label)

    @property
    def key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return (self.sigma, self.tau)

    def is_constant(self) -> bool:
        return len(set(self.sigma)) == 1 and len(set(self.tau)) == 1

    def is_idempotent(self) -> bool:
        sigma, tau = np.asarray(self.sigma), np.asarray(self.tau)
        return bool(np.array_equal(sigma[sigma], sigma) and np.array_equal(tau[tau], tau))

    def image_sigma(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.sigma)))

    def kernel_sigma(self) -> Tuple[Tuple[int, ...], ...]:
        """Kernel classes of ``sigma`` ordered by their least member."""
        classes: dict = {}
        for position, value in enumerate(self.sigma):
            classes.setdefault(value, []).append(position)
        return tuple(sorted(tuple(c) for c in classes.values()))

    def describe(self) -> str:
        return self.label.render() if self.label else f"({self.sigma}, {self.tau})"


def compose_pairs(x: TransformationPair, y: TransformationPair) -> TransformationPair:
    """Returns ``x*y``: ``i -> x.sigma(y.sigma(i))`` and ``j -> ((j)x.tau)y.tau``.

    Raises:
        BandConstructionError: if the pairs act on index sets of different sizes.
    """
    if len(x.sigma) != len(y.sigma) or len(x.tau) != len(y.tau):
        raise BandConstructionError(
            f"cannot compose pairs over {len(x.sigma)}x{len(x.tau)} and "
            f"{len(y.sigma)}x{len(y.tau)} index sets"
        )
    sigma = np.take(np.asarray(x.sigma), np.asarray(y.sigma))
    tau = np.take(np.asarray(y.tau), np.asarray(x.tau))
    return TransformationPair(tuple(int(v) for v in sigma), tuple(int(v) for v in tau))
