# src/ig_core/squares/__init__.py

from .actions import ActionMaps, action_maps
from .singular import (
    SingularSquare,
    SquareKind,
    count_by_kind,
    is_singular_square_oracle,
    singular_squares,
)

__all__ = [
    "ActionMaps",
    "SingularSquare",
    "SquareKind",
    "action_maps",
    "count_by_kind",
    "is_singular_square_oracle",
    "singular_squares",
]
