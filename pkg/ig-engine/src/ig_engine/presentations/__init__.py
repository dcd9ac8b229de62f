# src/ig_engine/presentations/__init__.py

from .maximal import (
    FGenSymbol,
    IgPresentation,
    RelationProvenance,
    cell_generator_names,
    maximal_subgroup_presentation,
)
from .semigroup import (
    BasicRelation,
    SemigroupPresentation,
    basic_pair_mask,
    ig_presentation,
    is_basic_pair,
)

__all__ = [
    "BasicRelation",
    "FGenSymbol",
    "IgPresentation",
    "RelationProvenance",
    "SemigroupPresentation",
    "basic_pair_mask",
    "cell_generator_names",
    "ig_presentation",
    "is_basic_pair",
    "maximal_subgroup_presentation",
]
