# src/ig_core/presentations/__init__.py

from .cayley import (
    CayleyFormPresentation,
    CayleyTriple,
    CayleyValidation,
    is_cayley_form,
    to_cayley_form,
    validate_cayley_form,
)
from .parser import parse_group_presentation
from .presentation import (
    GenOrigin,
    GenSymbol,
    GroupPresentation,
    OriginKind,
    Relation,
)
from .words import Word, canonical_relator, cyclic_reduce, free_reduce, substitute

__all__ = [
    "CayleyFormPresentation",
    "CayleyTriple",
    "CayleyValidation",
    "GenOrigin",
    "GenSymbol",
    "GroupPresentation",
    "OriginKind",
    "Relation",
    "Word",
    "canonical_relator",
    "cyclic_reduce",
    "free_reduce",
    "is_cayley_form",
    "parse_group_presentation",
    "substitute",
    "to_cayley_form",
    "validate_cayley_form",
]
