# src/ig_engine/rees/__init__.py

from .model import (
    KbarForm,
    LbarForm,
    ReesCheck,
    ReesModel,
    base_h_class,
    build_rees_model,
    check_rees_model,
    is_closed_group,
    rees_multiply,
)
from .normal_form import (
    EQUAL,
    NOT_EQUAL,
    REDUCES_TO,
    IgEquality,
    IgNormalForm,
    embed_idempotent,
    ig_equal,
    ig_normal_form,
    left_act,
    parse_band_word,
    project,
    right_act,
)

__all__ = [
    "EQUAL",
    "IgEquality",
    "IgNormalForm",
    "KbarForm",
    "LbarForm",
    "NOT_EQUAL",
    "REDUCES_TO",
    "ReesCheck",
    "ReesModel",
    "base_h_class",
    "build_rees_model",
    "check_rees_model",
    "embed_idempotent",
    "ig_equal",
    "ig_normal_form",
    "is_closed_group",
    "left_act",
    "parse_band_word",
    "project",
    "rees_multiply",
    "right_act",
]
