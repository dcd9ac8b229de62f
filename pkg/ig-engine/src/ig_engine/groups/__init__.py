# src/ig_engine/groups/__init__.py

from .coset_table import DEFAULT_MAX_COSETS, CosetTable, prepared_relators, todd_coxeter
from .homomorphism import FAIL, PASS, UNKNOWN, HomomorphismVerdict, verify_homomorphism
from .oracle import (
    FiniteGroupOracle,
    GroupOracle,
    SymbolicGroupOracle,
    group_multiply,
    oracle_for,
)

__all__ = [
    "CosetTable",
    "DEFAULT_MAX_COSETS",
    "FAIL",
    "FiniteGroupOracle",
    "GroupOracle",
    "HomomorphismVerdict",
    "PASS",
    "SymbolicGroupOracle",
    "UNKNOWN",
    "group_multiply",
    "oracle_for",
    "prepared_relators",
    "todd_coxeter",
    "verify_homomorphism",
]
