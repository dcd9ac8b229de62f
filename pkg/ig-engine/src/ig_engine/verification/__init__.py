# src/ig_engine/verification/__init__.py

from .theorem import (
    NOT_APPLICABLE,
    CheckResult,
    TheoremReport,
    backward_images,
    forward_images,
    verify_theorem,
)

__all__ = [
    "CheckResult",
    "NOT_APPLICABLE",
    "TheoremReport",
    "backward_images",
    "forward_images",
    "verify_theorem",
]
