# src/ig_cli/config/__init__.py

from .loader import DEFAULTS_PATH, flag_overrides, load_config
from .schemas import (
    AppConfig,
    EnumerationConfig,
    LoggingConfig,
    ReportConfig,
    SimplificationConfig,
)

__all__ = [
    "AppConfig",
    "DEFAULTS_PATH",
    "EnumerationConfig",
    "LoggingConfig",
    "ReportConfig",
    "SimplificationConfig",
    "flag_overrides",
    "load_config",
]
