# src/ig_core/logging/__init__.py

from .console import console, is_verbose, log_step, set_verbose, warn

__all__ = ["console", "is_verbose", "log_step", "set_verbose", "warn"]
