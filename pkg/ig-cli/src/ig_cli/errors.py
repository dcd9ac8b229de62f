# src/ig_cli/errors.py

from ig_core.errors import IgBandsError


class ConfigError(IgBandsError):
    """Raised when the merged configuration fails validation or cannot be read."""


class StageError(IgBandsError):
    """Wraps any failure inside a pipeline stage, naming the stage."""

    def __init__(self, stage: str, cause: BaseException):
        self.stage = stage
        self.cause = cause
        super().__init__(f"stage '{stage}' failed: {cause}")
