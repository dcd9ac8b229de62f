# src/ig_cli/config/schemas.py
from typing import Literal, Optional

from pydantic import BaseModel, Field


class EnumerationConfig(BaseModel):
    max_cosets: int = Field(100_000, gt=0)


class SimplificationConfig(BaseModel):
    strategy: Literal["paper", "greedy"] = "paper"
    max_defining_length: int = Field(16, gt=0)
    checkpoint_interval: int = Field(10, gt=0)
    verify_checkpoints: Optional[bool] = None
    checkpoint_alphabet_limit: int = Field(4, ge=0)
    checkpoint_max_cosets: int = Field(20_000, gt=0)


class ReportConfig(BaseModel):
    format: Literal["text", "json"] = "text"
    allow_unknown: bool = False
    output: Optional[str] = None


class LoggingConfig(BaseModel):
    verbose: bool = False


# Main Application Config Schema
class AppConfig(BaseModel):
    enumeration: EnumerationConfig = EnumerationConfig()
    simplification: SimplificationConfig = SimplificationConfig()
    report: ReportConfig = ReportConfig()
    logging: LoggingConfig = LoggingConfig()
