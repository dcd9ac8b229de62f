# src/ig_cli/pipeline/__init__.py

from .report import build_report, exit_code, render_text, report_status, run_pipeline
from .runner import SerialStageRunner, StageProtocol, StageRunner
from .stages import PIPELINE, PipelineContext, stages_until

__all__ = [
    "PIPELINE",
    "PipelineContext",
    "SerialStageRunner",
    "StageProtocol",
    "StageRunner",
    "build_report",
    "exit_code",
    "render_text",
    "report_status",
    "run_pipeline",
    "stages_until",
]
