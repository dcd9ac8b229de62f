# src/ig_persist/__init__.py
"""
JSON persistence for the IG(B_G) pipeline.

Reports, traces, square lists and coset tables are Pydantic models that
carry a top-level ``"schema"`` version; `FileReportStore` saves and loads
them as JSON files.
"""

from .export import coset_table_document, squares_document, trace_document
from .models import (
    SCHEMA_VERSION,
    BandSummary,
    CosetTableDocument,
    Document,
    PipelineReport,
    PresentationSizes,
    ReesSummary,
    SquaresDocument,
    TraceDocument,
    TraceSummary,
    VerdictRecord,
    VerificationSummary,
    WordResult,
)
from .store import FileReportStore, ReportStore, dump_document

__all__ = [
    "BandSummary",
    "CosetTableDocument",
    "Document",
    "FileReportStore",
    "PipelineReport",
    "PresentationSizes",
    "ReesSummary",
    "ReportStore",
    "SCHEMA_VERSION",
    "SquaresDocument",
    "TraceDocument",
    "TraceSummary",
    "VerdictRecord",
    "VerificationSummary",
    "WordResult",
    "coset_table_document",
    "dump_document",
    "squares_document",
    "trace_document",
]
