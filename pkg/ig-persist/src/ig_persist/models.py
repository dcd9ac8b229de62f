# src/ig_persist/models.py

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_VERSION = 1


class Document(BaseModel):
    """Base for every top-level JSON document; carries ``"schema": 1``."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")


class SquareRecord(BaseModel):
    rows: List[str] = Field(..., description="Row labels [i, k] of the square.")
    cols: List[str] = Field(..., description="Column labels [j, l] of the square.")
    kind: str = Field(..., description="'left-right' or 'up-down'.")
    witnesses: List[str] = Field(default_factory=list)


class SquaresDocument(Document):
    grid_shape: List[int]
    counts: Dict[str, int]
    squares: List[SquareRecord]


class CosetTableDocument(Document):
    n: int = Field(..., description="Number of cosets, i.e. the group order.")
    generators: List[str]
    columns: List[str] = Field(..., description="Column labels g, g^-1, ... in table order.")
    action: List[List[int]]
    origin: str = ""


class TraceStepRecord(BaseModel):
    kind: str
    before: List[int]
    after: List[int]
    generator: Optional[str] = None
    word: Optional[str] = None
    relation_index: Optional[int] = None
    relation: Optional[str] = None
    new_name: Optional[str] = None
    phase: str = ""


class CheckpointRecord(BaseModel):
    eliminations: int
    order: Optional[int] = None
    status: str


class PhaseRecord(BaseModel):
    name: str
    substitution: Dict[str, str]


class TraceDocument(Document):
    strategy: str
    steps: List[TraceStepRecord]
    substitution: Dict[str, str]
    survivors: List[str]
    checkpoints: List[CheckpointRecord] = Field(default_factory=list)
    phases: List[PhaseRecord] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)


class BandSummary(BaseModel):
    size: int
    expected_size: Optional[int] = None
    formula_check: str = Field(..., description="'pass' iff the size matches the closed formula.")
    kernel_size: int
    upper_size: int
    grid_shape: List[int]


class PresentationSizes(BaseModel):
    generators: int
    relations: int
    line_one: int
    line_two: int


class TraceSummary(BaseModel):
    strategy: str
    eliminations: int
    steps: int
    checkpoint_status: str
    warnings: List[str] = Field(default_factory=list)


class VerdictRecord(BaseModel):
    name: str
    stage: str
    status: str
    detail: str = ""


class VerificationSummary(BaseModel):
    status: str
    input_order: Optional[int] = None
    output_order: Optional[int] = None
    checks: List[VerdictRecord]


class ReesSummary(BaseModel):
    mode: str
    shape: List[int]
    idempotent_cells: int
    basic_pairs_checked: int
    basic_pair_failures: List[str] = Field(default_factory=list)
    h_class_order: Optional[int] = None
    sandwich: List[List[str]] = Field(default_factory=list)


class WordResult(BaseModel):
    word: str
    normal_form: str
    compare: Optional[str] = None
    compare_normal_form: Optional[str] = None
    equality: Optional[str] = None


class PipelineReport(Document):
    """Everything the pipeline computed up to ``stage``; later sections stay empty."""

    stage: str
    status: str = "pass"
    input_presentation: Optional[str] = None
    cayley_form: Optional[str] = None
    generator_map: Dict[str, str] = Field(default_factory=dict)
    band: Optional[BandSummary] = None
    square_counts: Dict[str, int] = Field(default_factory=dict)
    base: List[str] = Field(default_factory=list)
    presentation_sizes: Optional[PresentationSizes] = None
    presentation: Optional[str] = None
    trace: Optional[TraceSummary] = None
    final_presentation: Optional[str] = None
    grid_rows: List[str] = Field(default_factory=list)
    grid_cols: List[str] = Field(default_factory=list)
    grid_table: List[List[str]] = Field(default_factory=list)
    verification: Optional[VerificationSummary] = None
    rees: Optional[ReesSummary] = None
    word: Optional[WordResult] = None
    facts: List[str] = Field(default_factory=list)
    warnings: List[str] = Field(default_factory=list)
