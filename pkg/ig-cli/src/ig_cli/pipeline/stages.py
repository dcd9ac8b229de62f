# src/ig_cli/pipeline/stages.py

"""The pipeline stages, in execution order.

Each stage reads what earlier stages left in the :class:`PipelineContext`
and adds its own artifact.
"""

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional

from ig_core.bands import (
    Band,
    DClassGrid,
    GreenStructure,
    build_bg,
    dclass_grid,
    green_classes,
    is_band,
    kernel_grid,
    load_band_json,
)
from ig_core.errors import NotABandError, PresentationValidationError
from ig_core.logging import warn
from ig_core.presentations import (
    CayleyFormPresentation,
    GroupPresentation,
    Word,
    parse_group_presentation,
    to_cayley_form,
    validate_cayley_form,
)
from ig_core.squares import SingularSquare, singular_squares
from ig_engine.groups import GroupOracle, oracle_for
from ig_engine.presentations import (
    IgPresentation,
    SemigroupPresentation,
    ig_presentation,
    maximal_subgroup_presentation,
)
from ig_engine.rees import (
    IgEquality,
    IgNormalForm,
    ReesCheck,
    ReesModel,
    build_rees_model,
    check_rees_model,
    ig_equal,
    ig_normal_form,
    parse_band_word,
)
from ig_engine.tietze import (
    GridTable,
    SimplificationTrace,
    SimplifyOptions,
    grid_table,
    simplify,
)
from ig_engine.verification import TheoremReport, verify_theorem

from ig_cli.config import AppConfig

from .runner import StageProtocol


@dataclass
class PipelineContext:
    config: AppConfig
    input_path: Optional[Path] = None
    table_path: Optional[Path] = None
    dclass: Optional[int] = None
    semigroup_presentation: bool = False
    word_text: Optional[str] = None
    compare_text: Optional[str] = None

    completed: List[str] = field(default_factory=list)
    presentation: Optional[GroupPresentation] = None
    cayley: Optional[CayleyFormPresentation] = None
    generator_map: Dict[str, Word] = field(default_factory=dict)
    band: Optional[Band] = None
    green: Optional[GreenStructure] = None
    grid: Optional[DClassGrid] = None
    squares: Optional[List[SingularSquare]] = None
    ig: Optional[IgPresentation] = None
    semigroup: Optional[SemigroupPresentation] = None
    simplified: Optional[GroupPresentation] = None
    trace: Optional[SimplificationTrace] = None
    table: Optional[GridTable] = None
    theorem: Optional[TheoremReport] = None
    oracle: Optional[GroupOracle] = None
    rees: Optional[ReesModel] = None
    rees_check: Optional[ReesCheck] = None
    word_form: Optional[IgNormalForm] = None
    compare_form: Optional[IgNormalForm] = None
    equality: Optional[IgEquality] = None
    warnings: List[str] = field(default_factory=list)


class ParseStage:
    name = "parse"

    def run(self, context: PipelineContext) -> None:
        if context.input_path is None:
            raise FileNotFoundError("no input presentation given (use --input)")
        path = Path(context.input_path)
        if not path.is_file():
            raise FileNotFoundError(f"Presentation file not found at: {path}")
        text = path.read_text(encoding="utf-8")
        context.presentation = parse_group_presentation(text)


class CayleyStage:
    name = "cayley"

    def run(self, context: PipelineContext) -> None:
        assert context.presentation is not None
        cayley, generator_map = to_cayley_form(context.presentation)
        report = validate_cayley_form(cayley)
        if not report.ok or report.presentation is None:
            raise PresentationValidationError(report.errors)
        for message in report.warnings:
            warn(message)
            context.warnings.append(message)
        context.cayley = report.presentation
        context.generator_map = generator_map


class BuildStage:
    """Builds ``B_G``, or reads a raw band table when ``--table`` was given."""

    name = "build"

    def run(self, context: PipelineContext) -> None:
        if context.table_path is not None:
            band = load_band_json(context.table_path)
            check = is_band(band)
            if not check.ok:
                raise NotABandError(check.describe(), check.counterexample)
            context.band = band
            return
        assert context.cayley is not None
        context.band = build_bg(context.cayley)


class GridStage:
    name = "grid"

    def run(self, context: PipelineContext) -> None:
        assert context.band is not None
        green = green_classes(context.band)
        context.green = green
        if context.dclass is None:
            context.grid = kernel_grid(context.band, green)
            return
        in_range = 0 <= context.dclass < len(green.d_classes)
        members = green.d_classes[context.dclass] if in_range else ()
        # dclass_grid reports the bad index itself
        base = members[0] if members else -1
        context.grid = dclass_grid(context.band, green, context.dclass, base)


class SquaresStage:
    name = "squares"

    def run(self, context: PipelineContext) -> None:
        band, green, grid = context.band, context.green, context.grid
        assert band is not None and green is not None and grid is not None
        context.squares = singular_squares(band, green, grid)


class PresentStage:
    name = "present"

    def run(self, context: PipelineContext) -> None:
        band, grid, squares = context.band, context.grid, context.squares
        assert band is not None and grid is not None and squares is not None
        context.ig = maximal_subgroup_presentation(band, grid, squares)
        if context.semigroup_presentation:
            context.semigroup = ig_presentation(band)


class SimplifyStage:
    name = "simplify"

    def run(self, context: PipelineContext) -> None:
        assert context.ig is not None and context.grid is not None
        settings = context.config.simplification
        options = SimplifyOptions(
            max_defining_length=settings.max_defining_length,
            checkpoint_interval=settings.checkpoint_interval,
            verify_checkpoints=settings.verify_checkpoints,
            checkpoint_alphabet_limit=settings.checkpoint_alphabet_limit,
            checkpoint_max_cosets=settings.checkpoint_max_cosets,
        )
        simplified, trace = simplify(context.ig, settings.strategy, options)
        context.simplified, context.trace = simplified, trace
        context.warnings.extend(trace.warnings)
        context.table = grid_table(trace, context.grid)


class VerifyStage:
    name = "verify"

    def run(self, context: PipelineContext) -> None:
        assert context.cayley is not None and context.simplified is not None
        assert context.trace is not None and context.table is not None
        assert context.grid is not None
        context.theorem = verify_theorem(
            context.cayley,
            context.simplified,
            context.trace,
            context.table,
            context.grid,
            context.config.enumeration.max_cosets,
        )


class ReesStage:
    name = "rees"

    def run(self, context: PipelineContext) -> None:
        assert context.simplified is not None and context.table is not None
        oracle = oracle_for(context.simplified, context.config.enumeration.max_cosets)
        if not oracle.is_finite:
            context.warnings.append("Rees model uses symbolic group arithmetic")
        context.oracle = oracle
        context.rees = build_rees_model(
            context.table, oracle, context.band, context.grid
        )
        context.rees_check = check_rees_model(context.rees)


class WordStage:
    name = "word"

    def run(self, context: PipelineContext) -> None:
        assert context.rees is not None and context.band is not None
        if context.word_text is None:
            raise ValueError("no word given (use --word)")
        word = parse_band_word(context.band, context.word_text)
        context.word_form = ig_normal_form(context.rees, word)
        if context.compare_text is not None:
            other = parse_band_word(context.band, context.compare_text)
            context.compare_form = ig_normal_form(context.rees, other)
            context.equality = ig_equal(context.rees, word, other)


PIPELINE: List[StageProtocol] = [
    ParseStage(),
    CayleyStage(),
    BuildStage(),
    GridStage(),
    SquaresStage(),
    PresentStage(),
    SimplifyStage(),
    VerifyStage(),
    ReesStage(),
]


def stages_until(last: str, from_table: bool = False) -> List[StageProtocol]:
    """The pipeline prefix ending with stage ``last``.

    With ``from_table`` the band comes from a raw table, so parsing and the
    Cayley-form conversion are skipped.
    """
    names = [s.name for s in PIPELINE]
    if last == WordStage.name:
        return stages_until(ReesStage.name) + [WordStage()]
    if last not in names:
        raise ValueError(f"unknown stage {last!r}")
    stages = PIPELINE[: names.index(last) + 1]
    if from_table:
        skipped = (ParseStage.name, CayleyStage.name)
        stages = [s for s in stages if s.name not in skipped]
    return stages
