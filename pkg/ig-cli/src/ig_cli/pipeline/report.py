# src/ig_cli/pipeline/report.py

"""Turns a pipeline context into a :class:`PipelineReport` and prints it."""

from typing import List, Optional

from ig_core.bands import expected_bg_size
from ig_core.logging import log_step
from ig_core.presentations import is_cayley_form
from ig_engine.groups import FAIL, PASS, UNKNOWN
from ig_engine.tietze import render_grid_table
from ig_persist import (
    BandSummary,
    PipelineReport,
    PresentationSizes,
    ReesSummary,
    TraceSummary,
    VerdictRecord,
    VerificationSummary,
    WordResult,
    squares_document,
)
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from .runner import SerialStageRunner, StageRunner
from .stages import PipelineContext, stages_until

IG_EQUALS_RIG = "IG(B_G) = RIG(B_G): the band is regular, so the two coincide"
STRICTLY_ABOVE = "singular squares only use witnesses strictly above the grid's D-class"
CONVERTED = "the input was not in Cayley form; the conversion used is one valid choice among several"


def _worst(statuses: List[str]) -> str:
    if FAIL in statuses:
        return FAIL
    if UNKNOWN in statuses:
        return UNKNOWN
    return PASS


def _band_summary(context: PipelineContext) -> Optional[BandSummary]:
    band, grid = context.band, context.grid
    if band is None:
        return None
    expected = None
    formula = "n/a"
    if context.cayley is not None and context.table_path is None:
        expected = expected_bg_size(
            len(context.cayley.generators), len(context.cayley.relations)
        )
        formula = PASS if expected == band.size else FAIL
    return BandSummary(
        size=band.size,
        expected_size=expected,
        formula_check=formula,
        kernel_size=len(band.kernel),
        upper_size=len(band.upper),
        grid_shape=list(grid.shape) if grid is not None else [],
    )


def _rees_summary(context: PipelineContext) -> Optional[ReesSummary]:
    model, check = context.rees, context.rees_check
    if model is None or check is None:
        return None
    return ReesSummary(
        mode=model.group.mode,
        shape=list(model.shape),
        idempotent_cells=check.idempotent_cells,
        basic_pairs_checked=check.basic_pairs_checked,
        basic_pair_failures=list(check.basic_pair_failures),
        h_class_order=check.h_class_order,
        sandwich=[[w.render() for w in row] for row in model.sandwich],
    )


def _word_result(context: PipelineContext) -> Optional[WordResult]:
    if context.word_form is None or context.word_text is None:
        return None
    return WordResult(
        word=context.word_text,
        normal_form=context.word_form.render(),
        compare=context.compare_text,
        compare_normal_form=(
            context.compare_form.render() if context.compare_form is not None else None
        ),
        equality=context.equality.describe() if context.equality is not None else None,
    )


def report_status(context: PipelineContext) -> str:
    """``fail`` beats ``unknown`` beats ``pass`` over every verdict computed so far."""
    statuses: List[str] = []
    summary = _band_summary(context)
    if summary is not None and summary.formula_check == FAIL:
        statuses.append(FAIL)
    if context.trace is not None and context.trace.checkpoint_status() == FAIL:
        statuses.append(FAIL)
    if context.theorem is not None:
        statuses.append(context.theorem.status)
    if context.rees_check is not None and not context.rees_check.ok:
        statuses.append(FAIL)
    return _worst(statuses)


def build_report(context: PipelineContext, stage: str) -> PipelineReport:
    report = PipelineReport(stage=stage, status=report_status(context))
    if context.presentation is not None:
        report.input_presentation = context.presentation.render()
    if context.cayley is not None:
        report.cayley_form = context.cayley.render()
        report.generator_map = {g: w.render() for g, w in context.generator_map.items()}
    if context.presentation is not None and not is_cayley_form(context.presentation):
        report.facts.append(CONVERTED)
    report.band = _band_summary(context)
    if context.band is not None and context.band.is_bg:
        report.facts.append(IG_EQUALS_RIG)
    band, grid, squares = context.band, context.grid, context.squares
    if squares is not None and band is not None and grid is not None:
        document = squares_document(band, grid, squares)
        report.square_counts = document.counts
        report.facts.append(STRICTLY_ABOVE)
    if context.ig is not None:
        report.base = list(context.ig.base_names())
        report.presentation_sizes = PresentationSizes(
            generators=len(context.ig.generators),
            relations=len(context.ig.relations),
            line_one=len(context.ig.line_one_relations()),
            line_two=len(context.ig.line_two_relations()),
        )
        report.presentation = context.ig.render()
    if context.semigroup is not None:
        report.presentation = context.semigroup.render()
    if context.trace is not None and context.simplified is not None:
        report.trace = TraceSummary(
            strategy=context.trace.strategy,
            eliminations=context.trace.eliminations,
            steps=len(context.trace.steps),
            checkpoint_status=context.trace.checkpoint_status(),
            warnings=list(context.trace.warnings),
        )
        report.final_presentation = context.simplified.render()
    if context.table is not None:
        report.grid_rows = list(context.table.row_labels)
        report.grid_cols = list(context.table.col_labels)
        report.grid_table = [[w.render() for w in row] for row in context.table.entries]
    if context.theorem is not None:
        report.verification = VerificationSummary(
            status=context.theorem.status,
            input_order=context.theorem.input_order,
            output_order=context.theorem.output_order,
            checks=[
                VerdictRecord(
                    name=c.name, stage=c.stage, status=c.status, detail=c.detail
                )
                for c in context.theorem.checks
            ],
        )
    report.rees = _rees_summary(context)
    report.word = _word_result(context)
    report.warnings = list(dict.fromkeys(context.warnings))
    return report


def run_pipeline(
    context: PipelineContext, last: str = "rees", runner: Optional[StageRunner] = None
) -> PipelineReport:
    """Runs every stage up to ``last`` and reports on what they produced.

    Raises:
        StageError: naming the first stage that failed.
    """
    runner = runner or SerialStageRunner()
    stages = stages_until(last, from_table=context.table_path is not None)
    runner.run(stages, context)
    report = build_report(context, last)
    log_step(f"Pipeline finished at stage {last} with status {report.status}")
    return report


def exit_code(report: PipelineReport, allow_unknown: bool) -> int:
    if report.status == FAIL:
        return 1
    if report.status == UNKNOWN and not allow_unknown:
        return 3
    return 0


# ------------------------------------------------------------------------
# Text rendering
# ------------------------------------------------------------------------


def _section(out: Console, title: str, body: str) -> None:
    out.rule(title)
    out.print(body.rstrip("\n"), markup=False, highlight=False)


def render_text(report: PipelineReport, context: PipelineContext, out: Console) -> None:
    if report.input_presentation is not None:
        _section(out, "Input presentation", report.input_presentation)
    if report.cayley_form is not None:
        _section(out, "Cayley form", report.cayley_form)
        if report.generator_map:
            mapping = "\n".join(f"{g} -> {w}" for g, w in report.generator_map.items())
            _section(out, "Generator map", mapping)
    if report.band is not None:
        b = report.band
        lines = [f"|B| = {b.size}"]
        if b.expected_size is not None:
            lines.append(f"expected {b.expected_size}: {b.formula_check}")
        lines.append(f"kernel {b.kernel_size}, upper {b.upper_size}")
        if b.grid_shape:
            lines.append(f"grid {b.grid_shape[0]}x{b.grid_shape[1]}")
        _section(out, "Band", "\n".join(lines))
    if report.square_counts:
        counts = "\n".join(
            f"{kind}: {n}" for kind, n in sorted(report.square_counts.items())
        )
        _section(out, "Singular squares", counts)
    if report.presentation_sizes is not None and report.presentation is not None:
        s = report.presentation_sizes
        header = (
            f"base {' = '.join(report.base)}; {s.generators} generators, "
            f"{s.relations} relations ({s.line_one} base, {s.line_two} squares)"
        )
        _section(out, "Presentation", header + "\n" + report.presentation)
    if report.trace is not None and report.final_presentation is not None:
        t = report.trace
        header = (
            f"strategy {t.strategy}; {t.eliminations} eliminations in {t.steps} steps; "
            f"checkpoints {t.checkpoint_status}"
        )
        body = header + "\n" + report.final_presentation
        _section(out, "Simplified presentation", body)
    if context.table is not None:
        _section(out, "Grid table", render_grid_table(context.table))
    if report.verification is not None:
        out.rule("Verification")
        table = Table(show_header=True, header_style="bold")
        for column in ("check", "stage", "status", "detail"):
            table.add_column(column)
        for c in report.verification.checks:
            table.add_row(c.name, c.stage, c.status, escape(c.detail))
        out.print(table)
        v = report.verification
        out.print(f"orders {v.input_order} / {v.output_order}", markup=False)
    if report.rees is not None:
        r = report.rees
        lines = [
            f"mode {r.mode}, shape {r.shape[0]}x{r.shape[1]}",
            f"idempotent cells {r.idempotent_cells}",
            f"basic pairs checked {r.basic_pairs_checked}, "
            f"failures {len(r.basic_pair_failures)}",
            f"base H-class order {r.h_class_order}",
        ]
        _section(out, "Rees model", "\n".join(lines + r.basic_pair_failures))
    if report.word is not None:
        w = report.word
        lines = [f"{w.word} -> {w.normal_form}"]
        if w.compare is not None:
            lines.append(f"{w.compare} -> {w.compare_normal_form}")
            lines.append(f"equality: {w.equality}")
        _section(out, "Word", "\n".join(lines))
    if report.facts:
        _section(out, "Facts", "\n".join(report.facts))
    out.rule(f"status {report.status}")
