# src/ig_cli/cli.py

from pathlib import Path
from typing import Optional

import typer
from ig_core.logging import set_verbose, warn
from ig_engine.errors import EnumerationOverflow
from ig_engine.groups import todd_coxeter
from ig_persist import (
    CosetTableDocument,
    FileReportStore,
    PipelineReport,
    TraceDocument,
    coset_table_document,
    dump_document,
    squares_document,
    trace_document,
)
from rich.console import Console
from rich.markup import escape

from ig_cli.config import AppConfig, flag_overrides, load_config
from ig_cli.errors import ConfigError, StageError
from ig_cli.pipeline import PipelineContext, exit_code, render_text, run_pipeline

# ------------------------------------------------------------------------
# Global constants
# ------------------------------------------------------------------------

INPUT_OPTION = typer.Option(
    None,
    "--input",
    "-i",
    help="Group presentation file (gens/rel lines).",
    dir_okay=False,
)

FORMAT_OPTION = typer.Option(
    None, "--format", "-f", help="Report format: text or json."
)

MAX_COSETS_OPTION = typer.Option(
    None, "--max-cosets", help="Coset limit for every enumeration."
)

STRATEGY_OPTION = typer.Option(
    None, "--strategy", help="Simplification strategy: paper or greedy."
)

ALLOW_UNKNOWN_OPTION = typer.Option(
    False,
    "--allow-unknown",
    help="Exit 0 when a verdict is unknown because enumeration hit its limit.",
)

CONFIG_OPTION = typer.Option(
    None,
    "--config",
    "-c",
    help="YAML file merged over the packaged defaults.",
    dir_okay=False,
)

OUTPUT_OPTION = typer.Option(
    None, "--output", "-o", help="Also save the JSON report to this path."
)

VERBOSE_OPTION = typer.Option(False, "--verbose", "-v", help="Print stage progress.")

TABLE_OPTION = typer.Option(
    None,
    "--table",
    help="Raw band as a JSON multiplication table instead of a presentation.",
    dir_okay=False,
)

DCLASS_OPTION = typer.Option(
    None, "--dclass", help="Index of the D-class to lay out (default: the kernel)."
)

IG_OPTION = typer.Option(
    False, "--ig", help="Print the IG(E) semigroup presentation as well."
)

TRACE_OUT_OPTION = typer.Option(
    None, "--trace-out", help="Save the simplification trace as JSON."
)

COSET_TABLE_OUT_OPTION = typer.Option(
    None, "--coset-table-out", help="Save the input group's coset table as JSON."
)

WORD_OPTION = typer.Option(None, "--word", "-w", help="Word over band elements.")

COMPARE_OPTION = typer.Option(
    None, "--compare", help="Second word to compare in IG(B_G)."
)

app = typer.Typer(
    name="igbands",
    help="Free idempotent generated semigroups over the band B_G of a presentation.",
    add_completion=False,
)
console = Console()
err_console = Console(stderr=True)


# ------------------------------------------------------------------------
# Shared plumbing
# ------------------------------------------------------------------------


def _config(
    config_file: Optional[Path],
    output_format: Optional[str],
    max_cosets: Optional[int],
    strategy: Optional[str],
    allow_unknown: bool,
    output: Optional[Path],
    verbose: bool,
) -> AppConfig:
    overrides = flag_overrides(
        report__format=output_format,
        enumeration__max_cosets=max_cosets,
        simplification__strategy=strategy,
        report__allow_unknown=True if allow_unknown else None,
        report__output=str(output) if output is not None else None,
        logging__verbose=True if verbose else None,
    )
    try:
        config = load_config(config_file, overrides)
    except ConfigError as e:
        err_console.print(f"[bold red]Error: {escape(str(e))}[/bold red]")
        raise typer.Exit(code=2) from e
    set_verbose(config.logging.verbose)
    return config


def _run(context: PipelineContext, last: str) -> PipelineReport:
    try:
        return run_pipeline(context, last)
    except StageError as e:
        err_console.print(f"[bold red]Error: {escape(str(e))}[/bold red]")
        raise typer.Exit(code=2) from e


def _finish(context: PipelineContext, report: PipelineReport) -> None:
    """Prints the report, saves it if asked, and exits with the verdict's code."""
    settings = context.config.report
    if settings.format == "json":
        typer.echo(dump_document(report), nl=False)
    else:
        render_text(report, context, console)
    if settings.output:
        FileReportStore(settings.output).save(report)
    code = exit_code(report, settings.allow_unknown)
    if code:
        raise typer.Exit(code=code)


# ------------------------------------------------------------------------
# Commands
# ------------------------------------------------------------------------
@app.command()
def cayley(
    input_path: Optional[Path] = INPUT_OPTION,
    output_format: Optional[str] = FORMAT_OPTION,
    max_cosets: Optional[int] = MAX_COSETS_OPTION,
    strategy: Optional[str] = STRATEGY_OPTION,
    allow_unknown: bool = ALLOW_UNKNOWN_OPTION,
    config_file: Optional[Path] = CONFIG_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Convert a presentation to Cayley form."""
    config = _config(
        config_file, output_format, max_cosets, strategy, allow_unknown, output, verbose
    )
    context = PipelineContext(config, input_path=input_path)
    _finish(context, _run(context, "cayley"))


@app.command()
def build(
    input_path: Optional[Path] = INPUT_OPTION,
    table: Optional[Path] = TABLE_OPTION,
    output_format: Optional[str] = FORMAT_OPTION,
    max_cosets: Optional[int] = MAX_COSETS_OPTION,
    strategy: Optional[str] = STRATEGY_OPTION,
    allow_unknown: bool = ALLOW_UNKNOWN_OPTION,
    config_file: Optional[Path] = CONFIG_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Build the band B_G, or check a raw band table, and report its size."""
    config = _config(
        config_file, output_format, max_cosets, strategy, allow_unknown, output, verbose
    )
    context = PipelineContext(config, input_path=input_path, table_path=table)
    _finish(context, _run(context, "grid"))


@app.command()
def squares(
    input_path: Optional[Path] = INPUT_OPTION,
    table: Optional[Path] = TABLE_OPTION,
    dclass: Optional[int] = DCLASS_OPTION,
    output_format: Optional[str] = FORMAT_OPTION,
    max_cosets: Optional[int] = MAX_COSETS_OPTION,
    strategy: Optional[str] = STRATEGY_OPTION,
    allow_unknown: bool = ALLOW_UNKNOWN_OPTION,
    config_file: Optional[Path] = CONFIG_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """List the singular squares of a D-class (the kernel by default)."""
    config = _config(
        config_file, output_format, max_cosets, strategy, allow_unknown, output, verbose
    )
    context = PipelineContext(
        config, input_path=input_path, table_path=table, dclass=dclass
    )
    report = _run(context, "squares")
    if config.report.format == "json":
        assert context.band is not None and context.grid is not None
        assert context.squares is not None
        document = squares_document(context.band, context.grid, context.squares)
        typer.echo(dump_document(document), nl=False)
        if config.report.output:
            FileReportStore(config.report.output).save(report)
        code = exit_code(report, config.report.allow_unknown)
        if code:
            raise typer.Exit(code=code)
        return
    _finish(context, report)


@app.command()
def present(
    input_path: Optional[Path] = INPUT_OPTION,
    ig: bool = IG_OPTION,
    output_format: Optional[str] = FORMAT_OPTION,
    max_cosets: Optional[int] = MAX_COSETS_OPTION,
    strategy: Optional[str] = STRATEGY_OPTION,
    allow_unknown: bool = ALLOW_UNKNOWN_OPTION,
    config_file: Optional[Path] = CONFIG_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Print the presentation of the maximal subgroup at the base cell."""
    config = _config(
        config_file, output_format, max_cosets, strategy, allow_unknown, output, verbose
    )
    context = PipelineContext(config, input_path=input_path, semigroup_presentation=ig)
    _finish(context, _run(context, "present"))


@app.command()
def simplify(
    input_path: Optional[Path] = INPUT_OPTION,
    trace_out: Optional[Path] = TRACE_OUT_OPTION,
    output_format: Optional[str] = FORMAT_OPTION,
    max_cosets: Optional[int] = MAX_COSETS_OPTION,
    strategy: Optional[str] = STRATEGY_OPTION,
    allow_unknown: bool = ALLOW_UNKNOWN_OPTION,
    config_file: Optional[Path] = CONFIG_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Simplify the maximal-subgroup presentation and print the grid table."""
    config = _config(
        config_file, output_format, max_cosets, strategy, allow_unknown, output, verbose
    )
    context = PipelineContext(config, input_path=input_path)
    report = _run(context, "simplify")
    if trace_out is not None and context.trace is not None:
        FileReportStore(trace_out, model=TraceDocument).save(
            trace_document(context.trace)
        )
    _finish(context, report)


@app.command()
def verify(
    input_path: Optional[Path] = INPUT_OPTION,
    coset_table_out: Optional[Path] = COSET_TABLE_OUT_OPTION,
    output_format: Optional[str] = FORMAT_OPTION,
    max_cosets: Optional[int] = MAX_COSETS_OPTION,
    strategy: Optional[str] = STRATEGY_OPTION,
    allow_unknown: bool = ALLOW_UNKNOWN_OPTION,
    config_file: Optional[Path] = CONFIG_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Check that the simplified presentation defines the input group."""
    config = _config(
        config_file, output_format, max_cosets, strategy, allow_unknown, output, verbose
    )
    context = PipelineContext(config, input_path=input_path)
    report = _run(context, "verify")
    if coset_table_out is not None and context.cayley is not None:
        try:
            table = todd_coxeter(
                context.cayley.as_group_presentation(), config.enumeration.max_cosets
            )
            FileReportStore(coset_table_out, model=CosetTableDocument).save(
                coset_table_document(table)
            )
        except EnumerationOverflow as e:
            warn(f"no coset table written: {e}")
    _finish(context, report)


@app.command()
def rees(
    input_path: Optional[Path] = INPUT_OPTION,
    output_format: Optional[str] = FORMAT_OPTION,
    max_cosets: Optional[int] = MAX_COSETS_OPTION,
    strategy: Optional[str] = STRATEGY_OPTION,
    allow_unknown: bool = ALLOW_UNKNOWN_OPTION,
    config_file: Optional[Path] = CONFIG_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Build the Rees matrix model of the kernel and check it."""
    config = _config(
        config_file, output_format, max_cosets, strategy, allow_unknown, output, verbose
    )
    context = PipelineContext(config, input_path=input_path)
    _finish(context, _run(context, "rees"))


@app.command()
def word(
    input_path: Optional[Path] = INPUT_OPTION,
    word_text: Optional[str] = WORD_OPTION,
    compare: Optional[str] = COMPARE_OPTION,
    output_format: Optional[str] = FORMAT_OPTION,
    max_cosets: Optional[int] = MAX_COSETS_OPTION,
    strategy: Optional[str] = STRATEGY_OPTION,
    allow_unknown: bool = ALLOW_UNKNOWN_OPTION,
    config_file: Optional[Path] = CONFIG_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Normal form of a word in IG(B_G), optionally compared with a second word."""
    config = _config(
        config_file, output_format, max_cosets, strategy, allow_unknown, output, verbose
    )
    context = PipelineContext(
        config, input_path=input_path, word_text=word_text, compare_text=compare
    )
    _finish(context, _run(context, "word"))


@app.command()
def pipeline(
    input_path: Optional[Path] = INPUT_OPTION,
    output_format: Optional[str] = FORMAT_OPTION,
    max_cosets: Optional[int] = MAX_COSETS_OPTION,
    strategy: Optional[str] = STRATEGY_OPTION,
    allow_unknown: bool = ALLOW_UNKNOWN_OPTION,
    config_file: Optional[Path] = CONFIG_OPTION,
    output: Optional[Path] = OUTPUT_OPTION,
    verbose: bool = VERBOSE_OPTION,
):
    """Run every stage from the presentation to the Rees model."""
    config = _config(
        config_file, output_format, max_cosets, strategy, allow_unknown, output, verbose
    )
    context = PipelineContext(config, input_path=input_path)
    _finish(context, _run(context, "rees"))


if __name__ == "__main__":
    app()
