# src/ig_engine/verification/theorem.py

"""End-to-end check that the maximal subgroup of ``IG(B_G)`` is the input group."""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ig_core.bands import DClassGrid
from ig_core.logging import log_step
from ig_core.presentations import CayleyFormPresentation, GroupPresentation, Word, substitute

from ig_engine.errors import EnumerationOverflow
from ig_engine.groups import (
    DEFAULT_MAX_COSETS,
    FAIL,
    PASS,
    UNKNOWN,
    CosetTable,
    HomomorphismVerdict,
    todd_coxeter,
    verify_homomorphism,
)
from ig_engine.tietze import (
    PAPER,
    GridTable,
    SimplificationTrace,
    expected_grid_entry,
    relation_triples,
)

NOT_APPLICABLE = "n/a"


@dataclass(frozen=True)
class CheckResult:
    name: str
    stage: str
    status: str
    detail: str = ""


@dataclass
class TheoremReport:
    checks: List[CheckResult] = field(default_factory=list)
    input_order: Optional[int] = None
    output_order: Optional[int] = None
    forward_map: Dict[str, Word] = field(default_factory=dict)
    backward_map: Dict[str, Word] = field(default_factory=dict)

    @property
    def status(self) -> str:
        statuses = {c.status for c in self.checks}
        if FAIL in statuses:
            return FAIL
        if UNKNOWN in statuses:
            return UNKNOWN
        return PASS

    @property
    def failing_stage(self) -> Optional[str]:
        for check in self.checks:
            if check.status == FAIL:
                return check.stage
        return None

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _enumerate(p: GroupPresentation, max_cosets: int) -> Optional[CosetTable]:
    try:
        return todd_coxeter(p, max_cosets)
    except EnumerationOverflow:
        return None


def forward_images(cayley: CayleyFormPresentation, table: GridTable) -> Dict[str, Word]:
    """``a -> a_{0',a}``: each input generator goes to its primed-zero row entry."""
    return {a: table.entry_at("0'", a) for a in cayley.generator_names()}


def backward_images(trace: SimplificationTrace, grid: DClassGrid) -> Dict[str, Word]:
    """Each survivor goes to the closed-form entry of the cell it came from."""
    assert grid.row_symbols is not None and grid.col_symbols is not None
    images = {}
    for name in trace.survivors:
        i, j = trace.survivor_cells[name]
        images[name] = expected_grid_entry(grid.row_symbols[i], grid.col_symbols[j])
    return images


def _homomorphism(
    name: str,
    source: GroupPresentation,
    target: GroupPresentation,
    images: Dict[str, Word],
    table: Optional[CosetTable],
    max_cosets: int,
) -> CheckResult:
    if table is None and any(not r.is_trivial() for r in source.relations):
        verdict = HomomorphismVerdict(UNKNOWN, detail=f"target did not enumerate within {max_cosets} cosets")
    else:
        verdict = verify_homomorphism(source, target, images, max_cosets, table)
    return CheckResult(name, "group_engine", verdict.status, verdict.detail)


def _multiset_check(
    cayley: CayleyFormPresentation, simplified: GroupPresentation, trace: SimplificationTrace
) -> CheckResult:
    name = "relation multiset"
    if trace.strategy != PAPER:
        return CheckResult(name, "tietze", NOT_APPLICABLE, f"strategy {trace.strategy} keeps cell names")
    triples = relation_triples(simplified)
    if triples is None:
        return CheckResult(name, "tietze", FAIL, "some relation is not of the form a*b = c")
    expected = Counter(t.names() for t in cayley.relations)
    found = Counter(triples)
    if found != expected:
        missing = sorted((expected - found).elements())
        extra = sorted((found - expected).elements())
        return CheckResult(name, "tietze", FAIL, f"missing {missing}, unexpected {extra}")
    return CheckResult(name, "tietze", PASS, f"{len(triples)} relations a*b = c match the input")


def _grid_check(
    table: GridTable,
    grid: DClassGrid,
    trace: SimplificationTrace,
    backward: Dict[str, Word],
    input_table: Optional[CosetTable],
) -> CheckResult:
    name = "grid closed form"
    assert grid.row_symbols is not None and grid.col_symbols is not None
    literal = trace.strategy == PAPER
    if not literal and input_table is None:
        return CheckResult(name, "tietze", UNKNOWN, "input group did not enumerate")
    for i, row in enumerate(grid.row_symbols):
        for j, col in enumerate(grid.col_symbols):
            expected = expected_grid_entry(row, col)
            actual = table.entry(i, j)
            if literal:
                same = actual == expected
            else:
                assert input_table is not None
                same = input_table.is_identity(substitute(actual, backward) * expected.inverse())
            if not same:
                return CheckResult(
                    name,
                    "tietze",
                    FAIL,
                    f"cell ({row.label},{col.label}) reads {actual.render()}, expected {expected.render()}",
                )
    how = "literally" if literal else "in G"
    return CheckResult(name, "tietze", PASS, f"all {table.shape[0] * table.shape[1]} cells agree {how}")


def verify_theorem(
    cayley: CayleyFormPresentation,
    simplified: GroupPresentation,
    trace: SimplificationTrace,
    table: GridTable,
    grid: DClassGrid,
    max_cosets: int = DEFAULT_MAX_COSETS,
) -> TheoremReport:
    """Checks that ``simplified`` presents the group of ``cayley``.

    The report carries one verdict per check: the relation multiset after
    renaming (paper strategy only), homomorphisms in both directions, the
    two group orders and the closed form of the grid table. Overflow makes
    a verdict ``unknown``, never ``fail``.
    """
    source = cayley.as_group_presentation()
    report = TheoremReport()
    report.checks.append(_multiset_check(cayley, simplified, trace))

    input_table = _enumerate(source, max_cosets)
    output_table = _enumerate(simplified, max_cosets)
    report.input_order = input_table.n if input_table else None
    report.output_order = output_table.n if output_table else None

    report.forward_map = forward_images(cayley, table)
    report.backward_map = backward_images(trace, grid)
    report.checks.append(
        _homomorphism("forward homomorphism", source, simplified, report.forward_map, output_table, max_cosets)
    )
    report.checks.append(
        _homomorphism("backward homomorphism", simplified, source, report.backward_map, input_table, max_cosets)
    )

    if report.input_order is None or report.output_order is None:
        orders = CheckResult("orders", "group_engine", UNKNOWN, f"order unknown at {max_cosets} cosets")
    elif report.input_order == report.output_order:
        orders = CheckResult("orders", "group_engine", PASS, f"{report.input_order} = {report.output_order}")
    else:
        orders = CheckResult("orders", "group_engine", FAIL, f"{report.input_order} != {report.output_order}")
    report.checks.append(orders)

    report.checks.append(_grid_check(table, grid, trace, report.backward_map, input_table))
    log_step(f"Theorem check: {report.status}")
    return report
