"""
정점 추이 그래프 격자 표 재현
- TABLE1: 14 행 (그래프, 거리 추이 여부, 정점 수, λ, 중복도, 격자 이름)
- TABLE2: Johnson J(n,2), n = 4..10 (λ = n-4 와 λ = -2)
- 각 행을 파이프라인으로 재계산 후 기대값과 비교 (PASS / FAIL / RANK_ONLY)
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Tuple

from cli.dsl import parse_graph
from cli.pipeline import run_pipeline
from cli.reports import EigenRecord, PipelineReport, TableRowResult
from config import Config
from database.recorder import ReportRecorder
from utils.db import log_event
from utils.errors import ReportError


@dataclass(frozen=True)
class TableRow:
    graph: str
    distance_transitive: bool
    vertices: int
    eigenvalue: Fraction
    multiplicity: int
    lattice: Optional[str]

    @property
    def key(self) -> str:
        return f"{self.graph} λ={self.eigenvalue}"


def _row(graph: str, dt: bool, n: int, lam: int, mult: int, lattice: Optional[str]) -> TableRow:
    return TableRow(graph, dt, n, Fraction(lam), mult, lattice)


TABLE1: Tuple[TableRow, ...] = (
    _row("empty(4)", False, 4, 0, 4, "Z4"),
    _row("complete(5)", True, 5, -1, 4, "A4_dual"),
    _row("hamming(2,3)", True, 9, 1, 4, "A2xA2"),
    _row("petersen", True, 10, -2, 4, "A4_dual"),
    _row("petersen", True, 10, 1, 5, "A5^2"),
    _row("line_graph(petersen)", True, 15, -1, 4, "A4_dual"),
    _row("line_graph(petersen)", True, 15, -2, 5, "A5^3"),
    _row("clebsch", True, 16, -3, 5, "D5_dual"),
    _row("complement(clebsch)", True, 16, 2, 5, "D5_dual"),
    _row("shrikhande", False, 16, 2, 6, "D6_plus"),
    _row("complement(shrikhande)", False, 16, -3, 6, "D6_plus"),
    _row("schlafli", True, 27, 4, 6, "E6_dual"),
    _row("complement(schlafli)", True, 27, -5, 6, "E6_dual"),
    _row("gosset", True, 56, 9, 7, "E7_dual"),
)

# n → (λ = n-4 격자, λ = -2 격자 또는 None)
TABLE2_NAMES: Dict[int, Tuple[str, Optional[str]]] = {
    4: ("Z3", "A2"),
    5: ("A4_dual", "A5^2"),
    6: ("A5^3", None),
    7: ("A6_dual", None),
    8: ("E7_dual", None),
    9: ("A8_dual", None),
    10: ("A9^5", None),
}


def table2_rows(n_max: int) -> Tuple[TableRow, ...]:
    """
    Raises:
        ReportError: n_max 가 4..TABLE2_MAX_N 범위 밖
    """
    limit = Config.TABLE2_MAX_N
    if not 4 <= n_max <= limit:
        raise ReportError(f"table2 supports 4 <= n_max <= {limit}, got {n_max}")
    rows: List[TableRow] = []
    for n in range(4, n_max + 1):
        upper, lower = TABLE2_NAMES[n]
        rows.append(_row(f"johnson({n},2)", True, comb(n, 2), n - 4, n - 1, upper))
        rows.append(_row(f"johnson({n},2)", True, comb(n, 2), -2, n * (n - 3) // 2, lower))
    return tuple(rows)


def compare_row(row: TableRow, report: PipelineReport, table: str) -> TableRowResult:
    """기대 행과 파이프라인 레코드 비교"""
    record: Optional[EigenRecord] = report.record_for(str(row.eigenvalue))
    expected = (f"n={row.vertices} mult={row.multiplicity} "
                f"{row.lattice or 'strongly eutactic'}{' dist.reg.' if row.distance_transitive else ''}")
    if record is None:
        return TableRowResult(table=table, key=row.key, expected=expected,
                              observed="eigenvalue missing", status="FAIL")

    problems = []
    if report.vertices != row.vertices:
        problems.append(f"vertices {report.vertices}")
    if record.multiplicity != row.multiplicity:
        problems.append(f"multiplicity {record.multiplicity}")
    if record.rank is not None and record.rank != row.multiplicity:
        problems.append(f"rank {record.rank}")
    if row.distance_transitive and report.distance_regular is None:
        problems.append("not distance-regular")

    status = "PASS"
    max_rank = Config.get_enum_setting("max_rank")
    if not record.success:
        if record.rank is not None and record.rank > max_rank and row.lattice is None:
            status = "RANK_ONLY"
        else:
            problems.append(record.error or "pipeline error")
    else:
        if not record.strongly_eutactic:
            problems.append("not strongly eutactic")
        if row.lattice is not None and row.lattice not in record.identified:
            problems.append(f"identified {record.identified or 'nothing'}")

    observed = (f"n={report.vertices} mult={record.multiplicity} rank={record.rank} "
                f"{','.join(record.identified) or '-'} strong={record.strongly_eutactic}")
    if problems:
        status = "FAIL"
        observed += " | " + "; ".join(problems)
    return TableRowResult(table=table, key=row.key, expected=expected, observed=observed, status=status)


@dataclass
class TableRun:
    name: str
    results: List[TableRowResult]
    reports: List[PipelineReport]
    processing_time: float

    @property
    def failures(self) -> List[TableRowResult]:
        return [r for r in self.results if r.status == "FAIL"]

    @property
    def passed(self) -> bool:
        return not self.failures


def run_table(name: str, rows: Tuple[TableRow, ...], check_complement: bool = False,
              record: bool = True) -> TableRun:
    """
    행을 그래프별로 묶어 파이프라인 실행 후 비교

    Args:
        name: "table1" / "table2"
        rows: 기대 행
        check_complement: 여그래프 사영 일치도 함께 검사
        record: ReportRecorder 에 결과 저장
    """
    started = time.time()
    grouped: Dict[str, List[TableRow]] = {}
    for row in rows:
        grouped.setdefault(row.graph, []).append(row)

    results: List[TableRowResult] = []
    reports: List[PipelineReport] = []
    by_key: Dict[str, TableRowResult] = {}
    for graph_spec, graph_rows in grouped.items():
        g = parse_graph(graph_spec)
        report = run_pipeline(g, [r.eigenvalue for r in graph_rows],
                              identify=any(r.lattice for r in graph_rows),
                              check_complement=check_complement)
        reports.append(report)
        for row in graph_rows:
            result = compare_row(row, report, name)
            if check_complement:
                rec = report.record_for(str(row.eigenvalue))
                if rec is not None and rec.complement_matches is False:
                    result = result.model_copy(update={
                        "status": "FAIL", "observed": result.observed + " | complement projection differs"})
            by_key[row.key] = result
    results = [by_key[row.key] for row in rows]

    run = TableRun(name, results, reports, round(time.time() - started, 3))
    log_event("tables", "INFO" if run.passed else "ERROR",
              f"{name}: {len(results) - len(run.failures)}/{len(results)} rows in {run.processing_time}s")
    if record and Config.is_db_logging_enabled():
        ReportRecorder().save_table_run(name, [r.model_dump() for r in results], run.processing_time)
    return run


def run_table1(check_complement: bool = False) -> TableRun:
    return run_table("table1", TABLE1, check_complement)


def run_table2(n_max: int = 7) -> TableRun:
    return run_table("table2", table2_rows(n_max))
