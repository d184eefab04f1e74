"""
그래프 → 스펙트럼 → 격자 → 성질 → 식별 파이프라인
- 유리 고유값마다 작업 하나 (ThreadPoolExecutor 병렬)
- 고유값별 오류는 레코드에 문자열로 기록하고 나머지는 계속 진행
- 리포트 조립은 단일 스레드, 완료 후 RunDB 에 저장
"""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from cli.reports import EigenRecord, PipelineReport, SpectrumEntry
from config import Config
from graphs.checks import is_distance_regular, is_regular
from graphs.graph import Graph
from identify.identifier import identify_matches
from lattices.enumeration import minimal_vectors
from lattices.eutaxy import EutaxyKind, perfection_check, strong_eutaxy_check
from lattices.geometry import coherence
from lattices.lattice import graph_lattice
from spectral.eigen import complement_check_applies, complement_projection_matches, rational_spectrum
from utils.db import get_run_db, log_event
from utils.errors import GraphError, LatticeToolkitError, SpectralError


@dataclass(frozen=True)
class PipelineOptions:
    eigenvalues: Tuple[Fraction, ...] = ()
    identify: bool = True
    check_complement: bool = False
    workers: Optional[int] = None
    save: bool = True


class GraphLatticePipeline:
    """그래프 하나에 대한 전체 파이프라인"""

    def __init__(self, g: Graph, options: Optional[PipelineOptions] = None):
        self.g = g
        self.options = options or PipelineOptions()
        self.degree = is_regular(g)

    def _eigen_record(self, eigenvalue: Fraction, multiplicity: int) -> EigenRecord:
        started = time.time()
        fields = {"eigenvalue": str(eigenvalue), "multiplicity": multiplicity}
        try:
            lattice = graph_lattice(self.g, eigenvalue)
            fields["rank"] = lattice.rank
            mv = minimal_vectors(lattice)
            fields["min_norm_sq"] = str(mv.min_norm_sq)
            fields["kissing"] = mv.kissing_number
            fields["strongly_eutactic"] = strong_eutaxy_check(lattice).kind is EutaxyKind.STRONG
            fields["perfect"] = perfection_check(lattice)
            if lattice.rank >= 2:
                fields["coherence_sq"] = str(coherence(lattice).cos_sq)
            if self.options.identify:
                matches = identify_matches(lattice)
                fields["identified"] = [m.name for m in matches]
                fields["confidence"] = {m.name: m.confidence.value for m in matches}
            if self.options.check_complement and complement_check_applies(self.g, eigenvalue):
                fields["complement_matches"] = complement_projection_matches(self.g, eigenvalue)
        except LatticeToolkitError as e:
            log_event("pipeline", "ERROR", f"{self.g.label} λ={eigenvalue}: {type(e).__name__}: {e}")
            fields["success"] = False
            fields["error"] = f"{type(e).__name__}: {e}"
        fields["elapsed"] = round(time.time() - started, 3)
        return EigenRecord(**fields)

    def run(self) -> PipelineReport:
        """
        파이프라인 실행

        Returns:
            PipelineReport (고유값 내림차순, 유리 고유값당 레코드 하나)

        Raises:
            SpectralError: 선택한 λ 가 유리 고유값이 아닌 경우
        """
        started = time.time()
        spectrum = rational_spectrum(self.g)
        targets = list(spectrum.entries)
        if self.options.eigenvalues:
            available = spectrum.as_dict()
            missing = [lam for lam in self.options.eigenvalues if lam not in available]
            if missing:
                shown = ", ".join(map(str, missing))
                raise SpectralError(f"{shown} not a rational eigenvalue of {self.g.label}")
            targets = [(e, m) for e, m in targets if e in self.options.eigenvalues]

        workers = self.options.workers or Config.PIPELINE_WORKERS
        if workers > 1 and len(targets) > 1:
            with ThreadPoolExecutor(max_workers=min(workers, len(targets))) as pool:
                records: List[EigenRecord] = list(pool.map(lambda t: self._eigen_record(*t), targets))
        else:
            records = [self._eigen_record(e, m) for e, m in targets]

        try:
            drg = is_distance_regular(self.g)
        except GraphError:
            drg = None

        report = PipelineReport(
            graph=self.g.label,
            vertices=self.g.n,
            regular_degree=self.degree,
            distance_regular=str(drg) if drg is not None else None,
            spectrum=[SpectrumEntry(eigenvalue=str(e), multiplicity=m) for e, m in spectrum.entries],
            irrational_degree=spectrum.residual_degree,
            records=records,
            processing_time=round(time.time() - started, 3),
        )
        failed = sum(not r.success for r in records)
        log_event("pipeline", "WARNING" if failed else "INFO",
                  f"{self.g.label}: {len(records)} eigenvalues, {failed} failed, {report.processing_time}s")
        if self.options.save and Config.is_db_logging_enabled():
            get_run_db().save_pipeline_report(self.g.label, report.model_dump_json(), report.processing_time)
        return report


def run_pipeline(g: Graph, eigenvalues: Sequence = (), identify: bool = True,
                 check_complement: bool = False, workers: Optional[int] = None,
                 save: bool = True) -> PipelineReport:
    """
    파이프라인 편의 함수

    Args:
        g: 그래프
        eigenvalues: 선택한 고유값 (비어 있으면 모든 유리 고유값)
    """
    options = PipelineOptions(
        eigenvalues=tuple(Fraction(e) for e in eigenvalues),
        identify=identify,
        check_complement=check_complement,
        workers=workers,
        save=save,
    )
    return GraphLatticePipeline(g, options).run()
