"""
기계 판독용 리포트 모델 (pydantic v2)
- EigenRecord: 고유값 하나에 대한 파이프라인 결과
- PipelineReport: 그래프 하나의 전체 결과
- IdentificationReport / FrameReport / TableRowResult
유리수는 "p/q" 문자열로 직렬화 (JSON 재파싱 후 재직렬화가 바이트 단위로 동일)
"""
from __future__ import annotations

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, ValidationError

from utils.errors import ReportError


class _Report(BaseModel):
    model_config = ConfigDict(extra="forbid")

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)

    @classmethod
    def from_json(cls, text: str):
        try:
            return cls.model_validate_json(text)
        except ValidationError as e:
            raise ReportError(f"malformed {cls.__name__}: {e.error_count()} error(s)") from e


class SpectrumEntry(_Report):
    eigenvalue: str
    multiplicity: int


class EigenRecord(_Report):
    eigenvalue: str
    multiplicity: int
    rank: Optional[int] = None
    min_norm_sq: Optional[str] = None
    kissing: Optional[int] = None
    strongly_eutactic: Optional[bool] = None
    perfect: Optional[bool] = None
    coherence_sq: Optional[str] = None
    identified: List[str] = []
    confidence: Dict[str, str] = {}
    complement_matches: Optional[bool] = None
    success: bool = True
    error: Optional[str] = None
    elapsed: float = 0.0


class PipelineReport(_Report):
    graph: str
    vertices: int
    regular_degree: Optional[int] = None
    distance_regular: Optional[str] = None
    spectrum: List[SpectrumEntry] = []
    irrational_degree: int = 0
    records: List[EigenRecord] = []
    processing_time: float = 0.0

    def record_for(self, eigenvalue: str) -> Optional[EigenRecord]:
        return next((r for r in self.records if r.eigenvalue == eigenvalue), None)

    def to_table(self) -> str:
        """정렬된 텍스트 테이블"""
        header = ["λ", "mult", "rank", "min", "kiss", "str.eut", "perf", "coh²", "lattice"]
        rows = [header]
        for r in self.records:
            names = ", ".join(r.identified) if r.success else f"error: {r.error}"
            rows.append([
                r.eigenvalue, str(r.multiplicity), _cell(r.rank), _cell(r.min_norm_sq),
                _cell(r.kissing), _cell(r.strongly_eutactic), _cell(r.perfect),
                _cell(r.coherence_sq), names or "-",
            ])
        widths = [max(len(row[i]) for row in rows) for i in range(len(header) - 1)]
        lines = [f"{self.graph}: {self.vertices} vertices"
                 + (f", {self.regular_degree}-regular" if self.regular_degree is not None else "")
                 + (f", distance-regular {self.distance_regular}" if self.distance_regular else "")]
        for row in rows:
            lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)) + "  " + row[-1])
        return "\n".join(lines)


class IdentificationReport(_Report):
    source: str
    rank: int
    determinant: str
    min_norm_sq: Optional[str] = None
    kissing: Optional[int] = None
    strongly_eutactic: Optional[bool] = None
    perfect: Optional[bool] = None
    eutaxy: Optional[str] = None
    coherence_sq: Optional[str] = None
    identified: List[str] = []
    confidence: Dict[str, str] = {}


class FrameReport(_Report):
    source: str
    ambient_dim: int
    vectors: int
    rational: bool
    tight: Optional[bool] = None
    gamma: Optional[str] = None
    uniform: Optional[bool] = None
    equiangular: Optional[bool] = None
    coherence_sq: Optional[str] = None
    rationality_verified: Optional[bool] = None
    lattice_identified: List[str] = []
    discreteness: Optional[str] = None
    note: Optional[str] = None


class TableRowResult(_Report):
    table: str
    key: str
    expected: str
    observed: str
    status: str

    @property
    def passed(self) -> bool:
        return self.status != "FAIL"


def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)
