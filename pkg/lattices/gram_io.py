"""
Gram 행렬 텍스트 입출력
- 형식: 첫 줄 계수, 이후 행 우선 유리수 "p/q" (공백 구분)
- 최소 벡터 덤프: 정수 좌표 행
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Union

from exactq.matrix import RationalMatrix
from lattices.lattice import MinimalVectorSet
from utils.errors import ReportError


def format_gram(gram: RationalMatrix) -> str:
    lines = [str(gram.rows)]
    for row in gram:
        lines.append(" ".join(str(x) for x in row))
    return "\n".join(lines) + "\n"


def parse_gram(text: str) -> RationalMatrix:
    """
    Gram 텍스트 파싱

    Raises:
        ReportError: 형식 오류
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ReportError("empty Gram input")
    try:
        rank = int(lines[0])
    except ValueError as e:
        raise ReportError(f"first line must be the rank, got {lines[0]!r}") from e
    if rank < 1:
        raise ReportError(f"rank must be positive, got {rank}")
    rows = lines[1:]
    if len(rows) != rank:
        raise ReportError(f"expected {rank} rows, got {len(rows)}")
    data = []
    for i, line in enumerate(rows):
        tokens = line.split()
        if len(tokens) != rank:
            raise ReportError(f"row {i + 1} has {len(tokens)} entries, expected {rank}")
        try:
            data.append([Fraction(t) for t in tokens])
        except (ValueError, ZeroDivisionError) as e:
            raise ReportError(f"row {i + 1}: invalid rational entry ({e})") from e
    gram = RationalMatrix.from_rows(data, rank)
    if not gram.is_symmetric():
        raise ReportError("Gram matrix is not symmetric")
    return gram


def read_gram(path: Union[str, Path]) -> RationalMatrix:
    return parse_gram(Path(path).read_text(encoding="utf-8"))


def write_gram(gram: RationalMatrix, path: Union[str, Path]) -> None:
    Path(path).write_text(format_gram(gram), encoding="utf-8")


def format_minimal_vectors(mv: MinimalVectorSet) -> str:
    lines = [f"# min_norm_sq {mv.min_norm_sq} kissing {mv.kissing_number}"]
    lines.extend(" ".join(str(x) for x in v) for v in mv.vectors)
    return "\n".join(lines) + "\n"
