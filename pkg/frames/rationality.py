"""
유리성 정리 검증
- 조인 프레임 B 와 격자 기저 A 에 대해 A·Z = B 인 정수 Z 를 구하고
  BᵀB = c · Zᵀ(ZZᵀ)⁻¹Z (c = trace(BBᵀ)/k) 를 정확히 확인
- B0⁻¹B1 유리성: 선행 열 블록으로 나머지 열 표현
"""
from __future__ import annotations

from typing import Tuple

from exactq.linalg import inverse, rank, solve
from exactq.matrix import RationalMatrix
from frames.analysis import analyze
from frames.frame import Frame, lattice_from_frame
from utils.db import log_event
from utils.errors import FrameError, InternalConsistencyError


def integer_coordinates(f: Frame) -> Tuple[RationalMatrix, RationalMatrix]:
    """
    프레임 격자 기저 A 와 A·Z = B 인 정수 행렬 Z

    Raises:
        InternalConsistencyError: Z 가 정수가 아닌 경우
    """
    basis = lattice_from_frame(f).basis
    z = solve(basis, f.vectors)
    if not z.is_integral():
        raise InternalConsistencyError(f"{f.label}: frame coordinates over the lattice basis are not integral")
    return basis, z


def verify_rationality_theorem(f: Frame) -> bool:
    """
    조인 프레임의 Gram 이 c·Zᵀ(ZZᵀ)⁻¹Z 와 정확히 일치하는지

    Raises:
        FrameError: 조이지 않은 프레임
    """
    if not analyze(f).is_tight:
        raise FrameError(f"{f.label} is not tight")
    _, z = integer_coordinates(f)
    b = f.vectors
    c = (b @ b.transpose()).trace() / z.rows
    predicted = (z.transpose() @ inverse(z @ z.transpose()) @ z).scale(c)
    holds = b.transpose() @ b == predicted
    if not holds:
        log_event("frames", "ERROR", f"{f.label}: Gram identity failed")
    return holds


def b0_inverse_b1_rationality(f: Frame, split_index: int) -> RationalMatrix:
    """
    B = [B0 | B1] 에서 B0·X = B1 인 X

    Args:
        f: 프레임
        split_index: B0 열 개수 (= 프레임 차원)

    Raises:
        FrameError: B0 가 프레임 스팬의 기저가 아닌 경우
    """
    if not 0 < split_index <= f.count:
        raise FrameError(f"split index {split_index} out of range 1..{f.count}")
    b0 = f.vectors.select_columns(range(split_index))
    b1 = f.vectors.select_columns(range(split_index, f.count))
    if rank(b0) != split_index or split_index != f.dim:
        raise FrameError(f"leading {split_index} columns of {f.label} are not a basis of its span")
    return solve(b0, b1)
