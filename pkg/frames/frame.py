"""
유리 프레임 표현
- 열 = 유리 대표 벡터, 실제 프레임 벡터 = √scale_sq · 열
- 심플렉스 ETF, 수치 입력 복원 (연분수 근사), 프레임 격자
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

import numpy as np

from config import Config
from exactq.linalg import rank
from exactq.matrix import RationalMatrix, to_fraction
from lattices.enumeration import minimal_vectors
from lattices.lattice import Lattice, lattice_from_generators
from utils.db import log_event
from utils.errors import FrameError, NumericReconstructionError


@dataclass(frozen=True)
class Frame:
    vectors: RationalMatrix
    scale_sq: Fraction = Fraction(1)
    label: str = field(default="frame", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "scale_sq", to_fraction(self.scale_sq))
        if self.scale_sq <= 0:
            raise FrameError(f"scale_sq must be positive, got {self.scale_sq}")
        if self.vectors.cols == 0 or self.vectors.is_zero():
            raise FrameError("frame needs at least one nonzero vector")

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], scale_sq=Fraction(1), label: str = "frame") -> "Frame":
        return cls(RationalMatrix.from_columns(columns), to_fraction(scale_sq), label)

    @property
    def ambient_dim(self) -> int:
        return self.vectors.rows

    @property
    def count(self) -> int:
        return self.vectors.cols

    @property
    def dim(self) -> int:
        """스팬 차원 k"""
        return rank(self.vectors)

    @property
    def spans_ambient(self) -> bool:
        return self.dim == self.ambient_dim

    def gram(self) -> RationalMatrix:
        """실제 프레임의 Gram = scale_sq · VᵀV"""
        return (self.vectors.transpose() @ self.vectors).scale(self.scale_sq)

    def to_numpy(self) -> np.ndarray:
        """실제 프레임 벡터 (열) 의 부동소수점 배열"""
        return np.array([[float(x) for x in row] for row in self.vectors]) * np.sqrt(float(self.scale_sq))


def simplex_etf(k: int) -> Frame:
    """
    (k, k+1) 심플렉스 ETF: f_j = (1,…,1) 에서 j 번째 좌표만 -k, scale 1/(k²+k)

    R^{k+1} 의 합-0 초평면 안에 놓임 (계수 k)
    """
    if k < 1:
        raise FrameError(f"simplex ETF needs k >= 1, got {k}")
    columns = [[-k if i == j else 1 for i in range(k + 1)] for j in range(k + 1)]
    return Frame.from_columns(columns, Fraction(1, k * k + k), f"simplex_etf({k})")


def lattice_from_frame(f: Frame) -> Lattice:
    """프레임 벡터들의 Z-스팬 (노름 배율 scale_sq 보존)"""
    return lattice_from_generators(f.vectors.columns(), f"L({f.label})", f.scale_sq)


def frame_of_minimal_vectors(l: Lattice) -> Frame:
    """S(L) 을 프레임으로 (± 쌍 포함)"""
    if l.basis is None:
        raise FrameError(f"{l.provenance} has no ambient basis")
    mv = minimal_vectors(l)
    return Frame.from_columns(mv.ambient_vectors, l.norm_scale, f"S({l.provenance})")


# =============================================================================
# 수치 입력
# =============================================================================

def _reconstruct(value: float, max_denominator: int, tolerance: float) -> Optional[Fraction]:
    q = Fraction(value).limit_denominator(max_denominator)
    return q if abs(float(q) - value) <= tolerance else None


def frame_from_numeric(matrix, tolerance: float = None, max_denominator: int = None,
                       label: str = "numeric") -> Frame:
    """
    부동소수점 프레임의 정확 복원 (휴리스틱)

    최대 절댓값 성분 p 로 나눈 비율과 p² 을 연분수로 근사하고 오차를 검사

    Args:
        matrix: k×n 실수 행렬 (열 = 프레임 벡터)
        tolerance: 허용 오차 (None이면 config)
        max_denominator: 분모 상한 (None이면 config)

    Raises:
        NumericReconstructionError: 유리 근사 실패
    """
    tolerance = tolerance if tolerance is not None else Config.get_frame_setting("numeric_tolerance")
    max_denominator = max_denominator or Config.get_frame_setting("numeric_max_denominator")
    m = np.asarray(matrix, dtype=float)
    if m.ndim == 1:
        m = m.reshape(1, -1)
    if m.size == 0 or not np.isfinite(m).all():
        raise NumericReconstructionError("numeric frame is empty or contains non-finite values")

    i, j = np.unravel_index(np.argmax(np.abs(m)), m.shape)
    pivot = abs(float(m[i, j]))
    if pivot == 0:
        raise NumericReconstructionError("numeric frame is zero")

    scale_sq = _reconstruct(pivot * pivot, max_denominator, tolerance)
    if scale_sq is None or scale_sq <= 0:
        raise NumericReconstructionError(f"squared scale {pivot * pivot!r} is not a small rational")
    ratios = []
    for row in m / pivot:
        out = []
        for x in row:
            q = _reconstruct(float(x), max_denominator, tolerance / pivot)
            if q is None:
                raise NumericReconstructionError(f"entry ratio {float(x)!r} is not a small rational")
            out.append(q)
        ratios.append(out)
    frame = Frame(RationalMatrix.from_rows(ratios), scale_sq, label)

    error = float(np.max(np.abs(frame.to_numpy() - m)))
    if error > tolerance * max(1.0, pivot):
        raise NumericReconstructionError(f"reconstructed frame deviates by {error:.3e}")
    log_event("frames", "INFO", f"{label}: reconstructed with scale_sq {scale_sq}")
    return frame


def is_rational_frame(f: Union[Frame, np.ndarray, Sequence[Sequence[float]]]) -> bool:
    """Frame 값은 항상 유리, 수치 입력은 복원 성공 여부"""
    if isinstance(f, Frame):
        return True
    try:
        frame_from_numeric(f)
    except NumericReconstructionError as e:
        log_event("frames", "INFO", f"numeric frame not rational: {e}")
        return False
    return True
