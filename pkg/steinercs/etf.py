"""
Steiner ETF 측정 행렬
- 각 점마다 Hadamard(r+1) 의 첫 행을 뺀 r×(r+1) 블록을 그 점이 속한 r 개 블록 행에 배치
- 1/√r 정규화, 조임/등각성을 허용오차로 검증
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from config import Config
from steinercs.designs import SteinerSystem, hadamard
from utils.db import log_event
from utils.errors import InternalConsistencyError


@dataclass(frozen=True)
class MeasurementMatrix:
    matrix: np.ndarray
    coherence: float
    provenance: str

    @property
    def rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def cols(self) -> int:
        return self.matrix.shape[1]

    @classmethod
    def from_array(cls, matrix: np.ndarray, provenance: str = "matrix") -> "MeasurementMatrix":
        """열 정규화 후 응집도 계산"""
        a = np.asarray(matrix, dtype=float)
        a = a / np.linalg.norm(a, axis=0, keepdims=True)
        return cls(a, mutual_coherence(a), provenance)


def mutual_coherence(a: np.ndarray) -> float:
    gram = np.abs(a.T @ a)
    np.fill_diagonal(gram, 0.0)
    return float(gram.max()) if gram.size > 1 else 0.0


def welch_bound(k: int, n: int) -> float:
    return float(np.sqrt((n - k) / (k * (n - 1))))


def steiner_etf(sts: SteinerSystem) -> MeasurementMatrix:
    """
    Steiner ETF: b × v(r+1), 응집도 1/r

    Raises:
        DesignError: Hadamard(r+1) 를 만들 수 없는 경우
        InternalConsistencyError: 조임/등각 검증 실패
    """
    r = sts.replication
    h = hadamard(r + 1)
    embedded = h[1:, :]
    b, v = sts.block_count, sts.v
    a = np.zeros((b, v * (r + 1)))
    for point in range(v):
        rows = sts.blocks_through(point)
        a[np.ix_(rows, range(point * (r + 1), (point + 1) * (r + 1)))] = embedded
    a /= np.sqrt(r)

    tol = Config.STEINER_TOLERANCE
    n = a.shape[1]
    if not np.allclose(np.linalg.norm(a, axis=0), 1.0, atol=tol):
        raise InternalConsistencyError("Steiner ETF columns are not unit norm")
    if not np.allclose(a @ a.T, (n / b) * np.eye(b), atol=tol * n):
        raise InternalConsistencyError("Steiner ETF is not tight")
    off = np.abs(a.T @ a)[~np.eye(n, dtype=bool)]
    if not np.allclose(off, 1.0 / r, atol=tol):
        raise InternalConsistencyError("Steiner ETF is not equiangular")

    result = MeasurementMatrix(a, float(off.max()), f"steiner_etf(STS({v}))")
    log_event("steinercs", "INFO", f"{result.provenance}: {b}x{n}, coherence {result.coherence:.6f}")
    return result
