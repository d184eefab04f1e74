"""
희소 복원 솔버
- LS: x̂ = A†y
- HT: 프록시 Aᵀy 상위 s 지지 후 제한 최소제곱
- OMP: 최대 상관 원자 선택 + 제한 최소제곱 s 회
- PrOMP: 정수 신호용 OMP (제한 최소제곱 해를 매 단계 반올림하고 잔차 재계산, 반올림한 OMP 해로 대체 가능)
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from utils.errors import DesignError

EXACT_ATOL = 1e-6


@dataclass(frozen=True)
class RecoveryResult:
    estimate: np.ndarray
    support: Tuple[int, ...]
    residual_norm: float
    exact: bool = False
    singular: bool = False

    def against(self, truth: np.ndarray) -> "RecoveryResult":
        """정답과 비교한 exact 플래그 설정"""
        return replace(self, exact=bool(np.allclose(self.estimate, truth, atol=EXACT_ATOL)))

    def error(self, truth: np.ndarray) -> float:
        return float(np.linalg.norm(self.estimate - truth))


def restricted_least_squares(a: np.ndarray, y: np.ndarray,
                             support: Sequence[int]) -> Tuple[np.ndarray, bool]:
    """지지 집합 위 최소제곱 (계수 부족이면 의사역행렬 해, singular 플래그)"""
    x = np.zeros(a.shape[1])
    if not support:
        return x, False
    sub = a[:, list(support)]
    coef, _, sub_rank, _ = np.linalg.lstsq(sub, y, rcond=None)
    x[list(support)] = coef
    return x, sub_rank < len(support)


class BaseSolver(ABC):
    """복원 솔버 공통 인터페이스"""

    name: str = "base"

    def _check(self, a: np.ndarray, y: np.ndarray, s: int) -> None:
        if a.ndim != 2 or y.shape != (a.shape[0],):
            raise DesignError(f"dimension mismatch: A {a.shape}, y {y.shape}")
        if s < 0:
            raise DesignError(f"sparsity must be non-negative, got {s}")

    def _result(self, a: np.ndarray, y: np.ndarray, x: np.ndarray, singular: bool = False) -> RecoveryResult:
        support = tuple(int(i) for i in np.flatnonzero(np.abs(x) > 1e-12))
        return RecoveryResult(x, support, float(np.linalg.norm(y - a @ x)), singular=singular)

    def solve(self, a: np.ndarray, y: np.ndarray, s: int) -> RecoveryResult:
        """
        Args:
            a: k×n 측정 행렬 (단위 노름 열)
            y: 측정값
            s: 희소도

        Returns:
            RecoveryResult (exact 는 against() 로 설정)
        """
        a = np.asarray(a, dtype=float)
        y = np.asarray(y, dtype=float)
        self._check(a, y, s)
        if s == 0:
            return self._result(a, y, np.zeros(a.shape[1]))
        return self._solve(a, y, s)

    @abstractmethod
    def _solve(self, a: np.ndarray, y: np.ndarray, s: int) -> RecoveryResult:
        pass


class LeastSquaresSolver(BaseSolver):
    name = "LS"

    def _solve(self, a, y, s):
        return self._result(a, y, np.linalg.pinv(a) @ y)


class HardThresholdingSolver(BaseSolver):
    name = "HT"

    def _solve(self, a, y, s):
        proxy = np.abs(a.T @ y)
        support = sorted(int(i) for i in np.argsort(-proxy, kind="stable")[:s])
        x, singular = restricted_least_squares(a, y, support)
        return self._result(a, y, x, singular)


def _omp_path(a: np.ndarray, y: np.ndarray, s: int, rounding: bool) -> Tuple[np.ndarray, bool]:
    support: List[int] = []
    x = np.zeros(a.shape[1])
    residual = y.copy()
    singular = False
    scale = max(1.0, float(np.linalg.norm(y)))
    for _ in range(s):
        if np.linalg.norm(residual) <= 1e-12 * scale:
            break
        corr = np.abs(a.T @ residual)
        corr[support] = -1.0
        support.append(int(np.argmax(corr)))
        x, flagged = restricted_least_squares(a, y, support)
        singular = singular or flagged
        if rounding:
            x = np.round(x)
        residual = y - a @ x
    return x, singular


class OMPSolver(BaseSolver):
    name = "OMP"

    def _solve(self, a, y, s):
        x, singular = _omp_path(a, y, s, rounding=False)
        return self._result(a, y, x, singular)


class PrOMPSolver(BaseSolver):
    """
    정수 신호용 OMP

    - 반올림 경로: 매 단계 제한 최소제곱 해를 반올림하고 잔차 재계산
    - fallback=True: 반올림 경로와 OMP 해를 반올림한 기본 경로 중 잔차가 작은 쪽, 동률이면 기본 경로
    - fallback=False: 반올림 경로만 ("PrOMP-R")
    - rounding=False 면 OMP 와 동일
    """

    def __init__(self, rounding: bool = True, fallback: bool = True):
        self.rounding = rounding
        self.fallback = fallback
        self.name = "PrOMP-R" if rounding and not fallback else "PrOMP"

    def _solve(self, a, y, s):
        if not self.rounding:
            plain, singular = _omp_path(a, y, s, rounding=False)
            return self._result(a, y, plain, singular)
        rounded, singular = _omp_path(a, y, s, rounding=True)
        if not self.fallback:
            return self._result(a, y, rounded, singular)
        plain, flagged = _omp_path(a, y, s, rounding=False)
        baseline = np.round(plain)
        r_base = np.linalg.norm(y - a @ baseline)
        r_round = np.linalg.norm(y - a @ rounded)
        x = rounded if r_round < r_base else baseline
        return self._result(a, y, x, singular or flagged)


SOLVERS: Dict[str, BaseSolver] = {
    s.name: s for s in (LeastSquaresSolver(), HardThresholdingSolver(), OMPSolver(), PrOMPSolver())
}


def get_solver(name: str) -> BaseSolver:
    solver = SOLVERS.get(name)
    if solver is None:
        raise DesignError(f"unknown solver {name!r} (choose from {sorted(SOLVERS)})")
    return solver


def solve_ls(a, y, s: int = 0) -> RecoveryResult:
    return SOLVERS["LS"].solve(a, y, max(s, 1))


def solve_ht(a, y, s: int) -> RecoveryResult:
    return SOLVERS["HT"].solve(a, y, s)


def solve_omp(a, y, s: int) -> RecoveryResult:
    return SOLVERS["OMP"].solve(a, y, s)


def solve_promp(a, y, s: int, rounding: bool = True, fallback: bool = True) -> RecoveryResult:
    solver = SOLVERS["PrOMP"] if rounding and fallback else PrOMPSolver(rounding, fallback)
    return solver.solve(a, y, s)
