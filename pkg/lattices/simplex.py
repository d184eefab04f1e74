"""
정확 유리수 2단계 단체법 (Bland 규칙)
- maximize cᵀx  s.t.  A x = b, x ≥ 0
- 1단계: 인공 변수로 실현 가능 기저 탐색
- 2단계: 원래 목적 함수 최대화
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from exactq.matrix import to_fraction
from utils.errors import ExactArithmeticError


class LPStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: LPStatus
    x: Optional[Tuple[Fraction, ...]] = None
    value: Optional[Fraction] = None


class SimplexTableau:
    """행 단위 타블로 (마지막 열이 우변)"""

    def __init__(self, rows: List[List[Fraction]], basis: List[int]):
        self.rows = rows
        self.basis = basis

    @property
    def width(self) -> int:
        return len(self.rows[0]) - 1 if self.rows else 0

    def pivot(self, r: int, c: int) -> None:
        pr = self.rows[r]
        p = pr[c]
        pr[:] = [x / p for x in pr]
        for i, row in enumerate(self.rows):
            if i != r and row[c] != 0:
                f = row[c]
                row[:] = [x - f * y for x, y in zip(row, pr)]
        self.basis[r] = c

    def optimize(self, cost: Sequence[Fraction], allowed: Sequence[int]) -> LPStatus:
        """Bland 규칙: 가장 작은 인덱스의 개선 열 진입, 동률 비율은 작은 기저 변수 이탈"""
        while True:
            basic = set(self.basis)
            entering = None
            for j in allowed:
                if j in basic:
                    continue
                reduced = cost[j] - sum(cost[self.basis[i]] * row[j]
                                        for i, row in enumerate(self.rows) if row[j])
                if reduced > 0:
                    entering = j
                    break
            if entering is None:
                return LPStatus.OPTIMAL

            leave = None
            best_ratio = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = row[-1] / a
                    if (best_ratio is None or ratio < best_ratio
                            or (ratio == best_ratio and self.basis[i] < self.basis[leave])):
                        leave, best_ratio = i, ratio
            if leave is None:
                return LPStatus.UNBOUNDED
            self.pivot(leave, entering)

    def solution(self, n: int) -> Tuple[Fraction, ...]:
        x = [Fraction(0)] * n
        for i, j in enumerate(self.basis):
            if j < n:
                x[j] = self.rows[i][-1]
        return tuple(x)


def maximize(c: Sequence, a_eq: Sequence[Sequence], b_eq: Sequence) -> LPResult:
    """
    등식 제약 선형계획 최대화

    Args:
        c: 목적 계수 (길이 n)
        a_eq: 제약 행렬 (m × n)
        b_eq: 우변 (길이 m)

    Returns:
        LPResult (OPTIMAL 이면 x, value 포함)
    """
    c = [to_fraction(v) for v in c]
    n = len(c)
    m = len(a_eq)
    if len(b_eq) != m:
        raise ExactArithmeticError(f"constraint count mismatch: {m} rows, {len(b_eq)} right-hand sides")

    rows: List[List[Fraction]] = []
    for i, (ai, bi) in enumerate(zip(a_eq, b_eq)):
        row = [to_fraction(v) for v in ai]
        if len(row) != n:
            raise ExactArithmeticError(f"row {i} has {len(row)} entries, expected {n}")
        rhs = to_fraction(bi)
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        artificial = [Fraction(1) if k == i else Fraction(0) for k in range(m)]
        rows.append(row + artificial + [rhs])

    tableau = SimplexTableau(rows, [n + i for i in range(m)])
    all_cols = list(range(n + m))

    # 1단계
    phase1 = [Fraction(0)] * n + [Fraction(-1)] * m
    tableau.optimize(phase1, all_cols)
    if any(j >= n and tableau.rows[i][-1] != 0 for i, j in enumerate(tableau.basis)):
        return LPResult(LPStatus.INFEASIBLE)

    # 값 0 인 인공 기저 변수 제거 (불가능하면 중복 행 삭제)
    i = 0
    while i < len(tableau.rows):
        if tableau.basis[i] >= n:
            pivot_col = next((j for j in range(n) if tableau.rows[i][j] != 0), None)
            if pivot_col is None:
                del tableau.rows[i]
                del tableau.basis[i]
                continue
            tableau.pivot(i, pivot_col)
        i += 1

    # 2단계
    phase2 = c + [Fraction(0)] * m
    status = tableau.optimize(phase2, list(range(n)))
    if status is LPStatus.UNBOUNDED:
        return LPResult(LPStatus.UNBOUNDED)
    x = tableau.solution(n)
    return LPResult(LPStatus.OPTIMAL, x, sum((ci * xi for ci, xi in zip(c, x)), Fraction(0)))
