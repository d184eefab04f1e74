"""
격자 기하량
- 응집도 (최소 벡터 쌍의 최대 |cos|, 정확한 cos² 로 보고)
- 충전 밀도 δ(L) = ω_n |L|^n / (2^n det L)
- 최소 벡터 기저와 부분공간 각도 상한 검사 (Gram 행렬식 비율로 정확 판정)
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from config import Config
from exactq.linalg import determinant, rank_of_vectors
from exactq.matrix import RationalMatrix, rational_sqrt
from lattices.enumeration import minimal_vectors
from lattices.lattice import Lattice
from utils.errors import LatticeError, SearchBudgetExceeded


@dataclass(frozen=True)
class CoherenceResult:
    cos_sq: Fraction
    exact_cosine: Optional[Fraction]

    @property
    def value(self) -> float:
        return math.sqrt(self.cos_sq)

    def __str__(self) -> str:
        if self.exact_cosine is not None:
            return str(self.exact_cosine)
        return f"sqrt({self.cos_sq}) ~ {self.value:.6f}"


@dataclass(frozen=True)
class CoherenceBoundReport:
    """부분공간 각도 상한 검사 결과"""
    holds: bool
    max_cos_sq: Fraction
    bound_cos_sq: Fraction
    density: float
    angles: Tuple[float, ...]

    def __bool__(self) -> bool:
        return self.holds


def coherence(l: Lattice) -> CoherenceResult:
    """
    격자 응집도 C(L)

    Args:
        l: 계수 2 이상의 격자

    Returns:
        CoherenceResult (cos² 정확값, 유리수면 cos 도 포함)

    Raises:
        LatticeError: 계수 < 2
    """
    if l.rank < 2:
        raise LatticeError(f"coherence needs rank >= 2, got {l.rank}")
    mv = minimal_vectors(l)
    reps = mv.pair_representatives()
    g = l.gram.to_lists()
    k = l.rank
    images = [[sum(g[i][j] * a[j] for j in range(k) if a[j]) for i in range(k)] for a in reps]

    best = Fraction(0)
    for p in range(len(reps)):
        a = reps[p]
        for q in range(p + 1, len(reps)):
            ip = sum(a[i] * images[q][i] for i in range(k) if a[i])
            if ip * ip > best:
                best = ip * ip
    cos_sq = Fraction(best) / (mv.min_norm_sq * mv.min_norm_sq)
    return CoherenceResult(cos_sq, rational_sqrt(cos_sq))


def packing_density(l: Lattice) -> float:
    """로그 공간에서 계산한 충전 밀도"""
    n = l.rank
    mv = minimal_vectors(l)
    det = l.determinant

    def log_q(q: Fraction) -> float:
        return math.log(q.numerator) - math.log(q.denominator)

    log_ball = (n / 2) * math.log(math.pi) - math.lgamma(n / 2 + 1)
    log_delta = log_ball + (n / 2) * log_q(mv.min_norm_sq) - n * math.log(2) - 0.5 * log_q(det)
    return math.exp(log_delta)


def _validate_minimal_basis(l: Lattice, minimal_basis: Sequence[Sequence[int]]) -> RationalMatrix:
    k = l.rank
    if len(minimal_basis) != k:
        raise LatticeError(f"need {k} basis vectors, got {len(minimal_basis)}")
    mv = minimal_vectors(l)
    for v in minimal_basis:
        if len(v) != k or any(Fraction(x).denominator != 1 for x in v):
            raise LatticeError(f"{tuple(v)} is not an integer coordinate vector of length {k}")
        if l.inner(v, v) != mv.min_norm_sq:
            raise LatticeError(f"{tuple(v)} is not a minimal vector")
    w = RationalMatrix.from_columns(minimal_basis, nrows=k)
    if abs(determinant(w)) != 1:
        raise LatticeError("supplied minimal vectors do not form a basis")
    return w


def coherence_bound_report(l: Lattice, minimal_basis: Sequence[Sequence[int]]) -> CoherenceBoundReport:
    """
    최소 벡터 기저 b_1..b_n 에 대해 max cos² ν_i ≤ 1 - (ω_n / (2^n δ))² 검사

    sin² ν_i = det H_{i+1} / (det H_i · ‖b_{i+1}‖²) (H_i: 선행 주소행렬)
    우변은 1 - det(G) / |L|^{2n} 로 정확히 표현됨

    Raises:
        LatticeError: 최소 벡터가 아니거나 기저가 아닌 경우
    """
    w = _validate_minimal_basis(l, minimal_basis)
    h = w.transpose() @ l.gram @ w
    k = l.rank
    minors = [Fraction(1)] + [determinant(h.select_rows(range(i)).select_columns(range(i)))
                              for i in range(1, k + 1)]
    cos_sqs: List[Fraction] = []
    for i in range(1, k):
        sin_sq = minors[i + 1] / (minors[i] * h[i, i])
        cos_sqs.append(1 - sin_sq)
    mv = minimal_vectors(l)
    bound = 1 - l.determinant / mv.min_norm_sq ** k
    max_cos_sq = max(cos_sqs, default=Fraction(0))
    angles = tuple(math.acos(min(1.0, math.sqrt(c))) for c in cos_sqs)
    return CoherenceBoundReport(max_cos_sq <= bound, max_cos_sq, bound, packing_density(l), angles)


def coherence_bound_check(l: Lattice, minimal_basis: Sequence[Sequence[int]]) -> bool:
    return coherence_bound_report(l, minimal_basis).holds


def minimal_vector_basis(l: Lattice, budget: Optional[int] = None) -> Optional[List[Tuple[int, ...]]]:
    """
    최소 벡터로 이루어진 격자 기저 탐색 (없으면 None)

    Raises:
        SearchBudgetExceeded: 예산 소진
    """
    reps = list(minimal_vectors(l).pair_representatives())
    k = l.rank
    budget = budget or Config.get_identify_setting("isometry_node_limit")
    nodes = 0
    chosen: List[Tuple[int, ...]] = []

    def extend(start: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"minimal basis search exceeded {budget} nodes", nodes)
        if len(chosen) == k:
            return abs(determinant(RationalMatrix.from_columns(chosen, nrows=k))) == 1
        for idx in range(start, len(reps)):
            if len(reps) - idx < k - len(chosen):
                break
            candidate = reps[idx]
            if rank_of_vectors(chosen + [candidate]) != len(chosen) + 1:
                continue
            chosen.append(candidate)
            if extend(idx + 1):
                return True
            chosen.pop()
        return False

    return list(chosen) if extend(0) else None
