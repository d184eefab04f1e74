"""
완전성 / 유태성 판정
- 강한 유태성: S·G 가 스칼라 행렬인지 (S = Σ a aᵀ, 최소 벡터 정수 좌표)
- 약한 유태성: Σ c_x a aᵀ = G⁻¹ 의 양의 해를 정확 단체법으로 탐색
- 완전성: sym(a aᵀ) 상삼각 벡터들의 계수 = k(k+1)/2
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from exactq.linalg import inverse, rank_of_vectors
from exactq.matrix import RationalMatrix
from lattices.enumeration import minimal_vectors
from lattices.lattice import Lattice
from lattices.simplex import LPStatus, maximize
from utils.db import log_event
from utils.errors import InternalConsistencyError


class EutaxyKind(Enum):
    STRONG = "strong"
    WEAK = "weak"
    NONE = "none"


@dataclass(frozen=True)
class EutaxyCertificate:
    """
    유태성 증명서

    kind 가 STRONG 이면 coefficient 하나로 충분하고,
    WEAK 이면 coefficients 가 최소 벡터 순서대로의 양의 계수
    """
    kind: EutaxyKind
    coefficient: Optional[Fraction] = None
    coefficients: Tuple[Fraction, ...] = field(default=())

    @property
    def is_eutactic(self) -> bool:
        return self.kind is not EutaxyKind.NONE

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "coefficient": str(self.coefficient) if self.coefficient is not None else None,
            "coefficients": [str(c) for c in self.coefficients],
        }


def _upper_indices(k: int) -> List[Tuple[int, int]]:
    return [(i, j) for i in range(k) for j in range(i, k)]


def _sym_vector(a: Sequence[int], idx: List[Tuple[int, int]]) -> Tuple[int, ...]:
    return tuple(a[i] * a[j] for i, j in idx)


def _outer_sum(vectors: Sequence[Sequence[int]], k: int) -> RationalMatrix:
    s = [[0] * k for _ in range(k)]
    for a in vectors:
        for i in range(k):
            if a[i]:
                for j in range(k):
                    s[i][j] += a[i] * a[j]
    return RationalMatrix.from_rows(s, k)


def perfection_check(l: Lattice) -> bool:
    """최소 벡터 외적들이 대칭 행렬 공간 전체를 생성하는지"""
    k = l.rank
    idx = _upper_indices(k)
    reps = minimal_vectors(l).pair_representatives()
    if len(reps) < len(idx):
        return False
    return rank_of_vectors([_sym_vector(a, idx) for a in reps]) == len(idx)


def strong_eutaxy_check(l: Lattice) -> EutaxyCertificate:
    """
    강한 유태성 판정

    Returns:
        STRONG 이면 ‖v‖² = c Σ ⟨v,x⟩² 의 c, 아니면 kind NONE
    """
    mv = minimal_vectors(l)
    k = l.rank
    sg = _outer_sum(mv.vectors, k) @ l.gram
    if not sg.is_scalar():
        return EutaxyCertificate(EutaxyKind.NONE)
    coefficient = Fraction(k) / (mv.kissing_number * mv.min_norm_sq)
    return EutaxyCertificate(EutaxyKind.STRONG, coefficient,
                             tuple(coefficient for _ in mv.vectors))


def weak_eutaxy_check(l: Lattice) -> EutaxyCertificate:
    """
    약한 유태성 판정

    ± 쌍마다 변수 c_p (벡터별 계수는 c_p/2) 를 두고
    c_p = s_p + t, s_p ≥ 0 으로 치환하여 t 를 최대화. t > 0 이면 유태적.

    Returns:
        WEAK 증명서 (계수는 minimal_vectors 순서) 또는 NONE

    Raises:
        InternalConsistencyError: 단체법 해가 방정식을 만족하지 않는 경우
    """
    mv = minimal_vectors(l)
    k = l.rank
    idx = _upper_indices(k)
    reps = mv.pair_representatives()
    target = inverse(l.gram)
    p = len(reps)

    # 열: s_1..s_p, t+, t-
    sym = [_sym_vector(a, idx) for a in reps]
    a_eq = []
    b_eq = []
    for r, (i, j) in enumerate(idx):
        row = [Fraction(sym[q][r]) for q in range(p)]
        total = sum(row, Fraction(0))
        a_eq.append(row + [total, -total])
        b_eq.append(target[i, j])
    objective = [0] * p + [1, -1]

    result = maximize(objective, a_eq, b_eq)
    if result.status is not LPStatus.OPTIMAL or result.value <= 0:
        log_event("lattices", "INFO", f"{l.provenance}: not eutactic (LP {result.status.value})")
        return EutaxyCertificate(EutaxyKind.NONE)

    t = result.value
    pair_coeffs = {a: result.x[q] + t for q, a in enumerate(reps)}
    if _outer_sum_weighted(reps, [pair_coeffs[a] for a in reps], k) != target:
        raise InternalConsistencyError(f"eutaxy certificate for {l.provenance} does not verify")

    coefficients = []
    for v in mv.vectors:
        key = v if v in pair_coeffs else tuple(-x for x in v)
        coefficients.append(pair_coeffs[key] / 2)
    return EutaxyCertificate(EutaxyKind.WEAK, None, tuple(coefficients))


def _outer_sum_weighted(vectors: Sequence[Sequence[int]], weights: Sequence[Fraction],
                        k: int) -> RationalMatrix:
    s = [[Fraction(0)] * k for _ in range(k)]
    for a, w in zip(vectors, weights):
        for i in range(k):
            if a[i]:
                for j in range(k):
                    s[i][j] += w * a[i] * a[j]
    return RationalMatrix.from_rows(s, k)


def eutaxy_check(l: Lattice) -> EutaxyCertificate:
    """강한 유태성을 먼저 확인하고, 아니면 약한 유태성 탐색"""
    strong = strong_eutaxy_check(l)
    if strong.is_eutactic:
        return strong
    return weak_eutaxy_check(l)
