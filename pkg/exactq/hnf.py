"""
정수 격자 기저 연산
- 열 Hermite 정규형 (sympy hermite_normal_form)
- 정수 커널 (포화 커널 격자)
- Gram 행렬 쌍별 축약 (Gauss 스타일 size reduction)
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy.matrices.normalforms import hermite_normal_form

from exactq.matrix import RationalMatrix, denominator_lcm, vector
from utils.errors import ExactArithmeticError


def _column_hnf(cols: List[List[int]], nrows: int) -> List[List[int]]:
    """
    정수 열 목록의 열 HNF

    - 모든 행이 처리되도록 0 열을 덧붙여 열 수 >= 행 수 로 맞춤

    Returns:
        HNF 열 목록 (열 수 = 계수)
    """
    width = max(len(cols), nrows)
    padded = [list(c) for c in cols] + [[0] * nrows for _ in range(width - len(cols))]
    h = hermite_normal_form(RationalMatrix.from_columns(padded, nrows=nrows).to_sympy())
    return [[int(h[i, j]) for i in range(nrows)] for j in range(h.cols)]


def hnf_column_basis(gens: Sequence[Sequence], dim: Optional[int] = None) -> RationalMatrix:
    """
    유리 생성 집합의 Z-기저 (열 HNF)

    Args:
        gens: 같은 차원의 유리 벡터 목록
        dim: gens 가 비었을 때의 행 수

    Returns:
        열들이 gens 의 Z-스팬 기저인 행렬 (열 수 = 계수)
    """
    gens = [vector(g) for g in gens]
    if not gens:
        return RationalMatrix.zeros(dim or 0, 0)
    d = len(gens[0])
    if any(len(g) != d for g in gens):
        raise ExactArithmeticError("generators differ in dimension")
    den = denominator_lcm(x for g in gens for x in g)
    cols = [[(x * den).numerator for x in g] for g in gens if any(g)]
    if not cols:
        return RationalMatrix.zeros(d, 0)
    reduced = _column_hnf(cols, d)
    return RationalMatrix.from_columns([[Fraction(x, den) for x in c] for c in reduced], nrows=d)


def integer_kernel(m: RationalMatrix) -> List[Tuple[int, ...]]:
    """
    정수 커널 기저: {x ∈ Z^cols : m·x = 0}

    - [I; m] 의 열 HNF 에서 m 부분이 0 인 열의 I 부분이 커널 기저

    Args:
        m: 유리 행렬 (분모는 행 단위로 지워짐)

    Returns:
        커널 격자의 Z-기저 (정수 벡터 목록)
    """
    n = m.cols
    den = m.denominator_lcm()
    rows = [[(x * den).numerator for x in r] for r in m]
    stacked = [[int(i == j) for i in range(n)] + [rows[k][j] for k in range(m.rows)] for j in range(n)]
    reduced = _column_hnf(stacked, n + m.rows)
    return [tuple(c[:n]) for c in reduced if not any(c[n:])]


def pair_reduce(gram: RationalMatrix) -> Tuple[RationalMatrix, RationalMatrix]:
    """
    쌍별 축약: 2|g_ij| > g_jj 이면 b_i ← b_i - round(g_ij/g_jj)·b_j 반복

    Args:
        gram: 양의 정부호 Gram 행렬

    Returns:
        (축약된 Gram, 변환 U) - 축약 Gram = Uᵀ·gram·U, U 는 유니모듈러 정수 행렬
    """
    n = gram.rows
    G = gram.to_lists()
    U = [[1 if i == j else 0 for i in range(n)] for j in range(n)]  # U[j] = j 번째 새 기저 벡터

    changed = True
    while changed:
        changed = False
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                gij, gjj = G[i][j], G[j][j]
                if 2 * abs(gij) <= gjj:
                    continue
                q = round(gij / gjj)
                G[i][i] = G[i][i] - 2 * q * gij + q * q * gjj
                for k in range(n):
                    if k != i:
                        G[i][k] = G[i][k] - q * G[j][k]
                        G[k][i] = G[i][k]
                U[i] = [x - q * y for x, y in zip(U[i], U[j])]
                changed = True

    order = sorted(range(n), key=lambda i: G[i][i])
    reduced = [[G[a][b] for b in order] for a in order]
    columns = [U[a] for a in order]
    return RationalMatrix.from_rows(reduced, n), RationalMatrix.from_columns(columns, nrows=n)
