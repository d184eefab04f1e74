"""
정확 유리수 선형대수 (sympy QQ 위 DomainMatrix)
- 기약 행사다리꼴 (rref) / 영공간 기저
- 역행렬, 연립방정식 풀이, 행렬식, 계수
- LDLᵀ 분해 (열거 경계 계산용)
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from exactq.matrix import RationalMatrix, RationalVector, from_sympy_scalar, primitive_integer_vector
from utils.errors import ExactArithmeticError, NotPositiveDefiniteError


def _to_qq(m: RationalMatrix) -> DomainMatrix:
    return DomainMatrix([[QQ(a.numerator, a.denominator) for a in row] for row in m], m.shape, QQ)


def rref(m: RationalMatrix) -> Tuple[RationalMatrix, Tuple[int, ...], int]:
    """
    기약 행사다리꼴 계산

    Args:
        m: 입력 행렬

    Returns:
        (rref 행렬, 피벗 열 튜플, 계수)
    """
    if m.rows == 0 or m.cols == 0:
        return m, (), 0
    reduced, pivots = _to_qq(m).rref()
    return RationalMatrix.from_sympy(reduced), tuple(pivots), len(pivots)


def rank(m: RationalMatrix) -> int:
    return rref(m)[2]


def rank_of_vectors(vectors) -> int:
    """벡터 목록의 계수 (빈 목록은 0)"""
    vectors = list(vectors)
    if not vectors:
        return 0
    return rank(RationalMatrix.from_rows(vectors))


def nullspace_basis(m: RationalMatrix) -> List[RationalVector]:
    """
    영공간 기저 (원시 정수 벡터로 스케일)

    Args:
        m: 입력 행렬

    Returns:
        m·v = 0 을 만족하는 일차독립 벡터들 (개수 = cols - rank)
    """
    reduced, pivots, _ = rref(m)
    basis: List[RationalVector] = []
    for free in sorted(set(range(m.cols)) - set(pivots)):
        v = [Fraction(0)] * m.cols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -reduced[i, free]
        basis.append(tuple(Fraction(x) for x in primitive_integer_vector(v)))
    return basis


def inverse(m: RationalMatrix) -> RationalMatrix:
    """정사각 행렬의 역행렬"""
    if not m.is_square():
        raise ExactArithmeticError(f"inverse of non-square matrix {m.shape}")
    if m.rows == 0:
        return m
    try:
        return RationalMatrix.from_sympy(_to_qq(m).inv())
    except DMNonInvertibleMatrixError as e:
        raise ExactArithmeticError("matrix is singular") from e


def solve(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """
    A·X = B 의 정확 해 (A 는 열 완전계수)

    Raises:
        ExactArithmeticError: 계수 부족 또는 해가 없는 경우
    """
    if a.rows != b.rows:
        raise ExactArithmeticError(f"row mismatch: {a.shape} vs {b.shape}")
    reduced, pivots, _ = rref(a.hstack(b))
    if len([p for p in pivots if p < a.cols]) < a.cols:
        raise ExactArithmeticError("coefficient matrix does not have full column rank")
    if any(p >= a.cols for p in pivots):
        raise ExactArithmeticError("system is inconsistent")
    return RationalMatrix.from_rows([reduced.row(i)[a.cols:] for i in range(a.cols)], b.cols)


def determinant(m: RationalMatrix) -> Fraction:
    if not m.is_square():
        raise ExactArithmeticError(f"determinant of non-square matrix {m.shape}")
    if m.rows == 0:
        return Fraction(1)
    return from_sympy_scalar(QQ.to_sympy(_to_qq(m).det()))


def ldlt(gram: RationalMatrix) -> Tuple[RationalMatrix, RationalMatrix]:
    """
    양의 정부호 대칭 행렬의 LDLᵀ 분해

    Args:
        gram: 대칭 양의 정부호 행렬

    Returns:
        (L: 단위 하삼각, D: 대각)

    Raises:
        NotPositiveDefiniteError: 비대칭 또는 양의 정부호가 아닌 경우
    """
    if not gram.is_symmetric():
        raise NotPositiveDefiniteError("Gram matrix is not symmetric")
    L, D = ldlt_lists(gram)
    n = gram.rows
    return RationalMatrix.from_rows(L, n), RationalMatrix.diagonal(D)


def ldlt_lists(gram: RationalMatrix) -> Tuple[List[List[Fraction]], List[Fraction]]:
    """LDLᵀ 분해 (리스트 형태, 대칭성 검사 생략)"""
    n = gram.rows
    L = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    D: List[Fraction] = []
    for j in range(n):
        dj = gram[j, j] - sum((L[j][k] * L[j][k] * D[k] for k in range(j)), Fraction(0))
        if dj <= 0:
            raise NotPositiveDefiniteError(f"Gram matrix is not positive definite (pivot {j} = {dj})")
        D.append(dj)
        for i in range(j + 1, n):
            s = gram[i, j] - sum((L[i][k] * L[j][k] * D[k] for k in range(j)), Fraction(0))
            L[i][j] = s / dj
    return L, D


def is_positive_definite(gram: RationalMatrix) -> bool:
    try:
        ldlt(gram)
        return True
    except NotPositiveDefiniteError:
        return False


def integral_or_none(m: RationalMatrix) -> Optional[List[List[int]]]:
    """정수 행렬이면 int 리스트, 아니면 None"""
    return m.to_int_rows() if m.is_integral() else None
