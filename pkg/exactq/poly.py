"""
정수 계수 다항식 (sympy)
- 특성다항식: ZZ 위 DomainMatrix.charpoly
- 유리근: Poly.factor_list 의 일차 인수와 그 중복도
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy as sp
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from exactq.matrix import RationalMatrix, from_sympy_scalar, to_fraction
from utils.errors import ExactArithmeticError

# 오름차순 계수 튜플: (a_0, a_1, ..., a_n)
IntPolynomial = Tuple[int, ...]

_X = sp.Symbol("x")


def charpoly(m: RationalMatrix) -> IntPolynomial:
    """
    특성다항식 det(xI - m) 계산

    Args:
        m: 정수 성분 정사각 행렬 (인접행렬)

    Returns:
        오름차순 정수 계수 튜플 (최고차 계수 1)

    Raises:
        ExactArithmeticError: 비정사각 또는 비정수 성분
    """
    if not m.is_square():
        raise ExactArithmeticError(f"charpoly of non-square matrix {m.shape}")
    if m.rows == 0:
        return (1,)
    dm = DomainMatrix([[ZZ(a) for a in row] for row in m.to_int_rows()], m.shape, ZZ)
    # 내림차순 계수
    return tuple(int(c) for c in reversed(dm.charpoly()))


def rational_roots(p: Sequence[int]) -> List[Tuple[Fraction, int]]:
    """
    정수 계수 다항식의 유리근과 중복도

    Args:
        p: 오름차순 정수 계수

    Returns:
        [(근, 중복도), ...] 내림차순

    Raises:
        ExactArithmeticError: 영다항식 또는 비정수 계수
    """
    coeffs = [to_fraction(a) for a in p]
    if any(a.denominator != 1 for a in coeffs):
        raise ExactArithmeticError("polynomial coefficients must be integers")
    if not any(coeffs):
        raise ExactArithmeticError("zero polynomial has no well-defined roots")

    poly = sp.Poly([int(a) for a in reversed(coeffs)], _X, domain="ZZ")
    roots: List[Tuple[Fraction, int]] = []
    for factor, mult in poly.factor_list()[1]:
        if factor.degree() != 1:
            continue
        a, b = factor.all_coeffs()
        roots.append((from_sympy_scalar(sp.Rational(-b, a)), mult))
    return sorted(roots, key=lambda t: t[0], reverse=True)
