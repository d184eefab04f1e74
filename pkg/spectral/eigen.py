"""
유리 스펙트럼과 정확 고유사영
- 특성다항식 + 유리근으로 스펙트럼 계산 (무리 고유값은 잔여 차수로 집계)
- P = B(BᵀB)⁻¹Bᵀ 로 고유공간 직교사영 계산 (제곱근 없음)
- 중복도 이중 검증 (근 중복도 vs A - λI 영공간 차원)
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Optional, Tuple

from exactq.linalg import inverse, nullspace_basis
from exactq.matrix import RationalMatrix, to_fraction
from exactq.poly import charpoly, rational_roots
from graphs.constructors import complement
from graphs.checks import is_regular
from graphs.graph import Graph
from utils.db import log_event
from utils.errors import InternalConsistencyError, SpectralError


@dataclass(frozen=True)
class RationalSpectrum:
    """유리 고유값 (내림차순) 과 무리 고유값 잔여 차수"""
    entries: Tuple[Tuple[Fraction, int], ...]
    residual_degree: int

    def as_dict(self) -> Dict[Fraction, int]:
        return dict(self.entries)

    def multiplicity(self, eigenvalue) -> int:
        return self.as_dict().get(to_fraction(eigenvalue), 0)

    @property
    def eigenvalues(self) -> Tuple[Fraction, ...]:
        return tuple(lam for lam, _ in self.entries)

    def to_json_dict(self) -> Dict[str, object]:
        return {
            "eigenvalues": [{"eigenvalue": str(lam), "multiplicity": m} for lam, m in self.entries],
            "residual_degree": self.residual_degree,
        }


@dataclass(frozen=True)
class EigenProjection:
    """λ-고유공간 위로의 직교사영"""
    eigenvalue: Fraction
    projection: RationalMatrix
    eigenbasis: RationalMatrix

    @property
    def multiplicity(self) -> int:
        return self.eigenbasis.cols

    def columns(self):
        return self.projection.columns()


@lru_cache(maxsize=64)
def rational_spectrum(g: Graph) -> RationalSpectrum:
    """
    인접행렬의 유리 스펙트럼

    Args:
        g: 그래프

    Returns:
        RationalSpectrum (Σ 중복도 + residual_degree = n)
    """
    poly = charpoly(g.adjacency_matrix())
    roots = rational_roots(poly)
    residual = g.n - sum(m for _, m in roots)
    return RationalSpectrum(tuple(roots), residual)


def projection_from_basis(basis: RationalMatrix) -> RationalMatrix:
    """열공간 위로의 직교사영 B(BᵀB)⁻¹Bᵀ"""
    bt = basis.transpose()
    return basis @ inverse(bt @ basis) @ bt


def eigenprojection(g: Graph, eigenvalue) -> EigenProjection:
    """
    λ-고유공간 직교사영

    Args:
        g: 그래프
        eigenvalue: 유리 고유값 λ

    Returns:
        EigenProjection

    Raises:
        SpectralError: λ 가 고유값이 아닌 경우
        InternalConsistencyError: 중복도 불일치
    """
    lam = to_fraction(eigenvalue)
    a = g.adjacency_matrix()
    shifted = a - RationalMatrix.identity(g.n).scale(lam)
    kernel = nullspace_basis(shifted)
    if not kernel:
        raise SpectralError(f"{lam} is not an eigenvalue of {g.label}")

    expected = rational_spectrum(g).multiplicity(lam)
    if expected != len(kernel):
        log_event("spectral", "ERROR",
                  f"{g.label}: multiplicity of {lam} is {expected} by charpoly but nullity {len(kernel)}")
        raise InternalConsistencyError(
            f"multiplicity mismatch for {lam} on {g.label}: charpoly {expected}, nullity {len(kernel)}")

    basis = RationalMatrix.from_columns(kernel)
    return EigenProjection(lam, projection_from_basis(basis), basis)


def complement_check_applies(g: Graph, eigenvalue) -> bool:
    """정규 그래프이고 λ ≠ 차수, -λ-1 ≠ 여그래프 차수 일 때만 사영 일치 검사가 성립"""
    lam = to_fraction(eigenvalue)
    k = is_regular(g)
    return k is not None and lam != k and -lam - 1 != g.n - 1 - k


def complement_projection_matches(g: Graph, eigenvalue) -> bool:
    """
    정규 그래프에서 λ ≠ 차수일 때 여그래프의 -λ-1 고유사영과 일치하는지 확인

    Raises:
        SpectralError: complement_check_applies 가 거짓인 경우
    """
    lam = to_fraction(eigenvalue)
    k = is_regular(g)
    if k is None:
        raise SpectralError(f"{g.label} is not regular")
    if lam == k:
        raise SpectralError(f"{lam} is the degree of {g.label}")
    if -lam - 1 == g.n - 1 - k:
        raise SpectralError(f"{-lam - 1} is the degree of the complement of {g.label}")
    ours = eigenprojection(g, lam).projection
    theirs = eigenprojection(complement(g), -lam - 1).projection
    return ours == theirs


def spectrum_summary(g: Graph, eigenvalue: Optional[Fraction] = None) -> str:
    spec = rational_spectrum(g)
    parts = [f"{lam}^{m}" for lam, m in spec.entries if eigenvalue is None or lam == eigenvalue]
    if spec.residual_degree:
        parts.append(f"(+{spec.residual_degree} irrational)")
    return " ".join(parts)
