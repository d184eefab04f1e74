"""
격자 타입과 기본 구성
- 생성 집합으로부터 격자 (HNF 기저)
- 그래프 고유사영 격자
- 쌍대 / 텐서곱 / 직교합
- norm_scale: 실제 내적 = norm_scale · basisᵀ·basis (무리 정규화 보존)
"""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from exactq.hnf import hnf_column_basis
from exactq.linalg import determinant, inverse, ldlt
from exactq.matrix import RationalMatrix, RationalVector, rational_sqrt, to_fraction
from spectral.eigen import eigenprojection
from utils.errors import LatticeError, NotPositiveDefiniteError


@dataclass(frozen=True)
class MinimalVectorSet:
    """최소 벡터 집합 S(L)"""
    min_norm_sq: Fraction
    vectors: Tuple[Tuple[int, ...], ...]
    ambient_vectors: Tuple[RationalVector, ...] = ()

    @property
    def kissing_number(self) -> int:
        return len(self.vectors)

    def pair_representatives(self) -> Tuple[Tuple[int, ...], ...]:
        """± 쌍마다 첫 0 아닌 좌표가 양수인 대표"""
        reps = []
        for v in self.vectors:
            lead = next(x for x in v if x != 0)
            if lead > 0:
                reps.append(v)
        return tuple(reps)


@dataclass(frozen=True)
class Lattice:
    """자기 유리 스팬 안에서 완전 계수인 격자"""
    gram: RationalMatrix
    basis: Optional[RationalMatrix] = None
    norm_scale: Fraction = Fraction(1)
    provenance: str = field(default="lattice", compare=False)
    _cache: Dict[str, object] = field(default_factory=dict, compare=False, repr=False)
    _lock: threading.RLock = field(default_factory=threading.RLock, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "norm_scale", to_fraction(self.norm_scale))
        if self.norm_scale <= 0:
            raise LatticeError(f"norm scale must be positive, got {self.norm_scale}")
        if not self.gram.is_square():
            raise LatticeError(f"Gram matrix must be square, got {self.gram.shape}")
        if self.basis is not None and self.basis.cols != self.gram.rows:
            raise LatticeError(f"basis has {self.basis.cols} columns but rank is {self.gram.rows}")
        try:
            ldlt(self.gram)
        except NotPositiveDefiniteError as e:
            raise LatticeError(f"invalid Gram matrix for {self.provenance}: {e}") from e

    def __hash__(self) -> int:
        return hash((self.gram, self.basis, self.norm_scale))

    # -------------------------------------------------------------------------
    # 생성자
    # -------------------------------------------------------------------------

    @classmethod
    def from_basis(cls, basis: RationalMatrix, provenance: str = "lattice",
                   norm_scale=Fraction(1)) -> "Lattice":
        scale = to_fraction(norm_scale)
        gram = (basis.transpose() @ basis).scale(scale)
        return cls(gram, basis, scale, provenance)

    @classmethod
    def from_gram(cls, gram: RationalMatrix, provenance: str = "gram") -> "Lattice":
        return cls(gram, None, Fraction(1), provenance)

    # -------------------------------------------------------------------------
    # 속성
    # -------------------------------------------------------------------------

    @property
    def rank(self) -> int:
        return self.gram.rows

    @property
    def ambient_dim(self) -> int:
        return self.basis.rows if self.basis is not None else self.rank

    @property
    def determinant(self) -> Fraction:
        """det(gram) = det(L)²"""
        return determinant(self.gram)

    def inner(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        """기저 좌표 벡터의 내적"""
        g = self.gram
        return Fraction(sum(a[i] * g[i, j] * b[j] for i in range(self.rank) if a[i]
                            for j in range(self.rank) if b[j]))

    def ambient(self, coords: Sequence[int]) -> Optional[RationalVector]:
        """기저 좌표 → 대표 ambient 벡터 (실제 벡터는 √norm_scale 배)"""
        if self.basis is None:
            return None
        return self.basis @ coords

    def with_provenance(self, provenance: str) -> "Lattice":
        return Lattice(self.gram, self.basis, self.norm_scale, provenance)

    def scaled(self, factor) -> "Lattice":
        """노름을 factor 배 (벡터는 √factor 배)"""
        factor = to_fraction(factor)
        return Lattice(self.gram.scale(factor), self.basis, self.norm_scale * factor,
                       f"{factor}*{self.provenance}")

    def __repr__(self) -> str:
        return f"Lattice({self.provenance}, rank={self.rank}, ambient={self.ambient_dim})"


# =============================================================================
# 구성 함수
# =============================================================================

def lattice_from_generators(vectors: Sequence[Sequence], provenance: str = "span",
                            norm_scale=Fraction(1)) -> Lattice:
    """
    생성 집합의 Z-스팬 격자

    Args:
        vectors: 유리 벡터 목록
        provenance: 생성 기록
        norm_scale: 실제 내적 배율

    Raises:
        LatticeError: 모든 벡터가 0 인 경우
    """
    vectors = list(vectors)
    if not vectors:
        raise LatticeError("no generators given")
    basis = hnf_column_basis(vectors)
    if basis.cols == 0:
        raise LatticeError("all generators are zero")
    return Lattice.from_basis(basis, provenance, norm_scale)


def integer_lattice(n: int) -> Lattice:
    """Z^n"""
    if n < 1:
        raise LatticeError(f"Z^n needs n >= 1, got {n}")
    return Lattice.from_basis(RationalMatrix.identity(n), f"Z{n}")


def graph_lattice(g, eigenvalue) -> Lattice:
    """고유사영 열들의 Z-스팬 P_λ Z^n"""
    proj = eigenprojection(g, eigenvalue)
    return lattice_from_generators(proj.columns(), f"{g.label}@{proj.eigenvalue}")


def dual_lattice(l: Lattice) -> Lattice:
    """
    같은 스팬 안의 쌍대 격자

    basis' = basis·(basisᵀbasis)⁻¹, norm_scale' = 1/norm_scale, gram' = gram⁻¹
    """
    gram_inv = inverse(l.gram)
    provenance = f"dual({l.provenance})"
    if l.basis is None:
        return Lattice(gram_inv, None, Fraction(1), provenance)
    raw = l.basis.transpose() @ l.basis
    basis = l.basis @ inverse(raw)
    return Lattice(gram_inv, basis, 1 / l.norm_scale, provenance)


def tensor_product(l1: Lattice, l2: Lattice) -> Lattice:
    """크로네커 곱 기저 (l1 인덱스가 major)"""
    gram = l1.gram.kron(l2.gram)
    provenance = f"{l1.provenance}(x){l2.provenance}"
    if l1.basis is None or l2.basis is None:
        return Lattice(gram, None, Fraction(1), provenance)
    return Lattice(gram, l1.basis.kron(l2.basis), l1.norm_scale * l2.norm_scale, provenance)


def orthogonal_sum(l1: Lattice, l2: Lattice) -> Lattice:
    """블록 대각 직교합"""
    gram = l1.gram.block_diag(l2.gram)
    provenance = f"{l1.provenance}+{l2.provenance}"
    if l1.basis is None or l2.basis is None:
        return Lattice(gram, None, Fraction(1), provenance)
    ratio = rational_sqrt(l2.norm_scale / l1.norm_scale)
    if ratio is None:
        # 공통 유리 배율이 없으면 Gram 만 유지
        return Lattice(gram, None, Fraction(1), provenance)
    return Lattice(gram, l1.basis.block_diag(l2.basis.scale(ratio)), l1.norm_scale, provenance)
