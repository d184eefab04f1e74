"""
격자 닮음 판정 (기저 대응 백트래킹)
- l2 의 Gram 을 α² = |l1|²/|l2|² 로 재조정
- l1 을 쌍별 축약한 기저 b_i 의 노름/내적을 만족하는 l2 벡터를 차례로 배정
- 증인 T: Tᵀ·(α² G2)·T = G1 인 정수 행렬
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from config import Config
from exactq.hnf import pair_reduce
from exactq.linalg import determinant, inverse
from exactq.matrix import RationalMatrix
from identify.fingerprint import fingerprint
from lattices.enumeration import minimal_vectors, short_vectors
from lattices.lattice import Lattice
from utils.errors import InternalConsistencyError, SearchBudgetExceeded


@dataclass(frozen=True)
class SimilarityWitness:
    """Tᵀ·(scale_sq·G2)·T = G1"""
    transform: RationalMatrix
    scale_sq: Fraction

    def verify(self, l1: Lattice, l2: Lattice) -> bool:
        t = self.transform
        return t.is_integral() and t.transpose() @ l2.gram.scale(self.scale_sq) @ t == l1.gram


class BasisMatcher:
    """축약 Gram 을 재현하는 벡터 배정 탐색기"""

    def __init__(self, target: RationalMatrix, gram: RationalMatrix, node_limit: int):
        self.target = target
        self.gram = gram
        self.k = target.rows
        self.node_limit = node_limit
        self.nodes = 0

        bound = max(target[i, i] for i in range(self.k))
        g = gram.to_lists()
        self.by_norm: Dict[Fraction, List[Tuple[Tuple[int, ...], Tuple[Fraction, ...]]]] = defaultdict(list)
        for v, norm in short_vectors(gram, bound):
            image = tuple(sum((g[i][j] * v[j] for j in range(self.k) if v[j]), Fraction(0))
                          for i in range(self.k))
            self.by_norm[norm].append((v, image))

    def search(self) -> Optional[List[Tuple[int, ...]]]:
        k, t = self.k, self.target
        chosen: List[Tuple[Tuple[int, ...], Tuple[Fraction, ...]]] = []

        def extend(i: int) -> bool:
            self.nodes += 1
            if self.nodes > self.node_limit:
                raise SearchBudgetExceeded(f"isometry search exceeded {self.node_limit} nodes", self.nodes)
            if i == k:
                return True
            for v, image in self.by_norm.get(t[i, i], ()):
                if all(sum(a * b for a, b in zip(v, prev_image) if a) == t[i, j]
                       for j, (_, prev_image) in enumerate(chosen)):
                    chosen.append((v, image))
                    if extend(i + 1):
                        return True
                    chosen.pop()
            return False

        return [v for v, _ in chosen] if extend(0) else None


def is_similar(l1: Lattice, l2: Lattice, node_limit: Optional[int] = None) -> Optional[SimilarityWitness]:
    """
    l1 = α·U·l2 (α 스칼라, U 직교) 인지 판정

    Args:
        l1, l2: 격자
        node_limit: 백트래킹 노드 상한 (None이면 config)

    Returns:
        SimilarityWitness, 닮지 않았으면 None

    Raises:
        SearchBudgetExceeded: 예산 소진 (판정 불가)
    """
    if l1.rank != l2.rank:
        return None
    if l1.gram == l2.gram:
        return SimilarityWitness(RationalMatrix.identity(l1.rank), Fraction(1))
    if fingerprint(l1) != fingerprint(l2):
        return None

    scale_sq = minimal_vectors(l1).min_norm_sq / minimal_vectors(l2).min_norm_sq
    g2 = l2.gram.scale(scale_sq)
    if determinant(g2) != l1.determinant:
        return None

    reduced, u1 = pair_reduce(l1.gram)
    matcher = BasisMatcher(reduced, g2, node_limit or Config.get_identify_setting("isometry_node_limit"))
    vectors = matcher.search()
    if vectors is None:
        return None

    w = RationalMatrix.from_columns(vectors, nrows=l1.rank)
    witness = SimilarityWitness(w @ inverse(u1), scale_sq)
    if not witness.verify(l1, l2):
        raise InternalConsistencyError(f"similarity witness for {l1.provenance} ~ {l2.provenance} fails")
    return witness
