"""
닮음 불변 지문
- 계수, 키싱 수, 정규화 행렬식 det / |L|^{2·rank}
- 최소 노름 배수 기준 짧은 벡터 노름 단계별 개수 (처음 3 단계, 2·|L|² 이하)
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from config import Config
from lattices.enumeration import minimal_vectors, short_vectors
from lattices.lattice import Lattice


@dataclass(frozen=True)
class LatticeFingerprint:
    rank: int
    kissing_number: int
    normalized_determinant: Fraction
    short_vector_histogram: Tuple[Tuple[Fraction, int], ...]

    def to_json_dict(self) -> dict:
        return {
            "rank": self.rank,
            "kissing_number": self.kissing_number,
            "normalized_determinant": str(self.normalized_determinant),
            "short_vector_histogram": [[str(level), count] for level, count in self.short_vector_histogram],
        }


def fingerprint(l: Lattice) -> LatticeFingerprint:
    """격자 지문 (격자 단위 캐시)"""
    with l._lock:
        cached = l._cache.get("fingerprint")
        if cached is not None:
            return cached
        mv = minimal_vectors(l)
        levels = Config.get_identify_setting("histogram_levels")
        radius = Config.get_identify_setting("histogram_radius")
        norms = short_vectors(l.gram, radius * mv.min_norm_sq)
        counts = Counter(norm / mv.min_norm_sq for _, norm in norms)
        result = LatticeFingerprint(
            rank=l.rank,
            kissing_number=mv.kissing_number,
            normalized_determinant=l.determinant / mv.min_norm_sq ** l.rank,
            short_vector_histogram=tuple(sorted(counts.items()))[:levels],
        )
        l._cache["fingerprint"] = result
    return result
