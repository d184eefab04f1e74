"""
짧은 벡터 열거 (정확 산술)
- Gram 분모 제거 → 쌍별 축약 → LDLᵀ → Fincke-Pohst 깊이 우선 탐색
- 최소 노름 탐색은 더 짧은 벡터 발견 시 상한을 축소
- 좌표 구간은 (x - c)² ≤ t 를 정수 후보에 대해 정확히 판정
- 결과 좌표는 원래 기저 기준, 정렬된 튜플
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import List, Optional, Tuple

from config import Config
from exactq.hnf import pair_reduce
from exactq.linalg import inverse, ldlt_lists, rank_of_vectors
from exactq.matrix import RationalMatrix, to_fraction
from lattices.lattice import Lattice, MinimalVectorSet
from utils.db import log_event
from utils.errors import LatticeError, SearchBudgetExceeded

Coords = Tuple[int, ...]


def _integer_range(center: Fraction, t: Fraction) -> Optional[Tuple[int, int]]:
    """(v - center)² ≤ t 인 정수 v 의 구간"""
    if t < 0:
        return None
    s = math.isqrt(math.floor(t))
    lo = math.floor(center) - s - 1
    hi = math.ceil(center) + s + 1
    while lo <= hi and (lo - center) ** 2 > t:
        lo += 1
    while hi >= lo and (hi - center) ** 2 > t:
        hi -= 1
    return (lo, hi) if lo <= hi else None


class ShortVectorSearch:
    """축약된 Gram 위의 Fincke-Pohst 탐색기"""

    def __init__(self, gram: RationalMatrix, node_limit: Optional[int] = None):
        self.n = gram.rows
        # 정수 Gram 으로 변환 (노름은 마지막에 den 으로 나눔)
        self.den = gram.denominator_lcm()
        self.reduced, self.transform = pair_reduce(gram.scale(self.den))
        self.L, self.D = ldlt_lists(self.reduced)
        self.U = self.transform.to_int_rows()
        self.node_limit = node_limit or Config.get_enum_setting("node_limit")
        self.nodes = 0

    def _to_original(self, y: List[int]) -> Coords:
        return tuple(sum(self.U[i][j] * y[j] for j in range(self.n)) for i in range(self.n))

    def run(self, bound: Fraction, shrink: bool) -> Tuple[Fraction, List[Tuple[Coords, Fraction]]]:
        """
        상한 이하 노름의 0 아닌 벡터 탐색

        Args:
            bound: 정수화된 Gram 기준 노름 상한
            shrink: True 면 최소 노름 벡터만 유지하며 상한 축소

        Returns:
            (최종 상한, [(축약 좌표, 정수화 노름)])
        """
        n, L, D = self.n, self.L, self.D
        y = [0] * n
        best = bound
        found: List[Tuple[Coords, Fraction]] = []

        def recurse(j: int, partial: Fraction) -> None:
            nonlocal best
            self.nodes += 1
            if self.nodes > self.node_limit:
                raise SearchBudgetExceeded(
                    f"short vector enumeration exceeded {self.node_limit} nodes (rank {n})", self.nodes)
            center = -sum((L[i][j] * y[i] for i in range(j + 1, n) if y[i]), Fraction(0))
            interval = _integer_range(center, (best - partial) / D[j])
            if interval is None:
                return
            for v in range(interval[0], interval[1] + 1):
                diff = v - center
                p = partial + D[j] * diff * diff
                if p > best:
                    continue
                y[j] = v
                if j == 0:
                    if p == 0:
                        continue
                    if shrink and p < best:
                        best = p
                        found.clear()
                    found.append((tuple(y), p))
                else:
                    recurse(j - 1, p)
            y[j] = 0

        recurse(n - 1, Fraction(0))
        return best, found


def _check_rank(rank: int) -> None:
    max_rank = Config.get_enum_setting("max_rank")
    if rank > max_rank:
        raise LatticeError(f"rank {rank} exceeds the enumeration limit {max_rank}")


def shortest_vectors(gram: RationalMatrix) -> Tuple[Fraction, List[Coords]]:
    """
    최소 노름과 최소 벡터 전체 (± 모두 포함)

    Args:
        gram: 양의 정부호 Gram 행렬

    Returns:
        (최소 노름, 정렬된 정수 좌표 목록)

    Raises:
        LatticeError: 계수가 열거 한도를 넘는 경우
        SearchBudgetExceeded: 노드 예산 소진
    """
    _check_rank(gram.rows)
    search = ShortVectorSearch(gram)
    start = min(search.reduced[i, i] for i in range(search.n))
    best, found = search.run(start, shrink=True)
    coords = sorted(search._to_original(list(y)) for y, _ in found)
    return best / search.den, coords


def short_vectors(gram: RationalMatrix, bound) -> List[Tuple[Coords, Fraction]]:
    """노름이 bound 이하인 0 아닌 벡터 전체 (좌표, 노름), 노름 순 정렬"""
    _check_rank(gram.rows)
    bound = to_fraction(bound)
    search = ShortVectorSearch(gram)
    _, found = search.run(bound * search.den, shrink=False)
    result = [(search._to_original(list(y)), p / search.den) for y, p in found]
    return sorted(result, key=lambda item: (item[1], item[0]))


def brute_force_vectors(gram: RationalMatrix, bound) -> List[Tuple[Coords, Fraction]]:
    """
    상자 탐색 기준 구현 (작은 계수 검증용)

    |x_i| ≤ sqrt(bound · (G⁻¹)_ii) 인 모든 정수 좌표 검사
    """
    bound = to_fraction(bound)
    n = gram.rows
    inv = inverse(gram)
    radii = [math.isqrt(math.floor(bound * inv[i, i])) + 1 for i in range(n)]
    g = gram.to_lists()
    result = []
    for x in itertools.product(*(range(-r, r + 1) for r in radii)):
        if not any(x):
            continue
        q = sum(x[i] * g[i][j] * x[j] for i in range(n) if x[i] for j in range(n) if x[j])
        if q <= bound:
            result.append((tuple(x), Fraction(q)))
    return sorted(result, key=lambda item: (item[1], item[0]))


def minimal_vectors(l: Lattice) -> MinimalVectorSet:
    """
    격자의 최소 벡터 집합 (격자 단위 캐시, 단일 계산 보장)

    Raises:
        LatticeError: 계수가 열거 한도를 넘는 경우
        SearchBudgetExceeded: 노드 예산 소진
    """
    with l._lock:
        cached = l._cache.get("minimal")
        if cached is not None:
            return cached
        min_norm, coords = shortest_vectors(l.gram)
        ambient = tuple(l.ambient(c) for c in coords) if l.basis is not None else ()
        result = MinimalVectorSet(min_norm, tuple(coords), ambient)
        l._cache["minimal"] = result
    log_event("lattices", "INFO",
              f"{l.provenance}: min norm {min_norm}, kissing {result.kissing_number}")
    return result


def is_well_rounded(l: Lattice) -> bool:
    """최소 벡터가 스팬 전체를 생성하는지"""
    return rank_of_vectors(minimal_vectors(l).vectors) == l.rank
