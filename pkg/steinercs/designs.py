"""
조합 설계
- Steiner 3중계 STS(v): Bose (v ≡ 3 mod 6) / Skolem (v ≡ 1 mod 6) 구성
- Hadamard 행렬: Sylvester 배가 + Paley I (q ≡ 3 mod 4 소수)
- 모든 구성은 생성 직후 전수 검증
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, Optional, Tuple

import numpy as np

from utils.db import log_event
from utils.errors import DesignError, InternalConsistencyError


@dataclass(frozen=True)
class SteinerSystem:
    v: int
    blocks: Tuple[FrozenSet[int], ...]

    @property
    def replication(self) -> int:
        return (self.v - 1) // 2

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def incidence_matrix(self) -> np.ndarray:
        """블록 × 점 0/1 행렬"""
        m = np.zeros((self.block_count, self.v), dtype=int)
        for b, block in enumerate(self.blocks):
            for p in block:
                m[b, p] = 1
        return m

    def blocks_through(self, point: int) -> List[int]:
        return [b for b, block in enumerate(self.blocks) if point in block]


def _verify_sts(system: SteinerSystem) -> None:
    v = system.v
    count = {}
    for block in system.blocks:
        if len(block) != 3:
            raise InternalConsistencyError(f"STS({v}) has a block of size {len(block)}")
        for pair in combinations(sorted(block), 2):
            count[pair] = count.get(pair, 0) + 1
    missing = [p for p in combinations(range(v), 2) if count.get(p) != 1]
    if missing or system.block_count != v * (v - 1) // 6:
        raise InternalConsistencyError(f"STS({v}) pair coverage fails at {missing[:3]}")


def _bose(v: int) -> List[FrozenSet[int]]:
    m = v // 3
    half = (m + 1) // 2

    def point(x: int, i: int) -> int:
        return x + m * (i % 3)

    def op(x: int, y: int) -> int:
        return ((x + y) * half) % m

    blocks = [frozenset(point(x, i) for i in range(3)) for x in range(m)]
    for x, y in combinations(range(m), 2):
        for i in range(3):
            blocks.append(frozenset({point(x, i), point(y, i), point(op(x, y), i + 1)}))
    return blocks


def _skolem(v: int) -> List[FrozenSet[int]]:
    n = (v - 1) // 6
    order = 2 * n
    inf = v - 1

    def point(x: int, i: int) -> int:
        return x + order * (i % 3)

    def op(x: int, y: int) -> int:
        s = (x + y) % order
        return s // 2 if s % 2 == 0 else (s - 1) // 2 + n

    blocks = [frozenset(point(x, i) for i in range(3)) for x in range(n)]
    for x in range(n):
        for i in range(3):
            blocks.append(frozenset({inf, point(x + n, i), point(x, i + 1)}))
    for x, y in combinations(range(order), 2):
        for i in range(3):
            blocks.append(frozenset({point(x, i), point(y, i), point(op(x, y), i + 1)}))
    return blocks


def steiner_triple_system(v: int) -> SteinerSystem:
    """
    Steiner 3중계 생성

    Args:
        v: 점 개수 (v ≡ 1, 3 mod 6, v ≥ 7)

    Raises:
        DesignError: 합동 조건 불만족
    """
    if v < 7 or v % 6 not in (1, 3):
        raise DesignError(f"STS(v) needs v >= 7 with v = 1 or 3 (mod 6), got {v}")
    blocks = _bose(v) if v % 6 == 3 else _skolem(v)
    system = SteinerSystem(v, tuple(sorted(blocks, key=sorted)))
    _verify_sts(system)
    log_event("steinercs", "INFO", f"STS({v}): {system.block_count} blocks")
    return system


# =============================================================================
# Hadamard
# =============================================================================

def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    return all(q % p for p in range(2, int(q ** 0.5) + 1))


def _paley(q: int) -> np.ndarray:
    residues = {(x * x) % q for x in range(1, q)}

    def chi(a: int) -> int:
        a %= q
        return 0 if a == 0 else (1 if a in residues else -1)

    s = np.zeros((q + 1, q + 1), dtype=int)
    s[0, 1:] = 1
    s[1:, 0] = -1
    for i in range(q):
        for j in range(q):
            s[i + 1, j + 1] = chi(j - i)
    return np.eye(q + 1, dtype=int) + s


def _build_hadamard(order: int) -> Optional[np.ndarray]:
    if order == 1:
        return np.ones((1, 1), dtype=int)
    if order == 2:
        return np.array([[1, 1], [1, -1]])
    if order % 4:
        return None
    q = order - 1
    if _is_prime(q) and q % 4 == 3:
        return _paley(q)
    half = _build_hadamard(order // 2)
    if half is None:
        return None
    return np.kron(np.array([[1, 1], [1, -1]]), half)


def hadamard(order: int) -> np.ndarray:
    """
    첫 행이 모두 1 인 Hadamard 행렬 (H·Hᵀ = order·I)

    Raises:
        DesignError: 구성할 수 없는 차수
    """
    h = _build_hadamard(order) if order >= 1 else None
    if h is None:
        raise DesignError(f"no Hadamard matrix of order {order} is constructible")
    h = h * h[0][np.newaxis, :]
    if not np.array_equal(h @ h.T, order * np.eye(order, dtype=int)):
        raise InternalConsistencyError(f"Hadamard matrix of order {order} fails H·Hᵀ = nI")
    return h
