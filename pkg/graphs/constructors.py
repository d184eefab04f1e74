"""
이름 있는 그래프 생성자
- 빈/완전/순환/경로 그래프
- Hamming, Kneser, Johnson 그래프와 폐형 스펙트럼
- 선 그래프, 여그래프, 서로소 합
- 접힌 큐브, Clebsch, Shrikhande, Gosset, Schläfli
정점 순서: 튜플/부분집합은 사전순, 곱 그래프는 행 우선
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import Dict

from graphs.graph import Graph
from utils.errors import GraphError, InternalConsistencyError


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise GraphError(message)


# =============================================================================
# 기본 그래프
# =============================================================================

def empty_graph(n: int) -> Graph:
    _require(n >= 1, f"empty graph needs n >= 1, got {n}")
    return Graph(n, tuple((0,) * n for _ in range(n)), f"empty({n})")


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(n, tuple(tuple(0 if i == j else 1 for j in range(n)) for i in range(n)), f"complete({n})")


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)], f"cycle({n})")


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)], f"path({n})")


# =============================================================================
# Hamming / Kneser / Johnson
# =============================================================================

def hamming(d: int, q: int) -> Graph:
    """H(d,q): 길이 d 단어, 한 좌표만 다르면 인접"""
    _require(d >= 1 and q >= 1, f"hamming needs d, q >= 1, got ({d}, {q})")
    words = list(product(range(q), repeat=d))
    return Graph.from_predicate(
        words, lambda a, b: sum(x != y for x, y in zip(a, b)) == 1, f"hamming({d},{q})")


def kneser(n: int, k: int) -> Graph:
    """KG(n,k): k-부분집합, 서로소이면 인접"""
    _require(k >= 1 and n >= 2 * k, f"kneser needs n >= 2k >= 2, got ({n}, {k})")
    subsets = [frozenset(s) for s in combinations(range(n), k)]
    return Graph.from_predicate(subsets, lambda a, b: not (a & b), f"kneser({n},{k})")


def johnson(n: int, k: int) -> Graph:
    """J(n,k): k-부분집합, 교집합 크기 k-1 이면 인접"""
    _require(n > k >= 1, f"johnson needs n > k >= 1, got ({n}, {k})")
    subsets = [frozenset(s) for s in combinations(range(n), k)]
    return Graph.from_predicate(subsets, lambda a, b: len(a & b) == k - 1, f"johnson({n},{k})")


def petersen() -> Graph:
    return kneser(5, 2).relabel("petersen")


def hamming_spectrum(d: int, q: int) -> Dict[Fraction, int]:
    """고유값 (q-1)d - qi, 중복도 C(d,i)(q-1)^i"""
    spec: Dict[Fraction, int] = {}
    for i in range(d + 1):
        mult = comb(d, i) * (q - 1) ** i
        if mult:
            lam = Fraction((q - 1) * d - q * i)
            spec[lam] = spec.get(lam, 0) + mult
    return spec


def kneser_spectrum(n: int, k: int) -> Dict[Fraction, int]:
    """고유값 (-1)^j C(n-k-j, k-j), 중복도 C(n,j) - C(n,j-1)"""
    spec: Dict[Fraction, int] = {}
    for j in range(k + 1):
        mult = comb(n, j) - (comb(n, j - 1) if j >= 1 else 0)
        if mult:
            lam = Fraction((-1) ** j * comb(n - k - j, k - j))
            spec[lam] = spec.get(lam, 0) + mult
    return spec


def johnson_spectrum(n: int, k: int) -> Dict[Fraction, int]:
    """고유값 (k-j)(n-k-j) - j, 중복도 C(n,j) - C(n,j-1)"""
    spec: Dict[Fraction, int] = {}
    for j in range(min(k, n - k) + 1):
        mult = comb(n, j) - (comb(n, j - 1) if j >= 1 else 0)
        if mult:
            lam = Fraction((k - j) * (n - k - j) - j)
            spec[lam] = spec.get(lam, 0) + mult
    return spec


# =============================================================================
# 연산
# =============================================================================

def line_graph(g: Graph) -> Graph:
    """정점 = g 의 간선 (사전순), 끝점 공유 시 인접"""
    edges = g.edges()
    _require(len(edges) > 0, f"line graph of edgeless graph {g.label}")
    return Graph.from_predicate(
        edges, lambda a, b: len(set(a) & set(b)) == 1, f"line_graph({g.label})")


def complement(g: Graph) -> Graph:
    """인접행렬 J - I - A"""
    n = g.n
    return Graph(n, tuple(tuple(0 if i == j else 1 - g.adjacency[i][j] for j in range(n)) for i in range(n)),
                 f"complement({g.label})")


def disjoint_union(g: Graph, copies: int) -> Graph:
    """블록 대각 인접행렬"""
    _require(copies >= 1, f"disjoint union needs copies >= 1, got {copies}")
    if copies == 1:
        return g
    n = g.n
    rows = []
    for c in range(copies):
        for row in g.adjacency:
            rows.append((0,) * (c * n) + row + (0,) * ((copies - c - 1) * n))
    return Graph(n * copies, tuple(rows), f"disjoint_union({g.label},{copies})")


# =============================================================================
# 특수 그래프
# =============================================================================

def folded_cube(d: int) -> Graph:
    """접힌 d-큐브: Q_{d-1} 에 대척점 간선 추가"""
    _require(d >= 2, f"folded cube needs d >= 2, got {d}")
    words = list(product(range(2), repeat=d - 1))

    def adjacent(a, b):
        diff = sum(x != y for x, y in zip(a, b))
        return diff == 1 or diff == d - 1

    return Graph.from_predicate(words, adjacent, f"folded_cube({d})")


def clebsch(degree: int = 5) -> Graph:
    """
    Clebsch 그래프

    Args:
        degree: 5 (접힌 5-큐브와 동형인 16정점 5-정규) 또는 10 (그 여그래프)
    """
    _require(degree in (5, 10), f"clebsch graph has degree 5 or 10, got {degree}")
    base = folded_cube(5)
    if degree == 10:
        return complement(base).relabel("clebsch(10)")
    return base.relabel("clebsch")


def shrikhande() -> Graph:
    """Z4×Z4 위의 Cayley 그래프, 연결 집합 {±(1,0), ±(0,1), ±(1,1)}"""
    connection = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    vertices = list(product(range(4), repeat=2))
    return Graph.from_predicate(
        vertices,
        lambda a, b: ((b[0] - a[0]) % 4, (b[1] - a[1]) % 4) in connection,
        "shrikhande")


def gosset() -> Graph:
    """
    Gosset 그래프: K8 간선 집합 두 벌 (56 정점)
    - 같은 벌: 정확히 한 끝점을 공유하면 인접
    - 다른 벌: 서로소 간선끼리 인접
    """
    edges = [frozenset(e) for e in combinations(range(8), 2)]
    vertices = [(c, e) for c in range(2) for e in edges]

    def adjacent(a, b):
        shared = len(a[1] & b[1])
        if a[0] == b[0]:
            return shared == 1
        return shared == 0

    return Graph.from_predicate(vertices, adjacent, "gosset")


def schlafli() -> Graph:
    """Gosset 그래프의 정점 0 국소 그래프, SRG(27,16,10,8) 검증"""
    from graphs.checks import is_strongly_regular

    g = gosset()
    nbrs = g.neighbors(0)
    rows = tuple(tuple(g.adjacency[i][j] for j in nbrs) for i in nbrs)
    result = Graph(len(nbrs), rows, "schlafli")
    if is_strongly_regular(result) != (16, 10, 8):
        raise InternalConsistencyError("local graph of Gosset is not SRG(27,16,10,8)")
    return result
