"""
그래프 구조 검사
- 정규성, 강정규성 (k, ℓ, m)
- 거리정규성 (교차 배열 {b_0..b_{d-1}; c_1..c_d})
"""
from __future__ import annotations

from typing import NamedTuple, Optional, Tuple

import networkx as nx

from graphs.graph import Graph
from utils.errors import GraphError


class IntersectionArray(NamedTuple):
    b: Tuple[int, ...]
    c: Tuple[int, ...]

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.b)) + ";" + ",".join(map(str, self.c)) + "}"


def is_regular(g: Graph) -> Optional[int]:
    """정규 그래프면 차수, 아니면 None"""
    if g.n == 0:
        return None
    k = g.degree(0)
    return k if all(g.degree(v) == k for v in range(g.n)) else None


def _common_neighbors(g: Graph, u: int, v: int) -> int:
    ru, rv = g.adjacency[u], g.adjacency[v]
    return sum(a & b for a, b in zip(ru, rv))


def is_strongly_regular(g: Graph) -> Optional[Tuple[int, int, int]]:
    """
    강정규 그래프면 (k, ℓ, m), 아니면 None

    완전 그래프와 간선 없는 그래프는 제외
    """
    k = is_regular(g)
    if k is None or k == 0 or k == g.n - 1:
        return None
    lam: Optional[int] = None
    mu: Optional[int] = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            c = _common_neighbors(g, u, v)
            if g.adjacency[u][v]:
                if lam is None:
                    lam = c
                elif lam != c:
                    return None
            else:
                if mu is None:
                    mu = c
                elif mu != c:
                    return None
    return k, lam if lam is not None else 0, mu if mu is not None else 0


def is_distance_regular(g: Graph) -> Optional[IntersectionArray]:
    """
    거리정규 그래프면 교차 배열, 아니면 None

    Raises:
        GraphError: 연결되지 않은 그래프
    """
    if not g.is_connected():
        raise GraphError(f"distance-regularity requires a connected graph: {g.label}")
    dist = dict(nx.all_pairs_shortest_path_length(g.to_networkx()))
    diameter = max(max(row.values()) for row in dist.values())
    b = [None] * (diameter + 1)
    c = [None] * (diameter + 1)
    for u in range(g.n):
        du = dist[u]
        for v in range(g.n):
            i = du[v]
            ci = bi = 0
            for w in g.neighbors(v):
                if du[w] == i - 1:
                    ci += 1
                elif du[w] == i + 1:
                    bi += 1
            if b[i] is None:
                b[i], c[i] = bi, ci
            elif b[i] != bi or c[i] != ci:
                return None
    return IntersectionArray(tuple(b[:diameter]), tuple(c[1:]))
