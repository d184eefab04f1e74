"""
그래프 곱
- 데카르트 / 직접(텐서) / 강 / 사전식 곱
- 정점 (u, v) 의 인덱스 = u·n2 + v (g1 인덱스가 major)
- 처음 세 곱의 고유값 사상 f(λ, μ)
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict

from graphs.graph import Graph


def _product(g1: Graph, g2: Graph, rule: Callable[[int, int, int, int], bool], name: str) -> Graph:
    n1, n2 = g1.n, g2.n
    n = n1 * n2
    rows = [[0] * n for _ in range(n)]
    for u1 in range(n1):
        for v1 in range(n2):
            i = u1 * n2 + v1
            for u2 in range(n1):
                for v2 in range(n2):
                    j = u2 * n2 + v2
                    if j > i and rule(u1, v1, u2, v2):
                        rows[i][j] = rows[j][i] = 1
    return Graph(n, tuple(tuple(r) for r in rows), f"{name}({g1.label},{g2.label})")


def cartesian(g1: Graph, g2: Graph) -> Graph:
    a1, a2 = g1.adjacency, g2.adjacency
    return _product(
        g1, g2,
        lambda u1, v1, u2, v2: (u1 == u2 and a2[v1][v2] == 1) or (v1 == v2 and a1[u1][u2] == 1),
        "cartesian")


def direct(g1: Graph, g2: Graph) -> Graph:
    a1, a2 = g1.adjacency, g2.adjacency
    return _product(g1, g2, lambda u1, v1, u2, v2: a1[u1][u2] == 1 and a2[v1][v2] == 1, "direct")


def strong(g1: Graph, g2: Graph) -> Graph:
    a1, a2 = g1.adjacency, g2.adjacency

    def rule(u1, v1, u2, v2):
        if u1 == u2 and v1 == v2:
            return False
        return (u1 == u2 or a1[u1][u2] == 1) and (v1 == v2 or a2[v1][v2] == 1)

    return _product(g1, g2, rule, "strong")


def lexicographic(g1: Graph, g2: Graph) -> Graph:
    a1, a2 = g1.adjacency, g2.adjacency
    return _product(
        g1, g2,
        lambda u1, v1, u2, v2: a1[u1][u2] == 1 or (u1 == u2 and a2[v1][v2] == 1),
        "lexicographic")


# 고유값 사상
EIGENVALUE_MAPS: Dict[str, Callable[[Fraction, Fraction], Fraction]] = {
    "cartesian": lambda lam, mu: lam + mu,
    "direct": lambda lam, mu: lam * mu,
    "strong": lambda lam, mu: (lam + 1) * (mu + 1) - 1,
}


def product_spectrum(kind: str, spec1: Dict[Fraction, int], spec2: Dict[Fraction, int]) -> Dict[Fraction, int]:
    """성분 스펙트럼으로부터 곱 그래프 스펙트럼 예측 (중복도는 곱)"""
    f = EIGENVALUE_MAPS[kind]
    out: Dict[Fraction, int] = {}
    for lam, m1 in spec1.items():
        for mu, m2 in spec2.items():
            nu = Fraction(f(Fraction(lam), Fraction(mu)))
            out[nu] = out.get(nu, 0) + m1 * m2
    return out
