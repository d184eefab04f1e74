"""
그래프 / 치환군 타입
- 단순 무향 그래프 (0/1 대칭 인접행렬, 대각 0, 생성 라벨)
- 생성자 목록만 저장하는 치환군 (궤도는 필요 시 계산)
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import FrozenSet, List, Sequence, Tuple

import networkx as nx

from exactq.matrix import RationalMatrix
from utils.errors import GraphError


@dataclass(frozen=True)
class Graph:
    """단순 무향 그래프"""
    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    label: str = field(default="graph", compare=False)

    def __post_init__(self):
        adj = tuple(tuple(int(x) for x in row) for row in self.adjacency)
        object.__setattr__(self, "adjacency", adj)
        if len(adj) != self.n or any(len(row) != self.n for row in adj):
            raise GraphError(f"adjacency must be {self.n}x{self.n}")
        for i in range(self.n):
            if adj[i][i] != 0:
                raise GraphError(f"loop at vertex {i}")
            for j in range(i + 1, self.n):
                if adj[i][j] not in (0, 1):
                    raise GraphError(f"adjacency entry ({i},{j}) is not 0/1")
                if adj[i][j] != adj[j][i]:
                    raise GraphError(f"adjacency not symmetric at ({i},{j})")

    @classmethod
    def from_edges(cls, n: int, edges, label: str = "graph") -> "Graph":
        rows = [[0] * n for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u][v] = rows[v][u] = 1
        return cls(n, tuple(tuple(r) for r in rows), label)

    @classmethod
    def from_predicate(cls, vertices: Sequence, adjacent, label: str) -> "Graph":
        """정점 목록과 인접 판정 함수로 생성 (정점 순서 = 목록 순서)"""
        n = len(vertices)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                if adjacent(vertices[i], vertices[j]):
                    rows[i][j] = rows[j][i] = 1
        return cls(n, tuple(tuple(r) for r in rows), label)

    def relabel(self, label: str) -> "Graph":
        return Graph(self.n, self.adjacency, label)

    def neighbors(self, v: int) -> List[int]:
        return [u for u, a in enumerate(self.adjacency[v]) if a]

    def degree(self, v: int) -> int:
        return sum(self.adjacency[v])

    def edges(self) -> List[Tuple[int, int]]:
        """간선 목록 (i < j, 사전순)"""
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if self.adjacency[i][j]]

    def edge_count(self) -> int:
        return sum(sum(r) for r in self.adjacency) // 2

    def adjacency_matrix(self) -> RationalMatrix:
        return RationalMatrix.from_rows(self.adjacency, self.n)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def is_connected(self) -> bool:
        return self.n > 0 and nx.is_connected(self.to_networkx())

    def __repr__(self) -> str:
        return f"Graph({self.label}, n={self.n}, edges={self.edge_count()})"


@dataclass(frozen=True)
class PermutationGroup:
    """{0..degree-1} 위의 치환 생성자 집합"""
    degree: int
    generators: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        gens = tuple(tuple(int(x) for x in g) for g in self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if len(g) != self.degree or sorted(g) != list(range(self.degree)):
                raise GraphError(f"generator {g} is not a permutation of {self.degree} points")

    def orbit(self, point: int) -> FrozenSet[int]:
        seen = {point}
        queue = deque([point])
        while queue:
            p = queue.popleft()
            for g in self.generators:
                q = g[p]
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return frozenset(seen)

    def is_transitive(self) -> bool:
        return self.degree == 0 or len(self.orbit(0)) == self.degree

    def with_generator(self, perm: Sequence[int]) -> "PermutationGroup":
        return PermutationGroup(self.degree, self.generators + (tuple(perm),))
