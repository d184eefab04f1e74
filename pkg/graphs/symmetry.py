"""
정점 추이성 증인 탐색
- 정점 0 을 각 정점으로 보내는 자기동형사상을 백트래킹으로 탐색
- 거리 보존 + 거리 프로파일 정제로 가지치기
- 예산 소진은 반증과 구분하여 SearchBudgetExceeded 로 보고
"""
from __future__ import annotations

from collections import Counter, deque
from typing import List, Optional

import networkx as nx

from config import Config
from graphs.graph import Graph, PermutationGroup
from utils.db import log_event
from utils.errors import SearchBudgetExceeded


class AutomorphismSearch:
    """거리 보존 백트래킹 기반 자기동형사상 탐색기"""

    def __init__(self, g: Graph, budget: Optional[int] = None):
        self.g = g
        self.budget = budget or Config.TRANSITIVITY_BUDGET
        self.nodes = 0

        n = g.n
        lengths = dict(nx.all_pairs_shortest_path_length(g.to_networkx()))
        self.dist = [[lengths[u].get(v, -1) for v in range(n)] for u in range(n)]
        self.profile = [
            (g.degree(v), tuple(sorted(Counter(self.dist[v]).items())))
            for v in range(n)
        ]
        self.order, self.parent = self._search_order()

    def _search_order(self):
        """정점 0 부터 BFS 순서 (성분별), 각 정점의 BFS 부모"""
        n = self.g.n
        order: List[int] = []
        parent: List[Optional[int]] = [None] * n
        seen = [False] * n
        for root in range(n):
            if seen[root]:
                continue
            seen[root] = True
            queue = deque([root])
            while queue:
                v = queue.popleft()
                order.append(v)
                for w in self.g.neighbors(v):
                    if not seen[w]:
                        seen[w] = True
                        parent[w] = v
                        queue.append(w)
        return order, parent

    def find(self, target: int) -> Optional[List[int]]:
        """0 → target 인 자기동형사상 (없으면 None)"""
        n = self.g.n
        image = [-1] * n
        used = [False] * n
        order, parent, dist, profile = self.order, self.parent, self.dist, self.profile

        def backtrack(pos: int) -> bool:
            self.nodes += 1
            if self.nodes > self.budget:
                raise SearchBudgetExceeded(
                    f"vertex-transitivity search exceeded {self.budget} nodes on {self.g.label}",
                    self.nodes)
            if pos == n:
                return True
            v = order[pos]
            if pos == 0:
                candidates = [target]
            elif parent[v] is not None:
                candidates = self.g.neighbors(image[parent[v]])
            else:
                candidates = range(n)
            for w in candidates:
                if used[w] or profile[w] != profile[v]:
                    continue
                dv, dw = dist[v], dist[w]
                if all(dv[order[q]] == dw[image[order[q]]] for q in range(pos)):
                    image[v] = w
                    used[w] = True
                    if backtrack(pos + 1):
                        return True
                    image[v] = -1
                    used[w] = False
            return False

        return list(image) if backtrack(0) else None


def vertex_transitivity_witness(g: Graph, budget: Optional[int] = None) -> Optional[PermutationGroup]:
    """
    정점 추이성 증인 (단일 궤도를 이루는 자기동형사상 생성자)

    Args:
        g: 그래프
        budget: 백트래킹 노드 상한 (None이면 config)

    Returns:
        추이적인 PermutationGroup, 반증되면 None

    Raises:
        SearchBudgetExceeded: 예산 소진 (반증 아님)
    """
    search = AutomorphismSearch(g, budget)
    group = PermutationGroup(g.n, ())
    orbit = {0} if g.n else set()
    for t in range(g.n):
        if t in orbit:
            continue
        perm = search.find(t)
        if perm is None:
            log_event("graphs", "INFO", f"{g.label}: no automorphism maps 0 to {t}")
            return None
        group = group.with_generator(perm)
        orbit = group.orbit(0)
    log_event("graphs", "INFO",
              f"{g.label}: vertex-transitive witness with {len(group.generators)} generators "
              f"({search.nodes} nodes)")
    return group
