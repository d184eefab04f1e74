"""
graph6 교환 형식 입출력 (networkx 사용)
"""
from __future__ import annotations

from pathlib import Path
from typing import List, Union

import networkx as nx

from graphs.graph import Graph
from utils.errors import GraphError


def to_graph6(g: Graph) -> str:
    """헤더 없는 graph6 문자열"""
    data = nx.to_graph6_bytes(g.to_networkx(), nodes=list(range(g.n)), header=False)
    return data.decode("ascii").strip()


def from_graph6(text: str, label: str = "graph6") -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    try:
        nxg = nx.from_graph6_bytes(text.encode("ascii"))
    except Exception as e:
        raise GraphError(f"invalid graph6 string {text!r}: {e}") from e
    n = nxg.number_of_nodes()
    return Graph.from_edges(n, list(nxg.edges()), label)


def write_graph6(graphs: List[Graph], path: Union[str, Path]) -> None:
    lines = [to_graph6(g) for g in graphs]
    Path(path).write_text("\n".join(lines) + "\n", encoding="ascii")


def read_graph6(path: Union[str, Path]) -> List[Graph]:
    path = Path(path)
    return [from_graph6(line, f"{path.stem}[{i}]")
            for i, line in enumerate(path.read_text(encoding="ascii").splitlines()) if line.strip()]
