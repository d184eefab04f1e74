"""
군 궤도 프레임
- 좌표 치환 작용 (τx)_{τ(i)} = x_i 로 시드 벡터의 궤도를 BFS 로 닫음
- 정점 추이 그래프: 자기동형 생성자와 시드 P_λ e_1 로 고유사영 프레임 구성
"""
from __future__ import annotations

from collections import deque
from typing import List, Optional, Sequence

from config import Config
from exactq.matrix import RationalVector, vector
from frames.frame import Frame
from graphs.graph import Graph, PermutationGroup
from graphs.symmetry import vertex_transitivity_witness
from spectral.eigen import eigenprojection
from utils.db import log_event
from utils.errors import FrameError


def apply_permutation(perm: Sequence[int], x: RationalVector) -> RationalVector:
    out = [None] * len(x)
    for i, value in enumerate(x):
        out[perm[i]] = value
    return tuple(out)


def orbit_frame(group: PermutationGroup, seed: Sequence, cap: Optional[int] = None,
                label: str = "orbit") -> Frame:
    """
    시드 벡터의 궤도 프레임

    Args:
        group: 좌표 치환 생성자
        seed: 0 이 아닌 유리 벡터
        cap: 궤도 크기 상한 (None이면 config)

    Raises:
        FrameError: 0 시드, 차원 불일치, 상한 초과
    """
    seed = vector(seed)
    if len(seed) != group.degree:
        raise FrameError(f"seed has length {len(seed)} but the group acts on {group.degree} points")
    if not any(seed):
        raise FrameError("orbit seed must be nonzero")
    cap = cap or Config.get_frame_setting("orbit_size_cap")

    seen = {seed}
    order: List[RationalVector] = [seed]
    queue = deque([seed])
    while queue:
        x = queue.popleft()
        for g in group.generators:
            y = apply_permutation(g, x)
            if y not in seen:
                if len(seen) >= cap:
                    raise FrameError(f"orbit exceeds the size cap {cap}")
                seen.add(y)
                order.append(y)
                queue.append(y)
    return Frame.from_columns(order, 1, label)


def graph_orbit_frame(g: Graph, eigenvalue) -> Frame:
    """
    정점 추이 그래프의 고유사영 궤도 프레임 F_λ(e_1)

    Raises:
        FrameError: 정점 추이성 증인이 없는 경우
    """
    group = vertex_transitivity_witness(g)
    if group is None:
        raise FrameError(f"{g.label} is not vertex-transitive")
    proj = eigenprojection(g, eigenvalue)
    frame = orbit_frame(group, proj.projection.column(0), label=f"F({g.label}@{proj.eigenvalue})")
    log_event("frames", "INFO", f"{frame.label}: {frame.count} vectors")
    return frame
