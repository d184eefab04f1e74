"""
비이산성 탐지 (휴리스틱, 증명 아님)
- 생성자들의 정수 결합으로 노름을 줄이는 Gauss 식 쌍별 축약 반복
- 최소 노름이 초기값 × shrink 미만으로 떨어지면 LIKELY_NON_DISCRETE
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

import numpy as np

from config import Config


class DiscretenessVerdict(Enum):
    LIKELY_NON_DISCRETE = "likely non-discrete"
    NO_EVIDENCE = "no evidence"


@dataclass(frozen=True)
class DiscretenessReport:
    verdict: DiscretenessVerdict
    initial_min_norm: float
    final_min_norm: float
    history: Tuple[float, ...]


def _as_columns(vectors) -> np.ndarray:
    arr = np.asarray(vectors, dtype=float)
    if arr.ndim == 1:
        return arr.reshape(1, -1)
    return arr


def detect_non_discreteness(vectors, iterations: Optional[int] = None,
                            shrink: Optional[float] = None) -> DiscretenessReport:
    """
    Args:
        vectors: d×n 실수 행렬 (열 = 생성자) 또는 R¹ 의 값 목록
        iterations: 축약 반복 횟수 (None이면 config)
        shrink: 판정 비율 (None이면 config)

    Returns:
        DiscretenessReport
    """
    iterations = iterations or Config.get_frame_setting("discreteness_iterations")
    shrink = shrink or Config.get_frame_setting("discreteness_shrink")
    cols = _as_columns(vectors)
    gens: List[np.ndarray] = [cols[:, j].copy() for j in range(cols.shape[1])]
    norms = [float(np.linalg.norm(v)) for v in gens]
    zero_tol = Config.get_frame_setting("numeric_tolerance") * max(norms, default=0.0)
    gens = [v for v, n in zip(gens, norms) if n > zero_tol]
    if not gens:
        return DiscretenessReport(DiscretenessVerdict.NO_EVIDENCE, 0.0, 0.0, ())

    initial = min(float(np.linalg.norm(v)) for v in gens)
    history = [initial]
    for _ in range(iterations):
        changed = False
        for i in range(len(gens)):
            for j in range(len(gens)):
                if i == j:
                    continue
                vj = gens[j]
                denom = float(vj @ vj)
                if denom <= zero_tol * zero_tol:
                    continue
                q = round(float(gens[i] @ vj) / denom)
                if q:
                    gens[i] = gens[i] - q * vj
                    changed = True
        gens = [v for v in gens if np.linalg.norm(v) > zero_tol]
        history.append(min((float(np.linalg.norm(v)) for v in gens), default=0.0))
        if not changed or not gens:
            break

    final = history[-1]
    verdict = (DiscretenessVerdict.LIKELY_NON_DISCRETE if 0 < final < initial * shrink
               else DiscretenessVerdict.NO_EVIDENCE)
    return DiscretenessReport(verdict, initial, final, tuple(history))
