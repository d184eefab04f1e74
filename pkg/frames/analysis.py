"""
프레임 분석: 조임 (tight), 균일, 등각, 응집도
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from frames.frame import Frame


@dataclass(frozen=True)
class TightnessReport:
    is_tight: bool
    gamma: Optional[Fraction]
    is_uniform: bool
    is_equiangular: bool
    coherence_sq: Fraction

    def to_json_dict(self) -> dict:
        return {
            "is_tight": self.is_tight,
            "gamma": str(self.gamma) if self.gamma is not None else None,
            "is_uniform": self.is_uniform,
            "is_equiangular": self.is_equiangular,
            "coherence_sq": str(self.coherence_sq),
        }


def analyze(f: Frame) -> TightnessReport:
    """
    프레임 분석

    VVᵀ 가 스팬 위에서 스칼라 c 배인지 (VVᵀ)² = c·VVᵀ 로 판정하고
    ‖v‖² = γ Σ ⟨v, f_i⟩² 의 γ = k / (scale_sq · trace) 를 계산

    Args:
        f: 프레임

    Returns:
        TightnessReport
    """
    v = f.vectors
    outer = v @ v.transpose()
    k = f.dim
    trace = outer.trace()
    c = trace / k
    is_tight = outer @ outer == outer.scale(c)
    gamma = Fraction(k) / (f.scale_sq * trace) if is_tight else None

    gram = f.gram()
    n = f.count
    norms = [gram[i, i] for i in range(n)]
    is_uniform = all(x == norms[0] for x in norms)

    abs_values = set()
    coherence_sq = Fraction(0)
    for i in range(n):
        for j in range(i + 1, n):
            g = gram[i, j]
            abs_values.add(abs(g))
            if norms[i] and norms[j]:
                coherence_sq = max(coherence_sq, g * g / (norms[i] * norms[j]))
    is_equiangular = is_uniform and len(abs_values) <= 1

    return TightnessReport(is_tight, gamma, is_uniform, is_equiangular, coherence_sq)
