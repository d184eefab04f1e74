"""
압축 센싱 복원 실험
- 희소도별로 정수 s-희소 신호 생성 (균등 지지, 진폭 {-M..M}\\{0})
- 잡음 없는 측정으로 정확 복원률, 지정 노름 잡음으로 평균 ℓ₂ 오차
- 시행별 난수 스트림은 마스터 시드에서 SeedSequence 로 분기 (재현 가능)
- 결과: pandas DataFrame (sparsity, method, success_rate, mean_error) + CSV/JSON/gnuplot
"""
from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Union

import numpy as np
import pandas as pd

from config import Config
from steinercs.etf import MeasurementMatrix
from steinercs.solvers import SOLVERS, BaseSolver
from utils.db import log_event

RESULT_COLUMNS = ["sparsity", "method", "success_rate", "mean_error"]


@dataclass(frozen=True)
class TrialOutcome:
    exact: Dict[str, bool]
    error: Dict[str, float]


def draw_signal(rng: np.random.Generator, n: int, s: int, max_amp: int) -> np.ndarray:
    amplitudes = np.array([a for a in range(-max_amp, max_amp + 1) if a != 0], dtype=float)
    x = np.zeros(n)
    if s:
        support = rng.choice(n, size=s, replace=False)
        x[support] = rng.choice(amplitudes, size=s)
    return x


def draw_noise(rng: np.random.Generator, k: int, norm: float) -> np.ndarray:
    e = rng.standard_normal(k)
    if norm <= 0:
        return np.zeros(k)
    return e * (norm / np.linalg.norm(e))


class RecoveryExperiment:
    """희소도 × 시행 반복 실험기"""

    def __init__(self, a: MeasurementMatrix, solvers: Optional[Sequence[BaseSolver]] = None,
                 seed: Optional[int] = None, max_amp: Optional[int] = None,
                 noise_level: Optional[float] = None, workers: int = 1):
        settings = Config.get_cs_settings()
        self.a = a
        self.solvers = list(solvers) if solvers is not None else list(SOLVERS.values())
        self.seed = settings["seed"] if seed is None else seed
        self.max_amp = max_amp or settings["max_amp"]
        self.noise_level = settings["noise"] if noise_level is None else noise_level
        self.workers = max(1, workers)

    def _trial(self, s: int, seed_seq: np.random.SeedSequence) -> TrialOutcome:
        rng = np.random.default_rng(seed_seq)
        a = self.a.matrix
        x = draw_signal(rng, a.shape[1], s, self.max_amp)
        y = a @ x
        y_noisy = y + draw_noise(rng, a.shape[0], self.noise_level)
        exact, error = {}, {}
        for solver in self.solvers:
            exact[solver.name] = solver.solve(a, y, s).against(x).exact
            error[solver.name] = solver.solve(a, y_noisy, s).error(x)
        return TrialOutcome(exact, error)

    def run(self, sparsities: Iterable[int], trials: int) -> pd.DataFrame:
        sparsities = list(sparsities)
        streams = np.random.SeedSequence(self.seed).spawn(len(sparsities))
        rows: List[dict] = []
        for s, stream in zip(sparsities, streams):
            children = stream.spawn(trials)
            if self.workers > 1:
                with ThreadPoolExecutor(max_workers=self.workers) as pool:
                    outcomes = list(pool.map(lambda ss: self._trial(s, ss), children))
            else:
                outcomes = [self._trial(s, ss) for ss in children]
            for solver in self.solvers:
                name = solver.name
                rows.append({
                    "sparsity": s,
                    "method": name,
                    "success_rate": 100.0 * sum(o.exact[name] for o in outcomes) / max(trials, 1),
                    "mean_error": float(np.mean([o.error[name] for o in outcomes])) if outcomes else 0.0,
                })
        df = pd.DataFrame(rows, columns=RESULT_COLUMNS)
        log_event("steinercs", "INFO",
                  f"{self.a.provenance}: {len(sparsities)} sparsities x {trials} trials, seed {self.seed}")
        return df


def run_experiment(a: MeasurementMatrix, sparsity_range: Iterable[int], trials: Optional[int] = None,
                   noise_level: Optional[float] = None, seed: Optional[int] = None,
                   max_amp: Optional[int] = None, workers: int = 1,
                   solvers: Optional[Sequence[BaseSolver]] = None) -> pd.DataFrame:
    """
    복원 실험 실행

    Args:
        a: 측정 행렬
        sparsity_range: 희소도 목록
        trials: 희소도별 시행 수 (None이면 config)
        noise_level: 잡음 노름 (None이면 config)
        seed: 마스터 시드 (None이면 config)

    Returns:
        DataFrame (sparsity, method, success_rate[%], mean_error)
    """
    trials = trials if trials is not None else Config.get_cs_settings()["trials"]
    experiment = RecoveryExperiment(a, solvers, seed, max_amp, noise_level, workers)
    return experiment.run(sparsity_range, trials)


# =============================================================================
# 출력
# =============================================================================

def to_gnuplot(df: pd.DataFrame) -> str:
    """방법별 블록 (빈 줄 두 개로 구분), 열: sparsity success_rate mean_error"""
    blocks = []
    for method, group in df.groupby("method", sort=False):
        lines = [f"# {method}", "# sparsity success_rate mean_error"]
        lines += [f"{int(r.sparsity)} {r.success_rate:.4f} {r.mean_error:.6e}" for r in group.itertuples()]
        blocks.append("\n".join(lines))
    return "\n\n\n".join(blocks) + "\n"


def write_results(df: pd.DataFrame, output_dir: Union[str, Path], prefix: str,
                  parameters: Optional[dict] = None) -> Dict[str, Path]:
    """CSV, JSON, gnuplot 파일 기록"""
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "csv": out / f"{prefix}.csv",
        "json": out / f"{prefix}.json",
        "gnuplot": out / f"{prefix}.dat",
    }
    df.to_csv(paths["csv"], index=False)
    payload = {"parameters": parameters or {}, "results": df.to_dict(orient="records")}
    paths["json"].write_text(json.dumps(payload, indent=2, default=str), encoding="utf-8")
    paths["gnuplot"].write_text(to_gnuplot(df), encoding="utf-8")
    return paths
