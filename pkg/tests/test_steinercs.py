"""Steiner 설계, ETF 측정 행렬, 희소 복원 솔버와 실험"""
import json

import numpy as np
import pandas as pd
import pytest

from steinercs.designs import hadamard, steiner_triple_system
from steinercs.etf import MeasurementMatrix, mutual_coherence, steiner_etf, welch_bound
from steinercs.experiment import RESULT_COLUMNS, draw_noise, draw_signal, run_experiment, write_results
from steinercs.solvers import (OMPSolver, PrOMPSolver, get_solver, restricted_least_squares, solve_ht,
                               solve_ls, solve_omp, solve_promp)
from utils.errors import DesignError


@pytest.fixture(scope="module")
def etf7():
    return steiner_etf(steiner_triple_system(7))


class TestDesigns:
    @pytest.mark.parametrize("v,blocks", [(7, 7), (9, 12), (13, 26), (15, 35)])
    def test_block_counts(self, v, blocks):
        sts = steiner_triple_system(v)
        assert sts.block_count == blocks
        m = sts.incidence_matrix()
        assert (m.sum(axis=1) == 3).all()
        assert (m.sum(axis=0) == sts.replication).all()

    @pytest.mark.parametrize("v", [3, 5, 6, 8, 11])
    def test_invalid_orders(self, v):
        with pytest.raises(DesignError):
            steiner_triple_system(v)

    @pytest.mark.parametrize("order", [1, 2, 4, 8, 12, 16])
    def test_hadamard(self, order):
        h = hadamard(order)
        assert (h[0] == 1).all()
        assert np.array_equal(h @ h.T, order * np.eye(order, dtype=int))

    @pytest.mark.parametrize("order", [0, 3, 5, 6])
    def test_hadamard_impossible(self, order):
        with pytest.raises(DesignError):
            hadamard(order)


class TestSteinerEtf:
    def test_sts7(self, etf7):
        assert (etf7.rows, etf7.cols) == (7, 28)
        assert etf7.coherence == pytest.approx(1 / 3, abs=1e-12)
        assert abs(etf7.coherence - welch_bound(7, 28)) < 1e-9
        assert np.allclose(np.linalg.norm(etf7.matrix, axis=0), 1.0)

    def test_sts15(self):
        a = steiner_etf(steiner_triple_system(15))
        assert (a.rows, a.cols) == (35, 120)
        assert abs(a.coherence - welch_bound(35, 120)) < 1e-9

    def test_missing_hadamard(self):
        # r + 1 = 5
        with pytest.raises(DesignError):
            steiner_etf(steiner_triple_system(9))

    def test_from_array(self):
        m = MeasurementMatrix.from_array([[1.0, 0.0], [1.0, 1.0]])
        assert m.coherence == pytest.approx(1 / np.sqrt(2))
        assert mutual_coherence(np.eye(3)) == 0.0


class TestSolvers:
    def test_zero_measurement(self, etf7):
        result = solve_omp(etf7.matrix, np.zeros(7), 2)
        assert not result.estimate.any() and result.support == ()

    @pytest.mark.parametrize("solve", [solve_omp, solve_ht, solve_promp])
    def test_one_sparse_exact(self, etf7, solve):
        x = np.zeros(28)
        x[5] = 3.0
        result = solve(etf7.matrix, etf7.matrix @ x, 1).against(x)
        assert result.exact and result.support == (5,)
        assert result.residual_norm == pytest.approx(0.0, abs=1e-9)

    def test_least_squares_is_minimum_norm(self, etf7):
        x = np.zeros(28)
        x[0] = 1.0
        result = solve_ls(etf7.matrix, etf7.matrix @ x)
        assert result.residual_norm == pytest.approx(0.0, abs=1e-9)
        assert np.linalg.norm(result.estimate) <= 1.0 + 1e-9

    def test_rounding_flag_degrades_to_omp(self, etf7, np_rng):
        x = draw_signal(np_rng, 28, 2, 5)
        y = etf7.matrix @ x + draw_noise(np_rng, 7, 0.3)
        plain = PrOMPSolver(rounding=False).solve(etf7.matrix, y, 2)
        assert np.array_equal(plain.estimate, OMPSolver().solve(etf7.matrix, y, 2).estimate)

    def test_rounding_path_is_integer_valued(self, etf7, np_rng):
        for _ in range(10):
            x = draw_signal(np_rng, 28, 3, 5)
            y = etf7.matrix @ x + draw_noise(np_rng, 7, 0.3)
            estimate = solve_promp(etf7.matrix, y, 3, fallback=False).estimate
            assert np.array_equal(estimate, np.round(estimate))

    def test_fallback_keeps_smaller_residual(self, etf7, np_rng):
        a = etf7.matrix
        for _ in range(20):
            y = a @ draw_signal(np_rng, 28, 3, 5) + draw_noise(np_rng, 7, 0.3)
            hybrid = solve_promp(a, y, 3)
            pure = solve_promp(a, y, 3, fallback=False)
            rounded_omp = np.linalg.norm(y - a @ np.round(solve_omp(a, y, 3).estimate))
            assert hybrid.residual_norm <= min(pure.residual_norm, rounded_omp) + 1e-12
            assert np.array_equal(hybrid.estimate, np.round(hybrid.estimate))

    def test_singular_support_flagged(self):
        a = np.array([[1.0, 1.0], [0.0, 0.0]])
        _, singular = restricted_least_squares(a, np.array([1.0, 0.0]), [0, 1])
        assert singular

    def test_validation(self, etf7):
        with pytest.raises(DesignError):
            solve_omp(etf7.matrix, np.zeros(6), 1)
        with pytest.raises(DesignError):
            solve_omp(etf7.matrix, np.zeros(7), -1)
        with pytest.raises(DesignError):
            get_solver("BP")


class TestExperiment:
    def test_signal_shape(self, np_rng):
        x = draw_signal(np_rng, 28, 4, 5)
        assert np.count_nonzero(x) == 4
        assert np.all(np.abs(x) <= 5) and np.array_equal(x, np.round(x))
        assert np.linalg.norm(draw_noise(np_rng, 7, 0.1)) == pytest.approx(0.1)

    def test_sparsity_zero(self, etf7):
        df = run_experiment(etf7, [0], trials=5, noise_level=0.1)
        assert list(df.columns) == RESULT_COLUMNS
        assert (df["success_rate"] == 100.0).all()
        assert (df["mean_error"] == 0.0).all()

    def test_noiseless_one_sparse(self, etf7):
        df = run_experiment(etf7, [1], trials=20, noise_level=0.0).set_index("method")
        for name in ("HT", "OMP", "PrOMP"):
            assert df.loc[name, "success_rate"] == 100.0

    def test_reproducible(self, etf7):
        first = run_experiment(etf7, [2, 3], trials=20, seed=7)
        second = run_experiment(etf7, [2, 3], trials=20, seed=7, workers=3)
        pd.testing.assert_frame_equal(first, second)

    def test_rounding_path_one_sparse(self, etf7):
        df = run_experiment(etf7, [1], trials=20, noise_level=0.0, solvers=[PrOMPSolver(fallback=False)])
        assert df["method"].tolist() == ["PrOMP-R"]
        assert df["success_rate"].tolist() == [100.0]

    def test_write_results(self, etf7, tmp_path):
        df = run_experiment(etf7, [1, 2], trials=4)
        paths = write_results(df, tmp_path / "out", "sts7", {"trials": 4})
        assert set(paths) == {"csv", "json", "gnuplot"}
        assert pd.read_csv(paths["csv"]).shape == df.shape
        payload = json.loads(paths["json"].read_text())
        assert payload["parameters"] == {"trials": 4} and len(payload["results"]) == len(df)
        blocks = paths["gnuplot"].read_text().split("\n\n\n")
        assert len(blocks) == 4 and blocks[0].startswith("# LS")


@pytest.mark.slow
class TestMonteCarlo:
    def test_omp_success_non_increasing(self, etf7):
        df = run_experiment(etf7, range(1, 7), trials=500, noise_level=0.0, solvers=[OMPSolver()])
        rates = df["success_rate"].tolist()
        assert all(later <= earlier + 1.0 for earlier, later in zip(rates, rates[1:]))

    def test_fallback_beats_rounding_path_at_three_sparse(self, etf7):
        solvers = [OMPSolver(), PrOMPSolver(), PrOMPSolver(fallback=False)]
        df = run_experiment(etf7, [3], trials=500, noise_level=0.0, solvers=solvers)
        rates = df.set_index("method")["success_rate"]
        assert rates["PrOMP"] >= rates["OMP"]
        assert rates["PrOMP"] > rates["PrOMP-R"]

    def test_noisy_one_sparse_errors(self, etf7):
        df = run_experiment(etf7, [1], trials=500, noise_level=0.1).set_index("method")
        assert df.loc["HT", "mean_error"] >= df.loc["OMP", "mean_error"]

    def test_sts15_curves(self):
        a = steiner_etf(steiner_triple_system(15))
        df = run_experiment(a, [2, 4], trials=500, noise_level=0.0, solvers=[OMPSolver(), PrOMPSolver()])
        table = df.pivot(index="sparsity", columns="method", values="success_rate")
        assert (table["PrOMP"] >= table["OMP"]).all()
