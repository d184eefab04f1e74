"""조인 프레임: 분석, 유리성, 궤도 프레임, 수치 복원, 비이산성, CSV"""
import math
from fractions import Fraction

import numpy as np
import pytest

from exactq.matrix import RationalMatrix
from frames.analysis import analyze
from frames.discreteness import DiscretenessVerdict, detect_non_discreteness
from frames.frame import (Frame, frame_from_numeric, frame_of_minimal_vectors, is_rational_frame,
                          lattice_from_frame, simplex_etf)
from frames.frame_io import read_frame_csv, write_frame_csv, write_numeric_frame_csv
from frames.orbit import apply_permutation, graph_orbit_frame, orbit_frame
from frames.rationality import b0_inverse_b1_rationality, integer_coordinates, verify_rationality_theorem
from graphs.constructors import path, petersen
from graphs.graph import PermutationGroup
from identify.catalog import build_a
from identify.identifier import identify
from lattices.eutaxy import EutaxyKind, strong_eutaxy_check
from lattices.lattice import Lattice
from utils.errors import FrameError, NumericReconstructionError


class TestSimplexEtf:
    @pytest.mark.parametrize("k", [1, 2, 3, 5])
    def test_analysis(self, k):
        f = simplex_etf(k)
        assert f.count == k + 1 and f.dim == k and f.ambient_dim == k + 1
        report = analyze(f)
        assert report.is_tight and report.is_uniform
        assert report.gamma == Fraction(k, k + 1)
        if k > 1:
            assert report.is_equiangular
            assert report.coherence_sq == Fraction(1, k * k)

    def test_unit_norm(self):
        f = simplex_etf(4)
        assert all(f.gram()[i, i] == 1 for i in range(f.count))
        assert np.allclose(np.linalg.norm(f.to_numpy(), axis=0), 1.0)

    def test_invalid(self):
        with pytest.raises(FrameError):
            simplex_etf(0)

    def test_lattice_is_a3_dual(self):
        assert "A3_dual" in identify(lattice_from_frame(simplex_etf(3)))


class TestAnalysis:
    def test_non_tight(self):
        report = analyze(Frame.from_columns([[1, 0], [1, 1]]))
        assert not report.is_tight and report.gamma is None
        assert not report.is_uniform and not report.is_equiangular
        assert report.coherence_sq == Fraction(1, 2)

    def test_orthonormal_basis(self):
        report = analyze(Frame.from_columns([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))
        assert report.is_tight and report.gamma == 1
        assert report.coherence_sq == 0

    def test_minimal_vectors_of_a2(self):
        f = frame_of_minimal_vectors(build_a(2))
        assert f.count == 6
        assert analyze(f).is_tight

    def test_minimal_vectors_need_basis(self, a2_gram):
        with pytest.raises(FrameError):
            frame_of_minimal_vectors(Lattice.from_gram(a2_gram))

    def test_zero_frame_rejected(self):
        with pytest.raises(FrameError):
            Frame.from_columns([[0, 0]])


class TestRationality:
    @pytest.mark.parametrize("k", range(2, 9))
    def test_gram_identity(self, k):
        assert verify_rationality_theorem(simplex_etf(k))

    def test_integer_coordinates(self):
        f = simplex_etf(3)
        basis, z = integer_coordinates(f)
        assert z.is_integral()
        assert basis @ z == f.vectors

    def test_b0_inverse_b1(self):
        x = b0_inverse_b1_rationality(simplex_etf(3), 3)
        assert x == RationalMatrix.from_rows([[-1], [-1], [-1]])

    def test_b0_not_basis(self):
        with pytest.raises(FrameError):
            b0_inverse_b1_rationality(simplex_etf(3), 2)
        with pytest.raises(FrameError):
            b0_inverse_b1_rationality(simplex_etf(3), 0)

    def test_not_tight(self):
        with pytest.raises(FrameError):
            verify_rationality_theorem(Frame.from_columns([[1, 0], [1, 1]]))


class TestOrbitFrames:
    def test_apply_permutation(self):
        assert apply_permutation((1, 2, 0), (5, 6, 7)) == (7, 5, 6)

    def test_cyclic_orbit(self):
        group = PermutationGroup(3, [(1, 2, 0)])
        f = orbit_frame(group, (1, 0, 0))
        assert f.count == 3 and analyze(f).is_tight

    def test_orbit_cap(self):
        group = PermutationGroup(3, [(1, 2, 0)])
        with pytest.raises(FrameError):
            orbit_frame(group, (1, 0, 0), cap=2)

    def test_bad_seed(self):
        group = PermutationGroup(3, [(1, 2, 0)])
        with pytest.raises(FrameError):
            orbit_frame(group, (0, 0, 0))
        with pytest.raises(FrameError):
            orbit_frame(group, (1, 0))

    def test_petersen_eigenframe(self):
        f = graph_orbit_frame(petersen(), -2)
        assert f.count == 10 and f.dim == 4
        assert analyze(f).is_tight
        l = lattice_from_frame(f)
        assert strong_eutaxy_check(l).kind is EutaxyKind.STRONG
        assert "A4_dual" in identify(l)

    def test_requires_vertex_transitive(self):
        with pytest.raises(FrameError):
            graph_orbit_frame(path(3), 0)


class TestNumericFrames:
    def test_reconstruct_simplex(self):
        original = simplex_etf(3)
        recovered = frame_from_numeric(original.to_numpy())
        assert recovered.gram() == original.gram()
        assert is_rational_frame(original.to_numpy())

    def test_irrational_entries(self):
        with pytest.raises(NumericReconstructionError):
            frame_from_numeric([[1.0, math.pi]])
        assert not is_rational_frame([[1.0, math.pi]])

    def test_non_finite(self):
        with pytest.raises(NumericReconstructionError):
            frame_from_numeric([[1.0, float("nan")]])

    def test_exact_frame_is_rational(self):
        assert is_rational_frame(simplex_etf(2))


class TestDiscreteness:
    def test_irrational_ratio_is_flagged(self):
        report = detect_non_discreteness([1.0, math.sqrt(2)], iterations=10)
        assert report.verdict is DiscretenessVerdict.LIKELY_NON_DISCRETE
        assert report.final_min_norm < report.initial_min_norm

    def test_integer_generators(self):
        report = detect_non_discreteness(np.array([[1.0, 0.0, 1.0], [0.0, 1.0, 1.0]]))
        assert report.verdict is DiscretenessVerdict.NO_EVIDENCE
        assert report.final_min_norm == pytest.approx(1.0)

    def test_commensurable_reals(self):
        report = detect_non_discreteness([2.0, 3.0])
        assert report.verdict is DiscretenessVerdict.NO_EVIDENCE

    def test_all_zero(self):
        report = detect_non_discreteness([0.0, 0.0])
        assert report.verdict is DiscretenessVerdict.NO_EVIDENCE and report.history == ()


class TestFrameCsv:
    def test_exact_file(self, tmp_path):
        target = tmp_path / "simplex.csv"
        write_frame_csv(simplex_etf(2), target)
        assert target.read_text().startswith("# scale_sq: 1/6\n")
        assert read_frame_csv(target) == simplex_etf(2)

    def test_numeric_file(self, tmp_path):
        target = tmp_path / "simplex_numeric.csv"
        write_numeric_frame_csv(simplex_etf(3), target)
        frame = read_frame_csv(target, numeric=True)
        assert frame.gram() == simplex_etf(3).gram()

    def test_missing_file(self, tmp_path):
        with pytest.raises(FrameError):
            read_frame_csv(tmp_path / "nope.csv")

    def test_bad_entry(self, tmp_path):
        target = tmp_path / "bad.csv"
        target.write_text("1,x\n0,1\n")
        with pytest.raises(FrameError):
            read_frame_csv(target)
