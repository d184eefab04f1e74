"""유리 스펙트럼과 정확 고유사영"""
from fractions import Fraction

import pytest

from exactq.matrix import RationalMatrix
from graphs.constructors import complete, cycle, path, petersen, shrikhande
from spectral.eigen import (complement_check_applies, complement_projection_matches, eigenprojection,
                            rational_spectrum, spectrum_summary)
from utils.errors import SpectralError


def all_ones(n):
    return RationalMatrix.from_rows([[1] * n for _ in range(n)])


class TestRationalSpectrum:
    def test_cycle5_has_irrational_part(self):
        spec = rational_spectrum(cycle(5))
        assert spec.entries == ((Fraction(2), 1),)
        assert spec.residual_degree == 4

    def test_multiplicities_sum_to_order(self):
        spec = rational_spectrum(petersen())
        assert sum(m for _, m in spec.entries) + spec.residual_degree == 10
        assert spec.multiplicity(1) == 5
        assert spec.multiplicity(7) == 0
        assert spec.eigenvalues == (3, 1, -2)

    def test_json_and_summary(self):
        spec = rational_spectrum(cycle(5))
        assert spec.to_json_dict() == {
            "eigenvalues": [{"eigenvalue": "2", "multiplicity": 1}],
            "residual_degree": 4,
        }
        assert spectrum_summary(cycle(5)) == "2^1 (+4 irrational)"
        assert spectrum_summary(petersen(), Fraction(-2)) == "-2^4"


class TestEigenprojection:
    @pytest.mark.parametrize("n", [3, 4, 6])
    def test_complete_graph(self, n):
        ep = eigenprojection(complete(n), -1)
        expected = RationalMatrix.identity(n) - all_ones(n).scale(Fraction(1, n))
        assert ep.projection == expected
        assert ep.multiplicity == n - 1
        top = eigenprojection(complete(n), n - 1)
        assert top.projection == all_ones(n).scale(Fraction(1, n))

    def test_projection_properties(self):
        g = petersen()
        a = g.adjacency_matrix()
        p = eigenprojection(g, 1).projection
        assert p @ p == p
        assert p.is_symmetric()
        assert p.trace() == 5
        assert a @ p == p.scale(1)

    def test_projections_resolve_identity(self):
        g = shrikhande()
        total = RationalMatrix.zeros(g.n, g.n)
        for lam in rational_spectrum(g).eigenvalues:
            total = total + eigenprojection(g, lam).projection
        assert total == RationalMatrix.identity(g.n)

    def test_not_an_eigenvalue(self):
        with pytest.raises(SpectralError):
            eigenprojection(petersen(), 0)

    def test_float_eigenvalue_rejected(self):
        with pytest.raises(ValueError):
            eigenprojection(petersen(), 1.0)


class TestComplementProjection:
    @pytest.mark.parametrize("lam", [1, -2])
    def test_petersen(self, lam):
        assert complement_projection_matches(petersen(), lam)

    def test_degree_rejected(self):
        with pytest.raises(SpectralError):
            complement_projection_matches(petersen(), 3)

    def test_irregular_rejected(self):
        with pytest.raises(SpectralError):
            complement_projection_matches(path(3), 0)

    def test_complement_degree_rejected(self):
        # K5 의 -1 과 empty(5) 의 0 (= 여그래프 차수)
        assert not complement_check_applies(complete(5), -1)
        with pytest.raises(SpectralError):
            complement_projection_matches(complete(5), -1)

    @pytest.mark.parametrize("build,lam,applies", [
        (petersen, -2, True), (petersen, 3, False), (lambda: path(3), 0, False), (lambda: cycle(6), 1, True),
    ])
    def test_check_applies(self, build, lam, applies):
        assert complement_check_applies(build(), lam) is applies
