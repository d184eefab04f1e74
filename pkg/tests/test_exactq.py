"""정확 유리 산술: 소거, 영공간, 특성다항식, HNF, LDLᵀ"""
from fractions import Fraction
from math import gcd
from itertools import combinations

import pytest

from exactq.hnf import hnf_column_basis, integer_kernel, pair_reduce
from exactq.linalg import (determinant, inverse, is_positive_definite, ldlt, nullspace_basis, rank,
                           rref, solve)
import sympy as sp

from exactq.matrix import RationalMatrix, from_sympy_scalar, rational_sqrt, to_fraction
from exactq.poly import charpoly, rational_roots
from utils.errors import ExactArithmeticError, NotPositiveDefiniteError

K3 = RationalMatrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
C4 = RationalMatrix.from_rows([[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]])


class TestMatrix:
    def test_float_input_rejected(self):
        with pytest.raises(ExactArithmeticError):
            to_fraction(0.5)
        with pytest.raises(ExactArithmeticError):
            RationalMatrix.from_rows([[1.0, 2.0]])

    def test_string_literal_accepted(self):
        assert to_fraction("3/4") == Fraction(3, 4)

    def test_shape_mismatch(self):
        with pytest.raises(ExactArithmeticError):
            RationalMatrix.identity(2) @ RationalMatrix.identity(3)

    def test_kron_and_block_diag(self):
        a = RationalMatrix.from_rows([[1, 2], [3, 4]])
        k = a.kron(RationalMatrix.identity(2))
        assert k.shape == (4, 4)
        assert k[0, 2] == 2 and k[1, 3] == 2 and k[2, 0] == 3
        b = a.block_diag(RationalMatrix.from_rows([[5]]))
        assert b.shape == (3, 3) and b[2, 2] == 5 and b[0, 2] == 0

    def test_rational_sqrt(self):
        assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert rational_sqrt(2) is None

    def test_sympy_boundary(self):
        m = RationalMatrix.from_rows([[1, Fraction(-1, 2)], [0, 3]])
        assert RationalMatrix.from_sympy(m.to_sympy()) == m
        with pytest.raises(ExactArithmeticError):
            from_sympy_scalar(sp.sqrt(2))


class TestRref:
    def test_identity(self):
        m, pivots, r = rref(RationalMatrix.identity(3))
        assert m == RationalMatrix.identity(3)
        assert pivots == (0, 1, 2) and r == 3

    def test_zero(self):
        m, pivots, r = rref(RationalMatrix.zeros(2, 3))
        assert m.is_zero() and pivots == () and r == 0

    def test_dependent_rows(self):
        m, pivots, r = rref(RationalMatrix.from_rows([[1, 2], [2, 4]]))
        assert m == RationalMatrix.from_rows([[1, 2], [0, 0]])
        assert pivots == (0,) and r == 1


class TestNullspace:
    def test_identity_has_trivial_kernel(self):
        assert nullspace_basis(RationalMatrix.identity(3)) == []

    def test_zero_matrix(self):
        basis = nullspace_basis(RationalMatrix.zeros(2, 2))
        assert len(basis) == 2
        assert rank(RationalMatrix.from_rows(basis)) == 2

    def test_k3_top_eigenvector(self):
        shifted = K3 - RationalMatrix.identity(3).scale(2)
        basis = nullspace_basis(shifted)
        assert basis == [(Fraction(1), Fraction(1), Fraction(1))]


class TestSolveInverse:
    def test_inverse_roundtrip(self):
        a = RationalMatrix.from_rows([[2, 1], [1, 2]])
        assert a @ inverse(a) == RationalMatrix.identity(2)

    def test_singular(self):
        with pytest.raises(ExactArithmeticError):
            inverse(RationalMatrix.from_rows([[1, 2], [2, 4]]))

    def test_solve_inconsistent(self):
        a = RationalMatrix.from_rows([[1], [1]])
        b = RationalMatrix.from_rows([[1], [2]])
        with pytest.raises(ExactArithmeticError):
            solve(a, b)

    def test_determinant(self):
        assert determinant(RationalMatrix.from_rows([[2, 1], [1, 2]])) == 3
        assert determinant(K3) == 2


class TestCharpoly:
    def test_k3(self):
        # (x-2)(x+1)² = x³ - 3x - 2
        assert charpoly(K3) == (-2, -3, 0, 1)

    def test_zero_matrix(self):
        assert charpoly(RationalMatrix.zeros(3, 3)) == (0, 0, 0, 1)

    def test_c4(self):
        assert charpoly(C4) == (0, 0, -4, 0, 1)

    def test_rational_roots(self):
        assert rational_roots((-2, -3, 0, 1)) == [(Fraction(2), 1), (Fraction(-1), 2)]
        assert rational_roots((-2, 0, 1)) == []
        assert rational_roots((0, 0, -4, 0, 1)) == [(Fraction(2), 1), (Fraction(0), 2), (Fraction(-2), 1)]


class TestHnf:
    def test_standard_basis(self):
        basis = hnf_column_basis([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert basis.cols == 3
        assert abs(determinant(basis)) == 1

    def test_collinear_generators(self):
        basis = hnf_column_basis([[1, 0], [Fraction(1, 2), 0]])
        assert basis.cols == 1
        assert abs(basis[0, 0]) == Fraction(1, 2) and basis[1, 0] == 0

    def test_empty_input(self):
        assert hnf_column_basis([], dim=3).shape == (3, 0)

    def test_span_index_matches_minor_gcd(self, rng):
        """Z² 안 정수 생성 집합: |det B| = 모든 2×2 소행렬식의 gcd"""
        checked = 0
        while checked < 100:
            den = rng.choice([1, 1, 2, 3])
            gens = [[rng.randint(-6, 6), rng.randint(-6, 6)] for _ in range(rng.randint(2, 4))]
            g = 0
            for u, v in combinations(gens, 2):
                g = gcd(g, u[0] * v[1] - u[1] * v[0])
            if g == 0:
                continue
            basis = hnf_column_basis([[Fraction(x, den) for x in v] for v in gens])
            assert basis.cols == 2
            assert abs(determinant(basis)) == Fraction(g, den * den)
            coeffs = solve(basis, RationalMatrix.from_columns(
                [[Fraction(x, den) for x in v] for v in gens], nrows=2))
            assert coeffs.is_integral()
            checked += 1

    def test_integer_kernel_of_sum(self):
        kernel = integer_kernel(RationalMatrix.from_rows([[1, 1, 1]]))
        assert len(kernel) == 2
        assert all(sum(v) == 0 for v in kernel)
        k = RationalMatrix.from_columns(kernel, nrows=3)
        assert determinant(k.transpose() @ k) == 3

    def test_integer_kernel_clears_row_denominators(self):
        kernel = integer_kernel(RationalMatrix.from_rows([[Fraction(1, 2), 1]]))
        assert [tuple(abs(x) for x in v) for v in kernel] == [(2, 1)]
        assert kernel[0][0] * kernel[0][1] < 0

    def test_pair_reduce_is_unimodular_congruence(self):
        gram = RationalMatrix.from_rows([[2, 5], [5, 13]])
        reduced, u = pair_reduce(gram)
        assert reduced == u.transpose() @ gram @ u
        assert abs(determinant(u)) == 1
        assert 2 * abs(reduced[0, 1]) <= min(reduced[0, 0], reduced[1, 1])


class TestLdlt:
    def test_identity(self):
        l, d = ldlt(RationalMatrix.identity(3))
        assert l == RationalMatrix.identity(3) and d == RationalMatrix.identity(3)

    def test_a2(self, a2_gram):
        l, d = ldlt(a2_gram)
        assert l == RationalMatrix.from_rows([[1, 0], [Fraction(1, 2), 1]])
        assert d == RationalMatrix.diagonal([2, Fraction(3, 2)])

    def test_indefinite(self):
        with pytest.raises(NotPositiveDefiniteError):
            ldlt(RationalMatrix.from_rows([[0, 1], [1, 0]]))
        assert not is_positive_definite(RationalMatrix.from_rows([[0, 1], [1, 0]]))
