"""격자 구성, 짧은 벡터 열거, 유태성, 기하량, Gram 입출력"""
import math
from fractions import Fraction

import pytest

from exactq.linalg import determinant, inverse
from exactq.matrix import RationalMatrix
from graphs.constructors import complete, empty_graph, petersen
from identify.catalog import build_a, build_a_dual, build_d, build_d_plus
from lattices.enumeration import (brute_force_vectors, is_well_rounded, minimal_vectors,
                                  short_vectors, shortest_vectors)
from lattices.eutaxy import (EutaxyKind, eutaxy_check, perfection_check, strong_eutaxy_check,
                             weak_eutaxy_check)
from lattices.geometry import (coherence, coherence_bound_check, coherence_bound_report,
                               minimal_vector_basis, packing_density)
from lattices.gram_io import format_gram, format_minimal_vectors, parse_gram, read_gram, write_gram
from lattices.lattice import (Lattice, dual_lattice, graph_lattice, integer_lattice,
                              lattice_from_generators, orthogonal_sum, tensor_product)
from lattices.simplex import LPStatus, maximize
from utils.errors import LatticeError, ReportError

# Z ⊕ A2 (최소 노름 2 로 맞춤): 약하게만 유태적
Z_PLUS_A2 = RationalMatrix.from_rows([[2, 0, 0], [0, 2, 1], [0, 1, 2]])


def gram_lattice(rows):
    return Lattice.from_gram(RationalMatrix.from_rows(rows))


class TestConstruction:
    def test_generators_reduce_to_basis(self):
        l = lattice_from_generators([[1, 0], [0, 1], [1, 1]])
        assert l.rank == 2 and l.determinant == 1

    def test_zero_generators(self):
        with pytest.raises(LatticeError):
            lattice_from_generators([[0, 0]])

    def test_not_positive_definite(self):
        with pytest.raises(LatticeError):
            gram_lattice([[1, 2], [2, 1]])

    def test_dual_of_integer_lattice(self):
        z = integer_lattice(4)
        assert dual_lattice(z).gram == z.gram

    def test_dual_is_involution(self):
        a3 = build_a(3)
        assert dual_lattice(dual_lattice(a3)).gram == a3.gram
        assert build_a_dual(3).determinant == Fraction(1, 4)

    def test_dual_basis_pairs_to_identity(self):
        a3 = build_a(3)
        dual = dual_lattice(a3)
        assert (a3.basis.transpose() @ dual.basis) == RationalMatrix.identity(3)

    def test_tensor_and_sum(self):
        a2 = build_a(2)
        t = tensor_product(a2, a2)
        assert t.rank == 4 and t.determinant == 81
        s = orthogonal_sum(a2, integer_lattice(1))
        assert s.rank == 3 and s.determinant == 3

    def test_scaled(self):
        l = build_a(2).scaled(3)
        assert l.determinant == 27 and l.norm_scale == 3
        assert minimal_vectors(l).min_norm_sq == 6


class TestGraphLattice:
    def test_empty_graph_gives_integer_lattice(self):
        l = graph_lattice(empty_graph(4), 0)
        assert l.rank == 4 and l.determinant == 1
        assert minimal_vectors(l).kissing_number == 8

    def test_complete_graph_full_rank(self):
        l = graph_lattice(complete(5), -1)
        assert l.rank == 4
        # I - J/5 의 열: 스팬 안의 A4 쌍대
        assert minimal_vectors(l).kissing_number == 10

    def test_petersen_rank(self):
        assert graph_lattice(petersen(), -2).rank == 4
        assert graph_lattice(petersen(), 1).rank == 5


class TestEnumeration:
    def test_integer_lattice(self):
        mv = minimal_vectors(integer_lattice(3))
        assert mv.min_norm_sq == 1 and mv.kissing_number == 6
        assert len(mv.pair_representatives()) == 3

    def test_a3_and_dual(self):
        assert minimal_vectors(build_a(3)).kissing_number == 12
        dual = minimal_vectors(build_a_dual(3))
        assert dual.min_norm_sq == Fraction(3, 4) and dual.kissing_number == 8

    def test_d6_plus(self):
        mv = minimal_vectors(build_d_plus(6))
        assert mv.min_norm_sq == Fraction(3, 2) and mv.kissing_number == 32

    def test_ambient_vectors_match_norm(self):
        l = build_d_plus(6)
        mv = minimal_vectors(l)
        for v in mv.ambient_vectors:
            assert sum(x * x for x in v) == Fraction(3, 2)

    def test_minimal_vectors_cached(self):
        l = build_a(4)
        assert minimal_vectors(l) is minimal_vectors(l)

    def test_rank_limit(self):
        with pytest.raises(LatticeError, match="enumeration limit"):
            minimal_vectors(integer_lattice(15))

    def test_short_vectors_sorted(self, a2_gram):
        found = short_vectors(a2_gram, 6)
        norms = [n for _, n in found]
        assert norms == sorted(norms)
        assert norms.count(2) == 6 and norms.count(6) == 6

    def test_matches_brute_force(self, rng):
        checked = 0
        while checked < 25:
            k = rng.choice([2, 3])
            b = RationalMatrix.from_rows([[rng.randint(-3, 3) for _ in range(k)] for _ in range(k)])
            if determinant(b) == 0:
                continue
            gram = b.transpose() @ b
            bound = max(gram[i, i] for i in range(k))
            assert short_vectors(gram, bound) == brute_force_vectors(gram, bound)
            best, coords = shortest_vectors(gram)
            exhaustive = brute_force_vectors(gram, best)
            assert sorted(c for c, _ in exhaustive) == coords
            assert all(n == best for _, n in exhaustive)
            checked += 1

    def test_well_rounded(self):
        assert is_well_rounded(build_a(2))
        assert is_well_rounded(integer_lattice(3))
        assert not is_well_rounded(gram_lattice([[1, 0], [0, 2]]))


class TestEutaxy:
    @pytest.mark.parametrize("build", [lambda: integer_lattice(3), lambda: build_a(3),
                                       lambda: build_a_dual(3), lambda: build_d_plus(6)])
    def test_strongly_eutactic(self, build):
        cert = strong_eutaxy_check(build())
        assert cert.kind is EutaxyKind.STRONG

    def test_strong_coefficient(self):
        cert = strong_eutaxy_check(integer_lattice(3))
        assert cert.coefficient == Fraction(1, 2)
        assert len(cert.coefficients) == 6

    def test_weak_but_not_strong(self):
        l = Lattice.from_gram(Z_PLUS_A2)
        assert strong_eutaxy_check(l).kind is EutaxyKind.NONE
        cert = weak_eutaxy_check(l)
        assert cert.kind is EutaxyKind.WEAK
        assert all(c > 0 for c in cert.coefficients)

        total = [[Fraction(0)] * 3 for _ in range(3)]
        for v, c in zip(minimal_vectors(l).vectors, cert.coefficients):
            for i in range(3):
                for j in range(3):
                    total[i][j] += c * v[i] * v[j]
        assert RationalMatrix.from_rows(total) == inverse(Z_PLUS_A2)
        assert eutaxy_check(l).kind is EutaxyKind.WEAK

    @pytest.mark.parametrize("build", [
        lambda: build_a(2), lambda: build_a_dual(3), lambda: build_d(4), lambda: build_d_plus(6),
        lambda: Lattice.from_gram(Z_PLUS_A2), lambda: gram_lattice([[2, 1], [1, 3]]),
    ])
    def test_strong_eutaxy_invariant_under_unimodular_change(self, build, unimodular):
        l = build()
        expected = strong_eutaxy_check(l)
        for _ in range(3):
            u = unimodular(l.rank)
            cert = strong_eutaxy_check(Lattice.from_gram(u.transpose() @ l.gram @ u))
            assert (cert.kind, cert.coefficient) == (expected.kind, expected.coefficient)

    def test_not_eutactic(self):
        l = gram_lattice([[1, 0], [0, 2]])
        assert eutaxy_check(l).kind is EutaxyKind.NONE
        assert not eutaxy_check(l).is_eutactic

    def test_perfection(self):
        assert perfection_check(build_a(3))
        assert perfection_check(build_a(2))
        assert not perfection_check(integer_lattice(3))
        assert not perfection_check(build_a_dual(3))

    def test_certificate_json(self):
        doc = strong_eutaxy_check(integer_lattice(2)).to_json_dict()
        assert doc["kind"] == "strong" and doc["coefficient"] == "1/2"


class TestGeometry:
    def test_coherence_values(self):
        assert coherence(build_a(3)).exact_cosine == Fraction(1, 2)
        assert coherence(build_a_dual(3)).cos_sq == Fraction(1, 9)
        assert coherence(build_d_plus(6)).exact_cosine == Fraction(1, 3)
        assert coherence(integer_lattice(3)).cos_sq == 0

    def test_coherence_from_gram_only(self):
        assert coherence(gram_lattice([[1, 0], [0, 1]])).exact_cosine == 0
        assert str(coherence(gram_lattice([[2, 1], [1, 2]]))) == "1/2"
        # 최소 벡터 한 쌍뿐
        assert coherence(gram_lattice([[2, 1], [1, 3]])).cos_sq == 0

    def test_coherence_rank_one(self):
        with pytest.raises(LatticeError):
            coherence(integer_lattice(1))

    def test_packing_density(self):
        assert packing_density(integer_lattice(2)) == pytest.approx(math.pi / 4)
        assert packing_density(build_a(2)) == pytest.approx(math.pi / (2 * math.sqrt(3)))
        assert packing_density(build_d(3)) == pytest.approx(math.pi / (3 * math.sqrt(2)))

    def test_coherence_bound_equality_for_a2(self, a2_gram):
        report = coherence_bound_report(Lattice.from_gram(a2_gram), [(1, 0), (0, 1)])
        assert report.holds
        assert report.max_cos_sq == Fraction(1, 4) == report.bound_cos_sq
        assert report.angles[0] == pytest.approx(math.pi / 3)

    @pytest.mark.parametrize("build", [lambda: build_a(3), lambda: build_d(4), lambda: integer_lattice(3),
                                       lambda: build_a_dual(3)])
    def test_coherence_bound_holds(self, build):
        l = build()
        basis = minimal_vector_basis(l)
        assert basis is not None
        assert coherence_bound_check(l, basis)

    def test_no_minimal_basis(self):
        assert minimal_vector_basis(gram_lattice([[1, 0], [0, 2]])) is None

    def test_bound_rejects_non_minimal(self):
        with pytest.raises(LatticeError):
            coherence_bound_report(integer_lattice(2), [(1, 1), (0, 1)])


class TestGramIO:
    def test_parse(self, a2_gram):
        assert parse_gram("# A2\n2\n2 1\n1 2\n") == a2_gram
        assert parse_gram("1\n3/4\n") == RationalMatrix.from_rows([[Fraction(3, 4)]])

    @pytest.mark.parametrize("text", ["", "x\n", "2\n1 0\n", "2\n1 0\n0\n", "2\n1 2\n3 1\n", "1\n1/0\n"])
    def test_malformed(self, text):
        with pytest.raises(ReportError):
            parse_gram(text)

    def test_file_roundtrip(self, tmp_path, a2_gram):
        target = tmp_path / "a2.gram"
        write_gram(a2_gram, target)
        assert target.read_text() == "2\n2 1\n1 2\n"
        assert read_gram(target) == a2_gram
        assert format_gram(a2_gram) == "2\n2 1\n1 2\n"

    def test_minimal_vector_dump(self):
        text = format_minimal_vectors(minimal_vectors(integer_lattice(2)))
        lines = text.splitlines()
        assert lines[0] == "# min_norm_sq 1 kissing 4"
        assert len(lines) == 5


class TestSimplex:
    def test_optimal(self):
        result = maximize([1, 2, 0], [[1, 1, 1]], [4])
        assert result.status is LPStatus.OPTIMAL
        assert result.value == 8 and result.x == (0, 4, 0)

    def test_infeasible(self):
        assert maximize([1], [[1]], [-1]).status is LPStatus.INFEASIBLE

    def test_unbounded(self):
        assert maximize([1, 0], [[1, -1]], [0]).status is LPStatus.UNBOUNDED
