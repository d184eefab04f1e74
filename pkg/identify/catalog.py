"""
고전 격자 카탈로그
- Z_n, A_n, A_n*, A_n^r (r | n+1), D_n, D_n*, D_n^+, E6/E7/E8 과 쌍대
- 쌍대는 dual_lattice 로 계산, E6/E7 은 E8 = D8^+ 의 좌표 부분격자
- 합성: A2xA2 (텐서), A2+A2, A2+A2+A2+A2 (직교합)
- 이름 규칙: "Z5", "A4_dual", "A5^2", "D6_plus", "E7_dual"
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

from exactq.hnf import integer_kernel
from exactq.matrix import RationalMatrix
from lattices.lattice import (Lattice, dual_lattice, integer_lattice, lattice_from_generators,
                              orthogonal_sum, tensor_product)
from utils.errors import CatalogError


def _root_a(n: int) -> List[List[int]]:
    """A_n 단순근 e_i - e_{i+1} (R^{n+1})"""
    roots = []
    for i in range(n):
        v = [0] * (n + 1)
        v[i], v[i + 1] = 1, -1
        roots.append(v)
    return roots


def _root_d(n: int) -> List[List[int]]:
    """D_n 단순근 e_i - e_{i+1}, e_{n-1} + e_n"""
    roots = []
    for i in range(n - 1):
        v = [0] * n
        v[i], v[i + 1] = 1, -1
        roots.append(v)
    v = [0] * n
    v[n - 2], v[n - 1] = 1, 1
    roots.append(v)
    return roots


# =============================================================================
# 계열별 생성자
# =============================================================================

def build_z(n: int) -> Lattice:
    return integer_lattice(n).with_provenance(f"Z{n}")


def build_a(n: int) -> Lattice:
    if n < 1:
        raise CatalogError(f"A_n needs n >= 1, got {n}")
    return lattice_from_generators(_root_a(n), f"A{n}")


def build_a_dual(n: int) -> Lattice:
    return dual_lattice(build_a(n)).with_provenance(f"A{n}_dual")


def build_a_r(n: int, r: int) -> Lattice:
    """A_n 위에 글루 (1/r)((n+1)e_1 - 𝟙) 를 더한 지수 r 격자"""
    if n < 1 or r < 1 or (n + 1) % r != 0:
        raise CatalogError(f"A_n^r needs r | n+1, got n={n}, r={r}")
    glue = [Fraction(n, r)] + [Fraction(-1, r)] * n
    return lattice_from_generators(_root_a(n) + [glue], f"A{n}^{r}")


def build_d(n: int) -> Lattice:
    if n < 3:
        raise CatalogError(f"D_n needs n >= 3, got {n}")
    return lattice_from_generators(_root_d(n), f"D{n}")


def build_d_dual(n: int) -> Lattice:
    return dual_lattice(build_d(n)).with_provenance(f"D{n}_dual")


def build_d_plus(n: int) -> Lattice:
    if n < 4 or n % 2:
        raise CatalogError(f"D_n^+ needs even n >= 4, got {n}")
    half = [Fraction(1, 2)] * n
    return lattice_from_generators(_root_d(n) + [half], f"D{n}_plus")


def build_e8() -> Lattice:
    return build_d_plus(8).with_provenance("E8")


def _e8_sublattice(constraint_pairs: List[Tuple[int, int]], name: str) -> Lattice:
    """E8 좌표에서 x_i = x_j 제약을 만족하는 부분격자"""
    e8 = build_e8()
    rows = []
    for i, j in constraint_pairs:
        row = [Fraction(0)] * 8
        row[i], row[j] = Fraction(1), Fraction(-1)
        rows.append(row)
    constraint = RationalMatrix.from_rows(rows, 8) @ e8.basis
    kernel = integer_kernel(constraint)
    basis = e8.basis @ RationalMatrix.from_columns(kernel, nrows=8)
    return Lattice.from_basis(basis, name)


def build_e7() -> Lattice:
    return _e8_sublattice([(6, 7)], "E7")


def build_e6() -> Lattice:
    return _e8_sublattice([(5, 6), (6, 7)], "E6")


def build_composite(name: str) -> Lattice:
    a2 = build_a(2)
    if name == "A2xA2":
        return tensor_product(a2, a2).with_provenance(name)
    if name == "A2+A2":
        return orthogonal_sum(a2, a2).with_provenance(name)
    if name == "A2+A2+A2+A2":
        pair = orthogonal_sum(a2, a2)
        return orthogonal_sum(pair, pair).with_provenance(name)
    raise CatalogError(f"unknown composite {name!r}")


EXCEPTIONAL: Dict[str, Callable[[], Lattice]] = {
    "E6": build_e6,
    "E6_dual": lambda: dual_lattice(build_e6()).with_provenance("E6_dual"),
    "E7": build_e7,
    "E7_dual": lambda: dual_lattice(build_e7()).with_provenance("E7_dual"),
    "E8": build_e8,
}

FAMILIES: Dict[str, Callable[..., Lattice]] = {
    "Zn": build_z,
    "An": build_a,
    "An_dual": build_a_dual,
    "An_r": build_a_r,
    "Dn": build_d,
    "Dn_dual": build_d_dual,
    "Dn_plus": build_d_plus,
    **EXCEPTIONAL,
}

COMPOSITES = ("A2xA2", "A2+A2", "A2+A2+A2+A2")

# 다른 카탈로그 이름과 닮은 항목 (열거에서 제외)
KNOWN_ALIASES = {
    "A3^2": "Z3",
    "A7^2": "E7",
    "A7^4": "E7_dual",
    "A8^3": "E8",
    "D4_plus": "Z4",
    "D4_dual": "D4",
    "D8_plus": "E8",
}


def catalog_build(family: str, **params) -> Lattice:
    """
    계열 이름과 매개변수로 카탈로그 격자 생성

    Args:
        family: "Zn", "An", "An_dual", "An_r", "Dn", "Dn_dual", "Dn_plus",
                "E6", "E6_dual", "E7", "E7_dual", "E8" 또는 합성 이름
        params: n, r

    Raises:
        CatalogError: 알 수 없는 이름 또는 잘못된 매개변수
    """
    if family in COMPOSITES:
        return build_composite(family)
    builder = FAMILIES.get(family)
    if builder is None:
        raise CatalogError(f"unknown catalog family {family!r}")
    try:
        return builder(**params)
    except TypeError as e:
        raise CatalogError(f"bad parameters for {family}: {params}") from e


_NAME_PATTERNS = [
    (re.compile(r"^Z(\d+)$"), lambda m: build_z(int(m[1]))),
    (re.compile(r"^A(\d+)$"), lambda m: build_a(int(m[1]))),
    (re.compile(r"^A(\d+)_dual$"), lambda m: build_a_dual(int(m[1]))),
    (re.compile(r"^A(\d+)\^(\d+)$"), lambda m: build_a_r(int(m[1]), int(m[2]))),
    (re.compile(r"^D(\d+)$"), lambda m: build_d(int(m[1]))),
    (re.compile(r"^D(\d+)_dual$"), lambda m: build_d_dual(int(m[1]))),
    (re.compile(r"^D(\d+)_plus$"), lambda m: build_d_plus(int(m[1]))),
]


@lru_cache(maxsize=None)
def lattice_by_name(name: str) -> Lattice:
    """카탈로그 이름 ("A5^2", "E7_dual" 등) 으로 격자 생성"""
    if name in COMPOSITES:
        return build_composite(name)
    if name in EXCEPTIONAL:
        return EXCEPTIONAL[name]()
    for pattern, builder in _NAME_PATTERNS:
        m = pattern.match(name)
        if m:
            return builder(m)
    raise CatalogError(f"unknown catalog name {name!r}")


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    rank: int

    def build(self) -> Lattice:
        return lattice_by_name(self.name)


@lru_cache(maxsize=None)
def catalog_entries(max_rank: int) -> Tuple[CatalogEntry, ...]:
    """
    식별용 카탈로그 (Z, E, D, A, A^r, 합성 순서, 별칭 제외)

    Args:
        max_rank: 최대 계수
    """
    names: List[Tuple[str, int]] = []
    names += [(f"Z{n}", n) for n in range(1, max_rank + 1)]
    for name, rank in (("E8", 8), ("E7_dual", 7), ("E7", 7), ("E6_dual", 6), ("E6", 6)):
        if rank <= max_rank:
            names.append((name, rank))
    for n in range(4, max_rank + 1):
        names += [(f"D{n}", n), (f"D{n}_dual", n)]
        if n % 2 == 0:
            names.append((f"D{n}_plus", n))
    for n in range(2, max_rank + 1):
        names += [(f"A{n}", n), (f"A{n}_dual", n)]
    for n in range(2, max_rank + 1):
        names += [(f"A{n}^{r}", n) for r in range(2, n + 1) if (n + 1) % r == 0]
    names += [("A2xA2", 4), ("A2+A2", 4)]
    if max_rank >= 8:
        names.append(("A2+A2+A2+A2", 8))
    return tuple(CatalogEntry(name, rank) for name, rank in names if name not in KNOWN_ALIASES)
