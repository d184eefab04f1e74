"""
정확 유리수 행렬/벡터 타입
- Fraction 기반 불변 행렬 (RationalMatrix)
- 튜플 기반 유리수 벡터 헬퍼
- 부동소수점 입력은 거부
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt, lcm
from typing import Iterable, List, Sequence, Tuple, Union

import sympy as sp

from utils.errors import ExactArithmeticError

Number = Union[int, Fraction]
RationalVector = Tuple[Fraction, ...]


def to_fraction(value) -> Fraction:
    """int / Fraction / "p/q" 문자열을 Fraction 으로 변환 (float 거부)"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise ExactArithmeticError(f"not a rational literal: {value!r}") from e
    # numpy 정수 등 정수형 스칼라 허용
    if hasattr(value, "__index__"):
        return Fraction(value.__index__())
    raise ExactArithmeticError(f"exact input required, got {type(value).__name__}: {value!r}")


def from_sympy_scalar(value) -> Fraction:
    """sympy 유리수를 Fraction 으로 변환"""
    value = sp.sympify(value)
    if not value.is_Rational:
        raise ExactArithmeticError(f"irrational value from sympy: {value}")
    return Fraction(int(value.p), int(value.q))


# =============================================================================
# 벡터 헬퍼
# =============================================================================

def vector(values: Iterable) -> RationalVector:
    return tuple(to_fraction(v) for v in values)


def dot(u: Sequence[Number], v: Sequence[Number]) -> Fraction:
    if len(u) != len(v):
        raise ExactArithmeticError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return Fraction(sum(a * b for a, b in zip(u, v)))


def norm_sq(v: Sequence[Number]) -> Fraction:
    return Fraction(sum(a * a for a in v))


def add(u: Sequence[Number], v: Sequence[Number]) -> RationalVector:
    return tuple(Fraction(a + b) for a, b in zip(u, v))


def sub(u: Sequence[Number], v: Sequence[Number]) -> RationalVector:
    return tuple(Fraction(a - b) for a, b in zip(u, v))


def scale(c: Number, v: Sequence[Number]) -> RationalVector:
    return tuple(Fraction(c * a) for a in v)


def is_zero(v: Sequence[Number]) -> bool:
    return all(a == 0 for a in v)


def denominator_lcm(values: Iterable[Fraction]) -> int:
    result = 1
    for v in values:
        result = lcm(result, Fraction(v).denominator)
    return result


def primitive_integer_vector(v: Sequence[Number]) -> Tuple[int, ...]:
    """분모를 지우고 gcd 로 나눈 정수 벡터 (부호 유지)"""
    from math import gcd
    d = denominator_lcm(v)
    ints = [int(Fraction(a) * d) for a in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def rational_sqrt(q: Number) -> Union[Fraction, None]:
    """완전제곱 유리수면 제곱근, 아니면 None"""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


# =============================================================================
# 행렬
# =============================================================================

class RationalMatrix:
    """행 우선 Fraction 행렬 (불변)"""

    __slots__ = ("rows", "cols", "_data", "_hash")

    def __init__(self, data: Sequence[Sequence], cols: int = None):
        rows = tuple(tuple(to_fraction(x) for x in row) for row in data)
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ExactArithmeticError(f"ragged matrix: expected {cols} columns, got {len(r)}")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "_data", rows)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def _wrap(cls, rows: Tuple[Tuple[Fraction, ...], ...], cols: int) -> "RationalMatrix":
        """검증 없이 생성 (내부용)"""
        obj = object.__new__(cls)
        object.__setattr__(obj, "rows", len(rows))
        object.__setattr__(obj, "cols", cols)
        object.__setattr__(obj, "_data", rows)
        object.__setattr__(obj, "_hash", None)
        return obj

    # -------------------------------------------------------------------------
    # 생성자
    # -------------------------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int = None) -> "RationalMatrix":
        return cls(rows, cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int = None) -> "RationalMatrix":
        columns = [vector(c) for c in columns]
        if not columns:
            return cls._wrap(tuple(() for _ in range(nrows or 0)), 0)
        n = len(columns[0])
        if any(len(c) != n for c in columns):
            raise ExactArithmeticError("columns differ in length")
        return cls._wrap(tuple(tuple(c[i] for c in columns) for i in range(n)), len(columns))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        one, zero = Fraction(1), Fraction(0)
        return cls._wrap(tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)), n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        zero = Fraction(0)
        return cls._wrap(tuple((zero,) * cols for _ in range(rows)), cols)

    @classmethod
    def diagonal(cls, values: Sequence) -> "RationalMatrix":
        values = vector(values)
        n = len(values)
        zero = Fraction(0)
        return cls._wrap(tuple(tuple(values[i] if i == j else zero for j in range(n)) for i in range(n)), n)

    # -------------------------------------------------------------------------
    # 접근
    # -------------------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self._data[i][j]

    def row(self, i: int) -> RationalVector:
        return self._data[i]

    def column(self, j: int) -> RationalVector:
        return tuple(r[j] for r in self._data)

    def columns(self) -> List[RationalVector]:
        return [self.column(j) for j in range(self.cols)]

    def to_lists(self) -> List[List[Fraction]]:
        return [list(r) for r in self._data]

    def to_sympy(self) -> sp.Matrix:
        return sp.Matrix(self.rows, self.cols,
                         [sp.Rational(a.numerator, a.denominator) for r in self._data for a in r])

    @classmethod
    def from_sympy(cls, m) -> "RationalMatrix":
        """sympy Matrix / DomainMatrix 를 변환 (무리수 성분은 거부)"""
        if hasattr(m, "to_Matrix"):
            m = m.to_Matrix()
        rows = tuple(tuple(from_sympy_scalar(m[i, j]) for j in range(m.cols)) for i in range(m.rows))
        return cls._wrap(rows, m.cols)

    def __iter__(self):
        return iter(self._data)

    # -------------------------------------------------------------------------
    # 산술
    # -------------------------------------------------------------------------

    def transpose(self) -> "RationalMatrix":
        if self.rows == 0:
            return RationalMatrix._wrap(tuple(() for _ in range(self.cols)), 0)
        return RationalMatrix._wrap(tuple(zip(*self._data)), self.rows)

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise ExactArithmeticError(f"shape mismatch: {self.shape} @ {other.shape}")
            zero = Fraction(0)
            out = []
            other_rows = other._data
            for row in self._data:
                acc = [zero] * other.cols
                for k, a in enumerate(row):
                    if a:
                        brow = other_rows[k]
                        for j in range(other.cols):
                            b = brow[j]
                            if b:
                                acc[j] += a * b
                out.append(tuple(acc))
            return RationalMatrix._wrap(tuple(out), other.cols)
        vec = vector(other)
        if len(vec) != self.cols:
            raise ExactArithmeticError(f"shape mismatch: {self.shape} @ vector({len(vec)})")
        return tuple(Fraction(sum(a * b for a, b in zip(row, vec) if a)) for row in self._data)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix._wrap(
            tuple(tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self._data, other._data)),
            self.cols)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        self._check_same_shape(other)
        return RationalMatrix._wrap(
            tuple(tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self._data, other._data)),
            self.cols)

    def __neg__(self) -> "RationalMatrix":
        return self.scale(-1)

    def scale(self, c: Number) -> "RationalMatrix":
        c = to_fraction(c)
        return RationalMatrix._wrap(tuple(tuple(c * a for a in r) for r in self._data), self.cols)

    def _check_same_shape(self, other: "RationalMatrix") -> None:
        if self.shape != other.shape:
            raise ExactArithmeticError(f"shape mismatch: {self.shape} vs {other.shape}")

    # -------------------------------------------------------------------------
    # 구조 조작
    # -------------------------------------------------------------------------

    def kron(self, other: "RationalMatrix") -> "RationalMatrix":
        """크로네커 곱 (self 인덱스가 major)"""
        out = []
        for r1 in self._data:
            for r2 in other._data:
                out.append(tuple(a * b for a in r1 for b in r2))
        return RationalMatrix._wrap(tuple(out), self.cols * other.cols)

    def block_diag(self, other: "RationalMatrix") -> "RationalMatrix":
        zero = Fraction(0)
        top = tuple(r + (zero,) * other.cols for r in self._data)
        bottom = tuple((zero,) * self.cols + r for r in other._data)
        return RationalMatrix._wrap(top + bottom, self.cols + other.cols)

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows:
            raise ExactArithmeticError(f"row mismatch: {self.rows} vs {other.rows}")
        return RationalMatrix._wrap(tuple(a + b for a, b in zip(self._data, other._data)),
                                    self.cols + other.cols)

    def select_columns(self, indices: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix._wrap(tuple(tuple(r[j] for j in indices) for r in self._data), len(indices))

    def select_rows(self, indices: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix._wrap(tuple(self._data[i] for i in indices), self.cols)

    # -------------------------------------------------------------------------
    # 판별
    # -------------------------------------------------------------------------

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        d = self._data
        return all(d[i][j] == d[j][i] for i in range(self.rows) for j in range(i + 1, self.cols))

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for r in self._data for a in r)

    def is_zero(self) -> bool:
        return all(a == 0 for r in self._data for a in r)

    def is_scalar(self) -> bool:
        """스칼라 행렬(cI) 여부"""
        if not self.is_square():
            return False
        if self.rows == 0:
            return True
        c = self._data[0][0]
        return all(self._data[i][j] == (c if i == j else 0)
                   for i in range(self.rows) for j in range(self.cols))

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ExactArithmeticError("trace of non-square matrix")
        return Fraction(sum(self._data[i][i] for i in range(self.rows)))

    def denominator_lcm(self) -> int:
        return denominator_lcm(a for r in self._data for a in r)

    def to_int_rows(self) -> List[List[int]]:
        """정수 행렬을 int 리스트로 변환"""
        if not self.is_integral():
            raise ExactArithmeticError("matrix has non-integral entries")
        return [[a.numerator for a in r] for r in self._data]

    # -------------------------------------------------------------------------
    # 비교/표현
    # -------------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.rows, self.cols, self._data)))
        return self._hash

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(a) for a in r) for r in self._data)
        return f"RationalMatrix({self.rows}x{self.cols}: [{body}])"
