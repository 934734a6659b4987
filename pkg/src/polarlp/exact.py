"""Exact scalars and the small dense linear algebra the solvers run on.

Every number in this package is an arbitrary-precision rational
(`fractions.Fraction`, re-exported as `Rational`): stored reduced, with a
positive denominator, so equality tests are exact and no tolerance appears
anywhere. `ExtendedRational` adds the two infinities needed for optimal
values of infeasible/unbounded programs and for support/radial functions,
with the conventions 1/inf = 0 and 1/0 = inf; the indeterminate forms
inf - inf and 0 * inf raise instead of producing a sentinel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Union

from .errors import DimensionMismatch, IndeterminateForm

Rational = Fraction

RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, string ('-7/2') or Fraction to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


_FINITE, _PLUS, _MINUS = 0, 1, -1


@dataclass(frozen=True)
class ExtendedRational:
    """A Fraction, +infinity, or -infinity.

    Arithmetic follows the usual order-field rules extended by
    inf + finite = inf and sign-propagating multiplication. The two
    indeterminate forms (inf - inf, 0 * inf) raise IndeterminateForm:
    they never occur in a correct duality computation, so reaching one
    means the caller is buggy. `reciprocal` applies the conventions
    1/inf = 0 and 1/0 = +inf used for support/radial pairings.
    """

    kind: int
    finite: Fraction | None

    @staticmethod
    def of(value: RationalLike | "ExtendedRational") -> "ExtendedRational":
        if isinstance(value, ExtendedRational):
            return value
        return ExtendedRational(_FINITE, as_rational(value))

    @property
    def is_finite(self) -> bool:
        return self.kind == _FINITE

    @property
    def is_pos_inf(self) -> bool:
        return self.kind == _PLUS

    @property
    def is_neg_inf(self) -> bool:
        return self.kind == _MINUS

    def finite_value(self) -> Fraction:
        if self.kind != _FINITE:
            raise IndeterminateForm(f"{self} is not finite")
        assert self.finite is not None
        return self.finite

    def __neg__(self) -> "ExtendedRational":
        if self.kind == _FINITE:
            return ExtendedRational(_FINITE, -self.finite)
        return ExtendedRational(-self.kind, None)

    def __add__(self, other) -> "ExtendedRational":
        other = ExtendedRational.of(other)
        if self.kind == _FINITE and other.kind == _FINITE:
            return ExtendedRational(_FINITE, self.finite + other.finite)
        if self.kind == _FINITE:
            return other
        if other.kind == _FINITE:
            return self
        if self.kind != other.kind:
            raise IndeterminateForm("inf - inf")
        return self

    __radd__ = __add__

    def __sub__(self, other) -> "ExtendedRational":
        return self + (-ExtendedRational.of(other))

    def __rsub__(self, other) -> "ExtendedRational":
        return ExtendedRational.of(other) + (-self)

    def __mul__(self, other) -> "ExtendedRational":
        other = ExtendedRational.of(other)
        if self.kind == _FINITE and other.kind == _FINITE:
            return ExtendedRational(_FINITE, self.finite * other.finite)
        finite, inf = (self, other) if self.kind == _FINITE else (other, self)
        if inf.kind != _FINITE and finite.kind != _FINITE:
            return ExtendedRational(inf.kind * finite.kind, None)
        if finite.finite == 0:
            raise IndeterminateForm("0 * inf")
        sign = 1 if finite.finite > 0 else -1
        return ExtendedRational(inf.kind * sign, None)

    __rmul__ = __mul__

    def reciprocal(self) -> "ExtendedRational":
        """1/x under the conventions 1/inf = 0, 1/0 = +inf.

        Defined for the nonnegative range these conventions belong to;
        a negative or -inf argument raises.
        """
        if self.kind == _PLUS:
            return ExtendedRational(_FINITE, Fraction(0))
        if self.kind == _MINUS:
            raise IndeterminateForm("1/(-inf) has no convention here")
        if self.finite == 0:
            return ExtendedRational(_PLUS, None)
        if self.finite < 0:
            raise IndeterminateForm("reciprocal convention is for nonnegative values")
        return ExtendedRational(_FINITE, 1 / self.finite)

    def __lt__(self, other) -> bool:
        # kind encodes -inf < finite < +inf as -1 < 0 < +1
        other = ExtendedRational.of(other)
        if self.kind != other.kind:
            return self.kind < other.kind
        return self.kind == _FINITE and self.finite < other.finite

    def __le__(self, other) -> bool:
        other = ExtendedRational.of(other)
        return self == other or self < other

    def __gt__(self, other) -> bool:
        return ExtendedRational.of(other) < self

    def __ge__(self, other) -> bool:
        return ExtendedRational.of(other) <= self

    def __eq__(self, other) -> bool:
        if isinstance(other, (Fraction, int)):
            other = ExtendedRational.of(other)
        if not isinstance(other, ExtendedRational):
            return NotImplemented
        return self.kind == other.kind and self.finite == other.finite

    def __hash__(self) -> int:
        return hash((self.kind, self.finite))

    def __str__(self) -> str:
        if self.kind == _PLUS:
            return "+inf"
        if self.kind == _MINUS:
            return "-inf"
        return str(self.finite)

    def __repr__(self) -> str:
        return f"ExtendedRational({self})"


POS_INF = ExtendedRational(_PLUS, None)
NEG_INF = ExtendedRational(_MINUS, None)


def finite(value: RationalLike) -> ExtendedRational:
    return ExtendedRational(_FINITE, as_rational(value))


@dataclass(frozen=True)
class Vector:
    """Immutable dense vector of exact rationals."""

    entries: tuple[Fraction, ...]

    def __init__(self, entries: Iterable[RationalLike]):
        object.__setattr__(self, "entries", tuple(as_rational(e) for e in entries))

    @staticmethod
    def of(*values: RationalLike) -> "Vector":
        return Vector(values)

    @staticmethod
    def zero(dim: int) -> "Vector":
        return Vector([Fraction(0)] * dim)

    @staticmethod
    def unit(dim: int, j: int) -> "Vector":
        if not 0 <= j < dim:
            raise DimensionMismatch(f"unit index {j} out of range for dim {dim}")
        return Vector([Fraction(1) if k == j else Fraction(0) for k in range(dim)])

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __getitem__(self, j: int) -> Fraction:
        return self.entries[j]

    def __add__(self, other: "Vector") -> "Vector":
        _require_same_dim(self, other)
        return Vector(a + b for a, b in zip(self.entries, other.entries))

    def __sub__(self, other: "Vector") -> "Vector":
        _require_same_dim(self, other)
        return Vector(a - b for a, b in zip(self.entries, other.entries))

    def __neg__(self) -> "Vector":
        return Vector(-a for a in self.entries)

    def scale(self, factor: RationalLike) -> "Vector":
        q = as_rational(factor)
        return Vector(q * a for a in self.entries)

    def __rmul__(self, factor: RationalLike) -> "Vector":
        return self.scale(factor)

    def __str__(self) -> str:
        return " ".join(str(e) for e in self.entries)


def _require_same_dim(u: Vector, v: Vector) -> None:
    if u.dim != v.dim:
        raise DimensionMismatch(f"vector dims differ: {u.dim} vs {v.dim}")


def dot(u: Vector, v: Vector) -> Fraction:
    """Exact inner product of two vectors of equal dimension."""
    _require_same_dim(u, v)
    total = Fraction(0)
    for a, b in zip(u.entries, v.entries):
        total += a * b
    return total


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix, stored as a tuple of row vectors.

    The column count is stored explicitly so zero-row matrices keep a
    well-defined shape.
    """

    rows: tuple[Vector, ...]
    n: int

    def __init__(self, rows: Iterable[Iterable[RationalLike]], n: int | None = None):
        vecs = tuple(r if isinstance(r, Vector) else Vector(r) for r in rows)
        if n is None:
            if not vecs:
                raise DimensionMismatch("column count required for a matrix with no rows")
            n = vecs[0].dim
        for i, r in enumerate(vecs):
            if r.dim != n:
                raise DimensionMismatch(f"row {i} has dim {r.dim}, expected {n}")
        object.__setattr__(self, "rows", vecs)
        object.__setattr__(self, "n", n)

    @property
    def m(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def column(self, j: int) -> Vector:
        return Vector(r[j] for r in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.n)], n=self.m)

    def apply(self, x: Vector) -> Vector:
        """A x, a vector of dimension m."""
        if x.dim != self.n:
            raise DimensionMismatch(f"matrix is m x {self.n}, vector has dim {x.dim}")
        return Vector(dot(r, x) for r in self.rows)

    def __iter__(self) -> Iterator[Vector]:
        return iter(self.rows)


def transpose_apply(A: Matrix, y: Vector) -> Vector:
    """A^T y computed as the weighted row sum  sum_i y_i a_i."""
    if y.dim != A.m:
        raise DimensionMismatch(f"matrix has {A.m} rows, weight vector dim {y.dim}")
    total = [Fraction(0)] * A.n
    for weight, row in zip(y.entries, A.rows):
        if weight == 0:
            continue
        for j, a in enumerate(row.entries):
            total[j] += weight * a
    return Vector(total)
