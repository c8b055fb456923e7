"""Exact arithmetic substrate: rationals, univariate polynomials over Q,
rational functions, and exact dense linear solving.

Every value is immutable and every operation is exact; floats never appear.
Scalars are `fractions.Fraction`, polynomials are dense coefficient tuples
(ascending degree, trailing zeros trimmed), and rational functions are
reduced fractions of polynomials with a monic denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DimensionMismatchError

Rational = Fraction

#: Degree of the zero polynomial.  Deliberately not an integer.
NEG_INFINITY = float("-inf")

Scalar = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class Poly:
    """Dense univariate polynomial in t with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def const(c: Scalar) -> "Poly":
        return Poly([c])

    @staticmethod
    def t(power: int = 1) -> "Poly":
        return Poly([0] * power + [1])

    @property
    def degree(self):
        """Degree, or NEG_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other) -> "Poly":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        other = _coerce_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self) -> "Poly":
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:])

    def compose(self, inner: "Poly") -> "Poly":
        """Evaluate self at another polynomial (Horner)."""
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.const(c)
        return acc

    def shifted_coeffs(self, b: Scalar) -> tuple[Fraction, ...]:
        """Coefficients a_k with self = sum a_k (t+b)^k."""
        return self.compose(Poly([-_as_fraction(b), 1])).coeffs

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * _as_fraction(x) + c
        return acc

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                term = str(c)
            else:
                var = "t" if k == 1 else f"t^{k}"
                if c == 1:
                    term = var
                elif c == -1:
                    term = f"-{var}"
                else:
                    term = f"{c}*{var}"
            parts.append(term)
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


def _coerce_poly(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    return NotImplemented


POLY_ZERO = Poly()
POLY_ONE = Poly.const(1)
POLY_T = Poly.t()


def poly_divmod(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    """Exact quotient and remainder of univariate division."""
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(num.coeffs) - len(den.coeffs) + 1, 0)
    rem = list(num.coeffs)
    dlead = den.leading()
    dlen = len(den.coeffs)
    while len(rem) >= dlen:
        c = rem[-1] / dlead
        k = len(rem) - dlen
        q[k] = c
        for i, dc in enumerate(den.coeffs):
            rem[k + i] -= c * dc
        while rem and rem[-1] == 0:
            rem.pop()
    return Poly(q), Poly(rem)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (Euclid over Q)."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero():
        return a
    return Poly([c / a.leading() for c in a.coeffs])


def poly_exact_div(num: Poly, den: Poly) -> Poly:
    q, r = poly_divmod(num, den)
    if not r.is_zero():
        raise ValueError(f"{num} is not divisible by {den}")
    return q


class RatFunc:
    """Reduced fraction num/den of polynomials; den is monic and nonzero."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly = POLY_ONE):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = POLY_ZERO, POLY_ONE
        else:
            g = poly_gcd(num, den)
            if g.degree != 0 or g.leading() != 1:
                num = poly_exact_div(num, g)
                den = poly_exact_div(den, g)
            lead = den.leading()
            if lead != 1:
                num = Poly([c / lead for c in num.coeffs])
                den = Poly([c / lead for c in den.coeffs])
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def from_poly(p: Poly) -> "RatFunc":
        return RatFunc(p, POLY_ONE)

    @staticmethod
    def const(c: Scalar) -> "RatFunc":
        return RatFunc(Poly.const(c), POLY_ONE)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == POLY_ONE

    def __add__(self, other) -> "RatFunc":
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = _coerce_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return _coerce_ratfunc(other) / self

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = _coerce_ratfunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def derivative(self) -> "RatFunc":
        # quotient rule; the constructor re-reduces
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"


def _coerce_ratfunc(x):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc.from_poly(x)
    if isinstance(x, (int, Fraction)):
        return RatFunc.const(x)
    return NotImplemented


@dataclass(frozen=True)
class QMatrix:
    """Rectangular matrix of Fractions, stored row-major."""

    entries: tuple[tuple[Fraction, ...], ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[Scalar]]) -> "QMatrix":
        tup = tuple(tuple(_as_fraction(x) for x in row) for row in rows)
        if tup and any(len(r) != len(tup[0]) for r in tup):
            raise DimensionMismatchError("ragged rows")
        return QMatrix(tup)

    @staticmethod
    def identity(n: int) -> "QMatrix":
        return QMatrix(tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
        ))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def mat_vec(self, v: Sequence[Scalar]) -> list:
        if len(v) != self.cols:
            raise DimensionMismatchError(f"matrix has {self.cols} columns, vector has {len(v)}")
        # generic over the entry type of v (Fraction, Poly, RatFunc)
        return [sum((a * x for a, x in zip(row, v) if a != 0), start=0 * sum_start(v))
                for row in self.entries]

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows) for j in range(i)
        )


def sum_start(v):
    """A zero of the same ring as the elements of v (Fraction if empty)."""
    for x in v:
        return x
    return Fraction(0)


@dataclass(frozen=True)
class LinearSolution:
    """Outcome of an exact linear solve A x = b.

    `particular` is one solution (None when inconsistent) and `nullspace`
    is a basis of solutions of A x = 0, so the full solution set is
    particular + span(nullspace).
    """

    particular: tuple[Fraction, ...] | None
    nullspace: tuple[tuple[Fraction, ...], ...]

    @property
    def consistent(self) -> bool:
        return self.particular is not None

    @property
    def unique(self) -> bool:
        return self.particular is not None and not self.nullspace


def linsolve(a: Sequence[Sequence[Scalar]], b: Sequence[Scalar]) -> LinearSolution:
    """Solve A x = b exactly by Gaussian elimination over Q.

    Returns a particular solution (free variables set to zero) together
    with a nullspace basis, or reports inconsistency.
    """
    m = [[_as_fraction(x) for x in row] for row in a]
    rhs = [_as_fraction(x) for x in b]
    nrows = len(m)
    if len(rhs) != nrows:
        raise DimensionMismatchError(f"{nrows} rows but {len(rhs)} right-hand entries")
    ncols = len(m[0]) if m else 0
    if any(len(row) != ncols for row in m):
        raise DimensionMismatchError("ragged matrix")

    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        rhs[r], rhs[pivot_row] = rhs[pivot_row], rhs[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        rhs[r] *= inv
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
                rhs[i] -= f * rhs[r]
        pivots.append(c)
        r += 1
        if r == nrows:
            break

    for i in range(r, nrows):
        if rhs[i] != 0:
            return LinearSolution(None, ())

    free = [c for c in range(ncols) if c not in pivots]
    particular = [Fraction(0)] * ncols
    for row, c in enumerate(pivots):
        particular[c] = rhs[row]

    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, c in enumerate(pivots):
            vec[c] = -m[row][f]
        basis.append(tuple(vec))
    return LinearSolution(tuple(particular), tuple(basis))


def invert_matrix(mat: QMatrix) -> QMatrix:
    """Exact inverse of a square matrix; raises on singular input."""
    n = mat.rows
    if n != mat.cols:
        raise DimensionMismatchError("only square matrices can be inverted")
    cols = []
    for j in range(n):
        e = [Fraction(1 if i == j else 0) for i in range(n)]
        sol = linsolve(mat.entries, e)
        if not sol.unique:
            raise ValueError("matrix is singular")
        cols.append(sol.particular)
    return QMatrix(tuple(tuple(cols[j][i] for j in range(n)) for i in range(n)))


def matrix_rank(rows: Sequence[Sequence[Scalar]]) -> int:
    """Rank over Q, by elimination."""
    m = [[_as_fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    rank = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(rank, nrows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[rank], m[pivot_row] = m[pivot_row], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank
