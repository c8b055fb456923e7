"""Sparse multivectors: homogeneous elements of R ⊗ Λ^k g for R = Q[t]
or its fraction field.

A multivector of degree k maps strictly increasing basis-index k-tuples to
ring coefficients; degree-0 elements are bare ring elements keyed by the
empty tuple.  All permutation signs are normalized at insertion so that
equality is structural comparison of canonical forms.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .errors import ContextMismatchError, DimensionMismatchError
from .exactalg import Poly, RatFunc


class CoefficientRing:
    """One of the two coefficient rings, as a stateless singleton."""

    def __init__(self, name: str, is_field: bool):
        self.name = name
        self.is_field = is_field
        self.zero = RatFunc(Poly()) if is_field else Poly()
        self.one = RatFunc(Poly([1])) if is_field else Poly([1])

    def __repr__(self):
        return self.name

    def convert(self, x):
        if self.is_field:
            if isinstance(x, RatFunc):
                return x
            if isinstance(x, Poly):
                return RatFunc.from_poly(x)
            if isinstance(x, (int, Fraction)):
                return RatFunc.const(x)
        else:
            if isinstance(x, Poly):
                return x
            if isinstance(x, (int, Fraction)):
                return Poly.const(x)
            if isinstance(x, RatFunc) and x.is_polynomial():
                return x.num
        raise ContextMismatchError(f"cannot interpret {x!r} as an element of {self.name}")


POLY_RING = CoefficientRing("poly", is_field=False)
RATFUNC_RING = CoefficientRing("ratfunc", is_field=True)


def join_ring(a: CoefficientRing, b: CoefficientRing) -> CoefficientRing:
    """Smallest ring containing both; Poly promotes to RatFunc."""
    return RATFUNC_RING if (a.is_field or b.is_field) else POLY_RING


def sort_with_sign(indices: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Sort basis indices, returning the permutation parity.

    A repeated index yields sign 0 (the wedge vanishes).
    """
    idx = list(indices)
    sign = 1
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(idx, idx[1:]):
        if a == b:
            return tuple(idx), 0
    return tuple(idx), sign


class Multivector:
    """Immutable homogeneous multivector."""

    __slots__ = ("dim", "degree", "terms", "ring")

    def __init__(self, dim: int, degree: int, terms: dict, ring: CoefficientRing):
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", dict(terms))
        object.__setattr__(self, "ring", ring)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    @staticmethod
    def build(dim: int, degree: int,
              items: Iterable[tuple[Sequence[int], object]],
              ring: CoefficientRing) -> "Multivector":
        """Assemble from (indices, coefficient) pairs, normalizing signs."""
        acc: dict = {}
        for indices, coeff in items:
            if len(indices) != degree:
                raise DimensionMismatchError(
                    f"term of arity {len(indices)} in a degree-{degree} multivector")
            if any(i < 0 or i >= dim for i in indices):
                raise DimensionMismatchError(f"basis index out of range in {tuple(indices)}")
            key, sign = sort_with_sign(indices)
            if sign == 0:
                continue
            c = ring.convert(coeff)
            if sign < 0:
                c = -c
            if key in acc:
                acc[key] = acc[key] + c
            else:
                acc[key] = c
        return Multivector(dim, degree, {k: v for k, v in acc.items() if not v.is_zero()}, ring)

    @staticmethod
    def zero(dim: int, degree: int, ring: CoefficientRing = POLY_RING) -> "Multivector":
        return Multivector(dim, degree, {}, ring)

    @staticmethod
    def scalar(dim: int, value, ring: CoefficientRing = POLY_RING) -> "Multivector":
        return Multivector.build(dim, 0, [((), value)], ring)

    @staticmethod
    def basis(dim: int, index: int, ring: CoefficientRing = POLY_RING) -> "Multivector":
        return Multivector.build(dim, 1, [((index,), 1)], ring)

    @staticmethod
    def from_vector(coeffs: Sequence, ring: CoefficientRing = POLY_RING) -> "Multivector":
        """Degree-1 multivector with the given coefficient per basis index."""
        dim = len(coeffs)
        return Multivector.build(dim, 1, [((i,), c) for i, c in enumerate(coeffs)], ring)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, indices: Sequence[int]):
        key, sign = sort_with_sign(indices)
        if sign == 0:
            return self.ring.zero
        c = self.terms.get(key, self.ring.zero)
        return -c if sign < 0 else c

    def vector_coeffs(self) -> list:
        """Dense coefficient list; only meaningful for degree 1."""
        if self.degree != 1:
            raise DimensionMismatchError("vector_coeffs requires a degree-1 multivector")
        return [self.terms.get((i,), self.ring.zero) for i in range(self.dim)]

    def promote(self, ring: CoefficientRing) -> "Multivector":
        if ring is self.ring:
            return self
        return Multivector(self.dim, self.degree,
                           {k: ring.convert(v) for k, v in self.terms.items()}, ring)

    def map_coeffs(self, fn: Callable) -> "Multivector":
        out = {}
        for k, v in self.terms.items():
            w = fn(v)
            if not w.is_zero():
                out[k] = w
        return Multivector(self.dim, self.degree, out, self.ring)

    def __add__(self, other: "Multivector") -> "Multivector":
        if not isinstance(other, Multivector):
            return NotImplemented
        _check_compatible(self, other)
        if self.degree != other.degree:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise DimensionMismatchError(
                f"cannot add degree {self.degree} and degree {other.degree}")
        ring = join_ring(self.ring, other.ring)
        a, b = self.promote(ring), other.promote(ring)
        out = dict(a.terms)
        for k, v in b.terms.items():
            s = out.get(k, ring.zero) + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return Multivector(self.dim, self.degree, out, ring)

    def __neg__(self) -> "Multivector":
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def scale(self, factor) -> "Multivector":
        """Multiply every coefficient by a ring element or scalar."""
        if isinstance(factor, RatFunc) and not self.ring.is_field and not factor.is_polynomial():
            return self.promote(RATFUNC_RING).scale(factor)
        c = self.ring.convert(factor)
        return self.map_coeffs(lambda v: v * c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        if self.dim != other.dim:
            return False
        if self.is_zero() and other.is_zero():
            return True
        ring = join_ring(self.ring, other.ring)
        a, b = self.promote(ring), other.promote(ring)
        return a.degree == b.degree and a.terms == b.terms

    def __hash__(self):
        return hash((self.dim, self.degree, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Multivector(dim={self.dim}, degree={self.degree}, terms={self.terms!r})"

    def pretty(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key in sorted(self.terms):
            coeff = self.terms[key]
            label = "^".join(names[i] for i in key) if key else "1"
            parts.append(f"({coeff})*{label}" if key else f"({coeff})")
        return " + ".join(parts)


def _check_compatible(u: Multivector, v: Multivector):
    if u.dim != v.dim:
        raise ContextMismatchError(
            f"multivectors over different algebras (dim {u.dim} vs {v.dim})")


def wedge(u: Multivector, v: Multivector) -> Multivector:
    """Exterior product; graded commutative with Koszul signs."""
    _check_compatible(u, v)
    ring = join_ring(u.ring, v.ring)
    a, b = u.promote(ring), v.promote(ring)
    items = []
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            items.append((ka + kb, ca * cb))
    return Multivector.build(u.dim, u.degree + v.degree, items, ring)


def wedge_all(factors: Sequence[Multivector], dim: int,
              ring: CoefficientRing = POLY_RING) -> Multivector:
    out = Multivector.scalar(dim, 1, ring)
    for f in factors:
        out = wedge(out, f)
    return out


def contract_covector(u: Multivector, phi: Sequence) -> Multivector:
    """Interior product phi ⌟ u for a covector given by its values on the basis."""
    if len(phi) != u.dim:
        raise DimensionMismatchError("covector length does not match the algebra dimension")
    vals = [u.ring.convert(p) for p in phi]
    items = []
    for key, coeff in u.terms.items():
        for pos, idx in enumerate(key):
            if vals[idx].is_zero():
                continue
            rest = key[:pos] + key[pos + 1:]
            c = vals[idx] * coeff
            items.append((rest, c if pos % 2 == 0 else -c))
    return Multivector.build(u.dim, max(u.degree - 1, 0), items, u.ring)


def lambda_sharp(lam: Multivector, phi: Sequence) -> Multivector:
    """Contraction Λ^#(φ) = φ ⌟ Λ of a bivector with a covector."""
    if lam.degree != 2:
        raise DimensionMismatchError("lambda_sharp requires a degree-2 multivector")
    return contract_covector(lam, phi)


def pair_covector(phi: Sequence, u: Multivector):
    """<φ, u> = Σ φ_i u_i for a degree-1 multivector."""
    if u.degree != 1:
        raise DimensionMismatchError("pair_covector requires a degree-1 multivector")
    acc = u.ring.zero
    for (i,), c in u.terms.items():
        acc = acc + u.ring.convert(phi[i]) * c
    return acc


def pair_two_form(u: Multivector, phi: Sequence, psi: Sequence):
    """<u, φ∧ψ> = Σ c_ab (φ_a ψ_b − φ_b ψ_a) for a degree-2 multivector."""
    if u.degree != 2:
        raise DimensionMismatchError("pair_two_form requires a degree-2 multivector")
    conv = u.ring.convert
    acc = u.ring.zero
    for (a, b), c in u.terms.items():
        acc = acc + c * (conv(phi[a]) * conv(psi[b]) - conv(phi[b]) * conv(psi[a]))
    return acc
