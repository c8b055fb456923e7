"""The Schouten (Gerstenhaber) bracket on multivectors over a crossed
product, the Killing-induced degree-raising operator, and graded
degree-+1 operators with their square check.

The bracket is defined by three axioms: it extends the crossed-product
bracket on degree 1, acts on ring elements through the anchor
([x, f] = theta(x) f), and is a graded derivation of the wedge product.
Two independent recursive expansions are provided; their agreement on
random inputs is part of the test suite, since a single expansion order
cannot catch its own sign errors.

Sign conventions are pinned by three calibration identities (exercised in
the tests): the degree-1 bracket lifts [H, E+] = E+, the contraction
identity [E+^E-, t] = -t^2 E- + E+, and [tau, t] = D t for the canonical
bivector tau.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .action import CrossedProduct
from .errors import DimensionMismatchError
from .exactalg import POLY_T, Poly
from .liealg import killing_sharp
from .multivec import Multivector, join_ring, wedge


def _mono(dim, indices, coeff, ring) -> Multivector:
    return Multivector.build(dim, len(indices), [(indices, coeff)], ring)


def _bracket_with_ring_element(cp, indices, coeff, g, ring) -> Multivector:
    """[coeff * X_indices, g] for a ring element g:
    coeff * sum_a (-1)^(k-a) theta(X_a)(g) X_(indices minus a)."""
    theta = cp.theta_coeffs(ring)
    k = len(indices)
    items = []
    g_prime = g.derivative()
    for pos, i in enumerate(indices):
        val = theta[i] * g_prime
        if val.is_zero():
            continue
        sign = 1 if (k - 1 - pos) % 2 == 0 else -1
        items.append((indices[:pos] + indices[pos + 1:], coeff * val * sign))
    return Multivector.build(cp.dim, max(k - 1, 0), items, ring)


def schouten(cp: CrossedProduct, u: Multivector, v: Multivector) -> Multivector:
    """Schouten bracket, expanding the second argument by the graded
    Leibniz rule."""
    return _schouten_impl(cp, u, v, split_first=False)


def schouten_alt(cp: CrossedProduct, u: Multivector, v: Multivector) -> Multivector:
    """Independent expansion of the same bracket, splitting the first
    argument; serves as an in-repo oracle for schouten."""
    return _schouten_impl(cp, u, v, split_first=True)


def _schouten_impl(cp, u, v, split_first: bool) -> Multivector:
    ring = join_ring(join_ring(u.ring, v.ring), cp.ring)
    a, b = u.promote(ring), v.promote(ring)
    if a.dim != cp.dim or b.dim != cp.dim:
        raise DimensionMismatchError("multivector dimension does not match the algebra")
    out = Multivector.zero(cp.dim, max(a.degree + b.degree - 1, 0), ring)
    for ia, ca in a.terms.items():
        for ib, cb in b.terms.items():
            out = out + _bracket_mono(cp, ia, ca, ib, cb, ring, split_first)
    return out


def _bracket_mono(cp, i_left, c_left, i_right, c_right, ring, split_first) -> Multivector:
    dim = cp.dim
    p, q = len(i_left), len(i_right)

    if p == 0 and q == 0:
        return Multivector.zero(dim, 0, ring)

    if q == 0:
        # [f u, g] = f [u, g]
        return _bracket_with_ring_element(cp, i_left, c_left, c_right, ring)

    if p == 0:
        # graded antisymmetry: [f, w] = (-1)^{|w|} [w, f]
        res = _bracket_mono(cp, i_right, c_right, i_left, c_left, ring, split_first)
        return res if q % 2 == 0 else -res

    if p == 1 and q == 1:
        return cp.bracket(_mono(dim, i_left, c_left, ring),
                          _mono(dim, i_right, c_right, ring)).promote(ring)

    if split_first and p >= 2:
        # [x ^ y, z] = x ^ [y, z] + (-1)^{|y| (|z|-1)} [x, z] ^ y
        head = _mono(dim, i_left[:1], c_left, ring)
        tail_idx = i_left[1:]
        tail = _mono(dim, tail_idx, ring.one, ring)
        first = wedge(head, _bracket_mono(cp, tail_idx, ring.one, i_right, c_right,
                                          ring, split_first))
        inner = _bracket_mono(cp, i_left[:1], c_left, i_right, c_right, ring, split_first)
        second = wedge(inner, tail)
        if ((p - 1) * (q - 1)) % 2 == 1:
            second = -second
        return first + second

    if q >= 2:
        # [x, y ^ z] = [x, y] ^ z + (-1)^{(|x|-1) |y|} y ^ [x, z]
        head_idx = i_right[:1]
        tail_idx = i_right[1:]
        first = wedge(
            _bracket_mono(cp, i_left, c_left, head_idx, c_right, ring, split_first),
            _mono(dim, tail_idx, ring.one, ring))
        second = wedge(
            _mono(dim, head_idx, c_right, ring),
            _bracket_mono(cp, i_left, c_left, tail_idx, ring.one, ring, split_first))
        if (p - 1) % 2 == 1:
            second = -second
        return first + second

    # p >= 2 and q <= 1: swap through graded antisymmetry
    res = _bracket_mono(cp, i_right, c_right, i_left, c_left, ring, split_first)
    if ((p - 1) * (q - 1)) % 2 == 0:
        return -res
    return res


def dtheta_sharp(cp: CrossedProduct, f: Poly) -> Multivector:
    """The element pairing to theta(X) f under the Killing form:
    kappa((d f)^#, X) = theta_X * f' for every X."""
    ring = cp.ring
    f_ring = ring.convert(f)
    theta = cp.theta_coeffs(ring)
    functional = [th * f_ring.derivative() for th in theta]
    coeffs = killing_sharp(cp.algebra, functional)
    return Multivector.from_vector(coeffs, ring)


def D_operator(cp: CrossedProduct, u: Multivector) -> Multivector:
    """Term-wise degree-raising operator: f X_1^...^X_k maps to
    f' (d t)^# ^ X_1^...^X_k; kills constant multivectors of g."""
    dt = dtheta_sharp(cp, POLY_T)
    ring = join_ring(cp.ring, u.ring)
    uu = u.promote(ring)
    out = Multivector.zero(cp.dim, uu.degree + 1, ring)
    for idx, coeff in uu.terms.items():
        df = coeff.derivative()
        if df.is_zero():
            continue
        out = out + wedge(dt.scale(df), _mono(cp.dim, idx, ring.one, ring))
    return out


@dataclass(frozen=True)
class GradedOperator:
    """Degree-+1 operator determined by its images on t and on the basis
    of g, extended everywhere by the graded Leibniz rule.

    When (lambda_part, epsilon) is set the operator is the assembled
    differential [lambda_part, .] + epsilon * D and is evaluated directly
    from that decomposition.
    """

    image_of_t: Multivector
    image_of_basis: tuple[Multivector, ...]
    lambda_part: Optional[Multivector] = None
    epsilon: Optional[Fraction] = None

    @staticmethod
    def from_images(image_of_t: Multivector,
                    image_of_basis: Sequence[Multivector]) -> "GradedOperator":
        return GradedOperator(image_of_t, tuple(image_of_basis))

    @staticmethod
    def from_rmatrix(cp: CrossedProduct, lam: Multivector,
                     epsilon: Fraction) -> "GradedOperator":
        t_elt = Multivector.scalar(cp.dim, POLY_T, cp.ring)
        img_t = schouten(cp, lam, t_elt) + D_operator(cp, t_elt).scale(Fraction(epsilon))
        imgs = []
        for i in range(cp.dim):
            x = cp.basis_element(i)
            imgs.append(schouten(cp, lam, x))  # D kills constant basis vectors
        return GradedOperator(img_t, tuple(imgs), lam, Fraction(epsilon))


def apply_graded(cp: CrossedProduct, op: GradedOperator, u: Multivector) -> Multivector:
    """Evaluate a graded operator by the Leibniz rule, or directly from
    its bracket-plus-D decomposition when one is attached."""
    if op.lambda_part is not None:
        out = schouten(cp, op.lambda_part, u)
        if op.epsilon:
            out = out + D_operator(cp, u).scale(op.epsilon)
        return out
    ring = join_ring(cp.ring, u.ring)
    uu = u.promote(ring)
    out = Multivector.zero(cp.dim, uu.degree + 1, ring)
    for idx, coeff in uu.terms.items():
        df = coeff.derivative()
        if not df.is_zero():
            out = out + wedge(op.image_of_t.scale(df), _mono(cp.dim, idx, ring.one, ring))
        for pos, i in enumerate(idx):
            img = op.image_of_basis[i]
            if img.is_zero():
                continue
            prefix = _mono(cp.dim, idx[:pos], coeff, ring)
            suffix = _mono(cp.dim, idx[pos + 1:], ring.one, ring)
            term = wedge(prefix, wedge(img, suffix))
            if pos % 2 == 1:
                term = -term
            out = out + term
    return out


@dataclass(frozen=True)
class SquareCheck:
    """Outcome of evaluating op∘op on the generators t and X_i."""

    generator: Optional[str]
    residual: Optional[Multivector]

    @property
    def is_zero(self) -> bool:
        return self.generator is None


def square_check(op: GradedOperator, cp: CrossedProduct) -> SquareCheck:
    """op squares to zero iff it vanishes on t and on every basis vector;
    the Leibniz rule propagates generator-vanishing everywhere."""
    t_elt = Multivector.scalar(cp.dim, POLY_T, cp.ring)
    residual = apply_graded(cp, op, apply_graded(cp, op, t_elt))
    if not residual.is_zero():
        return SquareCheck("t", residual)
    for i in range(cp.dim):
        x = cp.basis_element(i)
        residual = apply_graded(cp, op, apply_graded(cp, op, x))
        if not residual.is_zero():
            return SquareCheck(cp.algebra.basis_names[i], residual)
    return SquareCheck(None, None)
