"""Shared construction helpers for the test suite."""

import random
from fractions import Fraction

from rinehart.exactalg import POLY_ONE, POLY_T, Poly
from rinehart.liealg import LieAlgebra, direct_sum, make_abelian, make_sl2
from rinehart.multivec import Multivector, POLY_RING
from rinehart.action import CrossedProduct, validate_action
from rinehart.bialgebra import SplitCrossedProduct, family_residual_coefficient
from rinehart.exactalg import linsolve


def rand_fraction(rng, lo=-4, hi=4, den=3):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def rand_poly(rng, max_deg=2, lo=-3, hi=3):
    return Poly([Fraction(rng.randint(lo, hi)) for _ in range(max_deg + 1)])


def rand_multivector(rng, dim, degree, coeff_deg=2, nterms=2):
    items = []
    for _ in range(nterms):
        idx = tuple(rng.sample(range(dim), degree))
        items.append((idx, rand_poly(rng, coeff_deg)))
    return Multivector.build(dim, degree, items, POLY_RING)


def sl2sl2_split():
    g = direct_sum(make_sl2(), make_sl2())
    a = validate_action(g, (POLY_T, Poly.t(2), POLY_ONE, Poly(), Poly(), Poly()))
    return SplitCrossedProduct(CrossedProduct(a), (0, 1, 2), (3, 4, 5))


def random_valid_actions(rng):
    """A spread of randomly parameterized valid actions of all types."""
    sl2 = make_sl2()
    c = rand_fraction(rng, 1, 5)
    a = rand_fraction(rng)
    actions = [
        # standard full-rank action
        validate_action(sl2, (POLY_T, Poly.t(2), POLY_ONE)),
        # rescaled by the diagonal automorphism
        validate_action(sl2, (POLY_T, c * Poly.t(2), Poly.const(1 / c))),
        # conjugated by exp of an inner nilpotent derivation
        validate_action(sl2, (Poly([0, 1, -a]), Poly.t(2), Poly([1, -2 * a, a * a]))),
    ]
    # rank-1 action on an abelian algebra
    lam2 = rand_fraction(rng, 1, 4)
    h = Poly([0] * rng.randint(1, 3) + [1])
    actions.append(validate_action(make_abelian(("x", "y")), (h, lam2 * h)))
    # rank-2 action with a shifted power
    m = rng.choice((0, 2, 3))
    b = rand_fraction(rng, -2, 2)
    g2 = LieAlgebra(("x0", "y0"), {(0, 1): {0: Fraction(-(m - 1))}})
    shift = Poly([b, 1])
    actions.append(validate_action(g2, (shift ** m, shift)))
    return actions


def family_bivector(split, u, v, w, block=None):
    ih, iep, iem = block if block is not None else split.sl2
    return Multivector.build(
        split.dim, 2,
        [((ih, iep), u), ((iep, iem), v), ((ih, iem), w)],
        POLY_RING)


def solve_w_for_rmatrix(u, v, eps, w_degree=2):
    """Complete (u, v, eps) to a solution of the family condition; the
    condition is linear in w.  Returns None when no w of the requested
    degree exists."""
    base = family_residual_coefficient(u, v, Poly(), eps)
    target = Poly.const(-eps * eps * Fraction(1, 32)) - base
    columns = [family_residual_coefficient(u, v, Poly.t(k) if k else POLY_ONE, eps) - base
               for k in range(w_degree + 1)]
    width = max([len(c.coeffs) for c in columns] + [len(target.coeffs), 1])
    rows = [[col.coeff(d) for col in columns] for d in range(width)]
    sol = linsolve(rows, [target.coeff(d) for d in range(width)])
    if not sol.consistent:
        return None
    return Poly(sol.particular)
