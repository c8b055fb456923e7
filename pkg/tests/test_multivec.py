import random
from fractions import Fraction

import pytest

from rinehart.errors import ContextMismatchError, DimensionMismatchError
from rinehart.exactalg import Poly, RatFunc
from rinehart.multivec import (
    Multivector,
    POLY_RING,
    RATFUNC_RING,
    contract_covector,
    lambda_sharp,
    pair_covector,
    pair_two_form,
    sort_with_sign,
    wedge,
)

H, EP, EM = 0, 1, 2


def mv(degree, items, dim=3, ring=POLY_RING):
    return Multivector.build(dim, degree, items, ring)


def rand_mv(rng, dim, degree, ring=POLY_RING, max_deg=2):
    items = []
    for _ in range(rng.randint(1, 3)):
        idx = tuple(rng.sample(range(dim), degree))
        coeff = Poly([Fraction(rng.randint(-3, 3)) for _ in range(max_deg + 1)])
        items.append((idx, coeff))
    return Multivector.build(dim, degree, items, ring)


class TestSorting:
    def test_parity(self):
        assert sort_with_sign((0, 1, 2)) == ((0, 1, 2), 1)
        assert sort_with_sign((1, 0, 2)) == ((0, 1, 2), -1)
        assert sort_with_sign((2, 0, 1)) == ((0, 1, 2), 1)

    def test_repeat_kills(self):
        assert sort_with_sign((1, 1))[1] == 0


class TestBuildAndArithmetic:
    def test_sign_normalized_at_insertion(self):
        a = mv(2, [((EP, H), 1)])
        b = mv(2, [((H, EP), -1)])
        assert a == b

    def test_zero_coefficients_dropped(self):
        a = mv(1, [((H,), 0)])
        assert a.is_zero()
        assert a.terms == {}

    def test_degree_zero_keyed_by_empty_tuple(self):
        s = Multivector.scalar(3, Poly.t())
        assert list(s.terms) == [()]

    def test_add_cancels(self):
        a = mv(1, [((H,), Poly.t())])
        b = mv(1, [((H,), Poly([0, -1]))])
        assert (a + b).is_zero()

    def test_dim_mismatch(self):
        with pytest.raises(ContextMismatchError):
            mv(1, [((H,), 1)], dim=3) + mv(1, [((H,), 1)], dim=4)

    def test_ring_promotion_on_add(self):
        a = mv(1, [((H,), 1)], ring=POLY_RING)
        b = mv(1, [((EP,), RatFunc(Poly.const(1), Poly.t()))], ring=RATFUNC_RING)
        out = a + b
        assert out.ring is RATFUNC_RING
        assert out.coeff((H,)) == RatFunc.const(1)

    def test_scale_by_ratfunc_promotes(self):
        a = mv(1, [((H,), 1)], ring=POLY_RING)
        out = a.scale(RatFunc(Poly.const(1), Poly.t()))
        assert out.ring is RATFUNC_RING


class TestWedge:
    def test_basis_pair(self):
        h = Multivector.basis(3, H)
        ep = Multivector.basis(3, EP)
        assert wedge(h, ep) == mv(2, [((H, EP), 1)])

    def test_anticommute(self):
        h = Multivector.basis(3, H)
        ep = Multivector.basis(3, EP)
        assert wedge(ep, h) == -wedge(h, ep)

    def test_bilinear_expansion(self):
        th = mv(1, [((H,), Poly.t())])
        v = mv(1, [((EP,), Poly.t()), ((EM,), 1)])
        out = wedge(th, v)
        assert out == mv(2, [((H, EP), Poly([0, 0, 1])), ((H, EM), Poly.t())])

    def test_graded_commutativity(self):
        rng = random.Random(3)
        for _ in range(30):
            p = rng.randint(0, 2)
            q = rng.randint(0, 2)
            u = rand_mv(rng, 4, p)
            v = rand_mv(rng, 4, q)
            sign = (-1) ** (p * q)
            rhs = wedge(v, u)
            assert wedge(u, v) == (rhs if sign == 1 else -rhs)

    def test_associativity(self):
        rng = random.Random(4)
        for _ in range(20):
            u = rand_mv(rng, 4, rng.randint(0, 2))
            v = rand_mv(rng, 4, rng.randint(0, 1))
            w = rand_mv(rng, 4, rng.randint(0, 1))
            assert wedge(wedge(u, v), w) == wedge(u, wedge(v, w))

    def test_repeated_factor_vanishes(self):
        h = Multivector.basis(3, H)
        assert wedge(h, h).is_zero()


class TestContractions:
    def test_lambda_sharp_killing_example(self):
        lam = mv(2, [((H, EP), 1)])
        phi = [Poly.const(2), Poly(), Poly()]  # kappa(H, .) on sl2
        out = lambda_sharp(lam, phi)
        assert out == mv(1, [((EP,), 2)])

    def test_lambda_sharp_zero_cases(self):
        lam = Multivector.zero(3, 2)
        assert lambda_sharp(lam, [Poly.const(1)] * 3).is_zero()
        lam = mv(2, [((H, EP), 1)])
        assert lambda_sharp(lam, [Poly()] * 3).is_zero()

    def test_lambda_sharp_degree_guard(self):
        with pytest.raises(DimensionMismatchError):
            lambda_sharp(Multivector.basis(3, H), [Poly()] * 3)

    def test_contract_trivector(self):
        t = mv(3, [((H, EP, EM), 1)])
        phi = [Poly(), Poly.const(1), Poly()]  # dual to E+
        out = contract_covector(t, phi)
        # phi ⌟ H^E+^E- = -H^E- since E+ sits in slot 2
        assert out == mv(2, [((H, EM), -1)])

    def test_pairings(self):
        x = mv(1, [((H,), Poly.t()), ((EM,), 3)])
        phi = [Poly.const(1), Poly(), Poly.t()]
        assert pair_covector(phi, x) == Poly([0, 4])
        lam = mv(2, [((H, EP), 1), ((EP, EM), Poly.t())])
        psi = [Poly.const(1), Poly.const(2), Poly()]
        # <lam, phi ∧ psi> = 1*(phi_H psi_+ - phi_+ psi_H) + t*(phi_+ psi_- - phi_- psi_+)
        expected = Poly.const(1) * (Poly.const(1) * 2 - Poly() * 1) + \
            Poly.t() * (Poly() * Poly() - Poly.t() * 2)
        assert pair_two_form(lam, phi, psi) == expected
