"""Built-in regression suite: the library's canonical identities, each
checked exactly from first principles at every run.

Serves as the release gate behind the `selftest` command; every identity
must pass on a healthy build.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .exactalg import POLY_ONE, POLY_T, Poly
from .liealg import cartan_3form, direct_sum, killing, make_sl2
from .multivec import Multivector, POLY_RING
from .action import (
    ActionTag,
    CrossedProduct,
    classify,
    extended_realization,
    gamma_section,
    standard_action,
    validate_action,
)
from .schouten import D_operator, GradedOperator, schouten, square_check
from .bialgebra import (
    DybeProblem,
    SplitCrossedProduct,
    cocycle_check,
    decompose_dstar,
    dual_structures,
    dybe_residual,
    family_residual_coefficient,
    is_dynamical_rmatrix,
    kernel_cocycle_from_rmatrix,
    rmatrix_condition_sl2,
    standard_rmatrix,
    standard_split,
)

H, EP, EM = 0, 1, 2


def _sl2sl2_split() -> SplitCrossedProduct:
    g = direct_sum(make_sl2(), make_sl2())
    a = validate_action(g, (POLY_T, Poly.t(2), POLY_ONE, Poly(), Poly(), Poly()))
    return SplitCrossedProduct(CrossedProduct(a), (0, 1, 2), (3, 4, 5))


def _check_sl2_brackets() -> bool:
    g = make_sl2()
    e = lambda i: [Fraction(int(i == j)) for j in range(3)]
    return (g.bracket_vec(e(H), e(EP)) == e(EP)
            and g.bracket_vec(e(H), e(EM)) == [0, 0, -1]
            and g.bracket_vec(e(EP), e(EM)) == [-2, 0, 0])


def _check_killing_values() -> bool:
    kf = killing(make_sl2())
    return kf[H, H] == 2 and kf[EP, EM] == -4 and kf[EM, EP] == -4


def _check_cartan_trivector() -> bool:
    return cartan_3form(make_sl2()) == Multivector.build(
        3, 3, [((H, EP, EM), 4)], POLY_RING)


def _check_cartan_casimir() -> bool:
    cp = CrossedProduct(standard_action())
    omega = cartan_3form(make_sl2())
    return all(schouten(cp, omega, cp.basis_element(i)).is_zero() for i in range(3))


def _check_standard_classifies_type3() -> bool:
    at = classify(standard_action())
    return (at.tag is ActionTag.TYPE3
            and at.witness.x0 == (0, 0, 1)
            and at.witness.x1 == (1, 0, 0)
            and at.witness.x2 == (0, 1, 0))


def _d_of_t(cp):
    return D_operator(cp, Multivector.scalar(cp.dim, POLY_T, cp.ring))


def _check_d_of_t() -> bool:
    cp = CrossedProduct(standard_action())
    expected = Multivector.build(
        3, 1,
        [((H,), Poly([0, Fraction(1, 2)])),
         ((EP,), Fraction(-1, 4)),
         ((EM,), Poly([0, 0, Fraction(-1, 4)]))],
        POLY_RING)
    return _d_of_t(cp) == expected


def _check_d_kills_constants() -> bool:
    cp = CrossedProduct(standard_action())
    return all(D_operator(cp, cp.basis_element(i)).is_zero() for i in range(3))


def _check_d_squared() -> bool:
    cp = CrossedProduct(standard_action())
    t_elt = Multivector.scalar(3, POLY_T, POLY_RING)
    lhs = D_operator(cp, D_operator(cp, t_elt))
    rhs = schouten(cp, cartan_3form(make_sl2()), t_elt).scale(Fraction(1, 32))
    return lhs == rhs and not lhs.is_zero()


def _check_tau_generates_d() -> bool:
    split = standard_split()
    tau = standard_rmatrix(split)
    t_elt = Multivector.scalar(3, POLY_T, POLY_RING)
    return schouten(split.cp, tau, t_elt) == _d_of_t(split.cp)


def _check_tau_is_rmatrix() -> bool:
    split = standard_split()
    tau = standard_rmatrix(split)
    verdict = is_dynamical_rmatrix(DybeProblem(split, tau, Fraction(-1)))
    return verdict.ok and verdict.residual.is_zero()


def _check_kernel_cocycle() -> bool:
    split = standard_split()
    return cocycle_check(split.cp, kernel_cocycle_from_rmatrix(split))


def _check_two_roots() -> bool:
    v0, w0 = Fraction(3, 2), Fraction(-2)
    u, v, w = Poly(), Poly.const(v0), Poly([0, w0])
    return (rmatrix_condition_sl2(u, v, w, 4 * v0)
            and rmatrix_condition_sl2(u, v, w, -2 * w0 - 4 * v0)
            and not rmatrix_condition_sl2(u, v, w, 4 * v0 + 1))


def _check_a0_family() -> bool:
    a0, eps = Fraction(2, 3), Fraction(-5)
    u = Poly.const(a0)
    v = Poly([eps / 4, a0])
    w = Poly([0, -eps / 2, -a0])
    return (rmatrix_condition_sl2(u, v, w, eps)
            and family_residual_coefficient(u, v, w, eps)
            == Poly.const(-eps * eps * Fraction(1, 32)))


def _six_term_bivector(split, a0, eps):
    return Multivector.build(
        6, 2,
        [((0, 1), Poly.const(a0)),
         ((1, 2), Poly([eps / 4, a0])),
         ((0, 2), Poly([0, -eps / 2, -a0])),
         ((3, 4), Poly([1, 1])),
         ((4, 5), Poly.t(2)),
         ((3, 5), Poly([-1, 1]))],
        POLY_RING)


def _check_six_term_example() -> bool:
    split = _sl2sl2_split()
    lam = _six_term_bivector(split, Fraction(1), Fraction(3))
    return is_dynamical_rmatrix(DybeProblem(split, lam, Fraction(3))).ok


def _check_kernel_block_example() -> bool:
    split = _sl2sl2_split()
    lam = Multivector.build(
        6, 2,
        [((3, 4), Poly([1, 1])), ((4, 5), Poly.t(2)), ((3, 5), Poly([1, -1]))],
        POLY_RING)
    return is_dynamical_rmatrix(DybeProblem(split, lam, Fraction(0))).ok


def _check_extended_realization() -> bool:
    data = extended_realization(standard_action())
    cp = CrossedProduct(standard_action())
    a_elt = Multivector.build(3, 1, [((EP,), 1), ((H,), Poly([0, -1]))], POLY_RING)
    b_elt = Multivector.build(3, 1, [((H,), 1), ((EM,), Poly([0, -1]))], POLY_RING)
    return (data.delta == POLY_ONE
            and list(data.l_basis) == [a_elt, b_elt]
            and all(cp.theta_of(x).is_zero() for x in data.l_basis))


def _check_gamma_section() -> bool:
    gamma = gamma_section(standard_action())
    cp = CrossedProduct(standard_action())
    return gamma == Multivector.basis(3, EM, POLY_RING) and cp.theta_of(gamma) == POLY_ONE


def _check_dstar_round_trip() -> bool:
    split = standard_split()
    tau = standard_rmatrix(split)
    op = GradedOperator.from_rmatrix(split.cp, tau, Fraction(-1))
    explicit = GradedOperator.from_images(op.image_of_t, op.image_of_basis)
    if not square_check(explicit, split.cp).is_zero:
        return False
    out = decompose_dstar(split, explicit)
    return out.lam == tau and out.epsilon == -1


def _check_constant_quadruple_dual() -> bool:
    split = standard_split()
    lam = Multivector.build(
        3, 2, [((H, EP), 1), ((H, EM), 1)], POLY_RING)  # v^2 + uw = 1 = (4)^2/16
    if not dybe_residual(DybeProblem(split, lam, Fraction(4))).is_zero():
        return False
    dual = dual_structures(split.cp, lam, Fraction(4))
    return dual.is_crossed_product


def _check_rescaled_action_classifies() -> bool:
    g = make_sl2()
    a = validate_action(g, (POLY_T, Poly([0, 0, Fraction(5, 3)]),
                            Poly.const(Fraction(3, 5))))
    at = classify(a)
    if at.tag is not ActionTag.TYPE3:
        return False
    w = at.witness
    return (g.bracket_vec(list(w.x1), list(w.x2)) == list(w.x2)
            and g.bracket_vec(list(w.x1), list(w.x0)) == [-c for c in w.x0]
            and g.bracket_vec(list(w.x2), list(w.x0)) == [-2 * c for c in w.x1])


IDENTITIES: list[tuple[str, Callable[[], bool]]] = [
    ("sl2 bracket table", _check_sl2_brackets),
    ("Killing values on sl2", _check_killing_values),
    ("Cartan trivector normalization", _check_cartan_trivector),
    ("Cartan trivector is Casimir", _check_cartan_casimir),
    ("standard action has full rank with canonical triple", _check_standard_classifies_type3),
    ("image of t under the degree raiser", _check_d_of_t),
    ("degree raiser kills constant vectors", _check_d_kills_constants),
    ("square of the degree raiser on t", _check_d_squared),
    ("canonical bivector generates the degree raiser", _check_tau_generates_d),
    ("canonical bivector solves the equation at -1", _check_tau_is_rmatrix),
    ("induced kernel cocycle law", _check_kernel_cocycle),
    ("two-root constant family", _check_two_roots),
    ("one-parameter polynomial family", _check_a0_family),
    ("six-term mixed solution over the double algebra", _check_six_term_example),
    ("kernel-block solution at zero", _check_kernel_block_example),
    ("extended realization of the standard action", _check_extended_realization),
    ("polynomial section of the standard action", _check_gamma_section),
    ("differential decomposition round trip", _check_dstar_round_trip),
    ("constant quadruple gives a crossed-product dual", _check_constant_quadruple_dual),
    ("rescaled full-rank action recovers a standard triple", _check_rescaled_action_classifies),
]


def run_selftest() -> list[tuple[str, bool]]:
    results = []
    for name, fn in IDENTITIES:
        try:
            ok = bool(fn())
        except Exception:
            ok = False
        results.append((name, ok))
    return results
