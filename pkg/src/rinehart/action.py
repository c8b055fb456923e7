"""Actions of a Lie algebra on Q[t], their classification by image rank,
and the crossed products they generate.

Der Q[t] is identified with Q[t] itself: the polynomial f stands for the
derivation f d/dt, and the induced bracket on Q[t] is [f, g] = fg' - f'g.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    DimensionMismatchError,
    InternalContradictionError,
    MorphismViolationError,
    PreconditionError,
    Type2SpanNotRecognizedError,
    Type3TripleNotFoundError,
)
from .exactalg import POLY_ONE, POLY_T, Poly, RatFunc, linsolve, matrix_rank
from .liealg import LieAlgebra, is_semisimple, killing, make_sl2
from .multivec import (
    CoefficientRing,
    Multivector,
    POLY_RING,
    RATFUNC_RING,
    join_ring,
)


def witt_bracket(f, g):
    """[f, g] = f g' - f' g, the bracket of Der Q[t] under f <-> f d/dt."""
    return f * g.derivative() - f.derivative() * g


class Action:
    """A validated Lie algebra morphism theta: g -> Der Q[t].

    theta[i] is the polynomial assigned to the i-th basis vector.
    Construct through validate_action, which enforces the morphism law.
    """

    __slots__ = ("algebra", "theta")

    def __init__(self, algebra: LieAlgebra, theta: tuple[Poly, ...]):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "theta", theta)

    def __setattr__(self, name, value):
        raise AttributeError("Action is immutable")

    def is_trivial(self) -> bool:
        return all(p.is_zero() for p in self.theta)

    def rank(self) -> int:
        rows = [list(p.coeffs) for p in self.theta if not p.is_zero()]
        if not rows:
            return 0
        width = max(len(r) for r in rows)
        return matrix_rank([r + [Fraction(0)] * (width - len(r)) for r in rows])

    def __repr__(self):
        imgs = ", ".join(f"{n} -> {p}" for n, p in zip(self.algebra.basis_names, self.theta))
        return f"Action({imgs})"


def validate_action(g: LieAlgebra, theta: Sequence[Poly]) -> Action:
    """Check the morphism law theta([Xi, Xj]) = [theta_i, theta_j] pairwise."""
    polys = tuple(p if isinstance(p, Poly) else Poly.const(p) for p in theta)
    if len(polys) != g.dim:
        raise DimensionMismatchError(
            f"{len(polys)} polynomials for a {g.dim}-dimensional algebra")
    for i, j in itertools.combinations(range(g.dim), 2):
        lhs = Poly()
        for k, c in g.bracket_basis(i, j).items():
            lhs = lhs + c * polys[k]
        rhs = witt_bracket(polys[i], polys[j])
        if lhs != rhs:
            raise MorphismViolationError(i, j, lhs, rhs)
    return Action(g, polys)


def standard_action() -> Action:
    """The sl2 action theta(H) = t, theta(E+) = t^2, theta(E-) = 1."""
    return validate_action(make_sl2(), (POLY_T, Poly.t(2), POLY_ONE))


class ActionTag(enum.Enum):
    TRIVIAL = "Trivial"
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    TYPE3 = "Type3"


@dataclass(frozen=True)
class Type1Witness:
    h: Poly
    lam: tuple[Fraction, ...]


@dataclass(frozen=True)
class Type2Witness:
    b: Fraction
    m: int
    lam: tuple[Fraction, ...]
    mu: tuple[Fraction, ...]


@dataclass(frozen=True)
class Type3Witness:
    # coefficient vectors with theta-values 1, t, t^2 and brackets
    # [x1, x2] = x2, [x1, x0] = -x0, [x2, x0] = -2 x1
    x0: tuple[Fraction, ...]
    x1: tuple[Fraction, ...]
    x2: tuple[Fraction, ...]


@dataclass(frozen=True)
class ActionType:
    tag: ActionTag
    witness: object | None


def _theta_kernel(a: Action) -> list[tuple[Fraction, ...]]:
    """Basis of {x in g : theta(x) = 0} (constant vectors)."""
    degrees = [len(p.coeffs) for p in a.theta]
    width = max(degrees, default=0)
    rows = [[a.theta[i].coeff(d) for i in range(a.algebra.dim)] for d in range(width)]
    if not rows:
        rows = [[Fraction(0)] * a.algebra.dim]
    sol = linsolve(rows, [Fraction(0)] * len(rows))
    return list(sol.nullspace)


def _solve_theta_equals(a: Action, target: Poly):
    """All x with theta(x) = target, as (particular, kernel-basis); None if none."""
    dim = a.algebra.dim
    width = max([len(p.coeffs) for p in a.theta] + [len(target.coeffs), 1])
    rows = [[a.theta[i].coeff(d) for i in range(dim)] for d in range(width)]
    sol = linsolve(rows, [target.coeff(d) for d in range(width)])
    if not sol.consistent:
        return None
    return sol.particular, sol.nullspace


def classify(a: Action) -> ActionType:
    """Sort a valid action into Trivial or Type 1/2/3 by image rank,
    extracting witnesses that reproduce theta exactly."""
    rank = a.rank()
    if rank == 0:
        return ActionType(ActionTag.TRIVIAL, None)
    if rank == 1:
        return ActionType(ActionTag.TYPE1, _type1_witness(a))
    if rank == 2:
        return ActionType(ActionTag.TYPE2, _type2_witness(a))
    if rank == 3:
        return ActionType(ActionTag.TYPE3, _type3_witness(a))
    raise InternalContradictionError(
        f"action image has rank {rank} > 3, impossible for a valid action")


def _type1_witness(a: Action) -> Type1Witness:
    h = next(p for p in a.theta if not p.is_zero())
    lam = []
    for p in a.theta:
        if p.is_zero():
            lam.append(Fraction(0))
            continue
        c = p.leading() / h.leading()
        if h * c != p:
            raise InternalContradictionError(
                "rank-1 image is not spanned by a single polynomial")
        lam.append(c)
    return Type1Witness(h, tuple(lam))


def _image_span_basis(a: Action) -> list[Poly]:
    """Basis of the image span with pairwise distinct leading degrees,
    sorted by decreasing degree."""
    by_degree: dict[int, Poly] = {}
    for p in a.theta:
        while not p.is_zero():
            d = int(p.degree)
            if d not in by_degree:
                by_degree[d] = p
                break
            p = p - by_degree[d] * (p.leading() / by_degree[d].leading())
    return [by_degree[d] for d in sorted(by_degree, reverse=True)]


def _type2_witness(a: Action) -> Type2Witness:
    basis = _image_span_basis(a)
    if len(basis) != 2:
        raise InternalContradictionError("rank-2 span did not reduce to two generators")
    q_high, q_low = basis
    if q_low.degree == 0:
        # constants lie in the span: the degenerate m = 0 family; tie-break b = 0
        if q_high.degree != 1:
            raise Type2SpanNotRecognizedError(
                f"span contains constants but no linear polynomial: "
                f"generators {q_high}, {q_low}")
        b, m = Fraction(0), 0
    elif q_low.degree == 1:
        alpha, beta = q_low.coeff(1), q_low.coeff(0)
        b = beta / alpha
        m = int(q_high.degree)
        shifted = q_high.shifted_coeffs(b)
        bad = [k for k, c in enumerate(shifted) if c != 0 and k not in (1, m)]
        if bad or m == 1:
            raise Type2SpanNotRecognizedError(
                f"complementary generator is not of the shape c*(t+{b})^m: {q_high}")
    else:
        raise Type2SpanNotRecognizedError(
            f"span has no linear element: generators {q_high}, {q_low}")

    lam, mu = [], []
    for p in a.theta:
        shifted = p.shifted_coeffs(b)
        coeffs = {k: c for k, c in enumerate(shifted) if c != 0}
        lam.append(coeffs.pop(m, Fraction(0)))
        mu.append(coeffs.pop(1, Fraction(0)))
        if coeffs:
            raise Type2SpanNotRecognizedError(
                f"theta value {p} does not lie in span{{(t+{b})^{m}, (t+{b})}}")
    return Type2Witness(b, m, tuple(lam), tuple(mu))


def _theta_poly_of_vec(a: Action, vec: Sequence[Fraction]) -> Poly:
    acc = Poly()
    for c, p in zip(vec, a.theta):
        acc = acc + c * p
    return acc


def _check_sl2_triple(g: LieAlgebra, x0, x1, x2) -> bool:
    return (
        g.bracket_vec(x1, x2) == [c for c in x2]
        and g.bracket_vec(x1, x0) == [-c for c in x0]
        and g.bracket_vec(x2, x0) == [-2 * c for c in x1]
    )


def _type3_witness(a: Action) -> Type3Witness:
    g = a.algebra
    targets = [POLY_ONE, POLY_T, Poly.t(2)]
    solved = [_solve_theta_equals(a, f) for f in targets]
    if any(s is None for s in solved):
        raise Type3TripleNotFoundError("1, t, t^2 are not all in the image of theta")
    particulars = [list(s[0]) for s in solved]
    kernel = solved[0][1]

    if not kernel:
        x0, x1, x2 = particulars
        if not _check_sl2_triple(g, x0, x1, x2):
            raise Type3TripleNotFoundError(
                "the unique preimages of 1, t, t^2 do not close into a standard triple")
        return Type3Witness(tuple(x0), tuple(x1), tuple(x2))

    if is_semisimple(g):
        triple = _type3_triple_semisimple(a, kernel)
    else:
        triple = _type3_triple_linearized(g, particulars, kernel)
    x0, x1, x2 = triple
    if not _check_sl2_triple(g, x0, x1, x2):
        raise Type3TripleNotFoundError("candidate triple fails the bracket relations")
    for vec, f in zip(triple, targets):
        if _theta_poly_of_vec(a, vec) != f:
            raise InternalContradictionError("triple lost its theta values")
    return Type3Witness(tuple(x0), tuple(x1), tuple(x2))


def _type3_triple_semisimple(a: Action, kernel):
    """Take preimages inside the Killing-orthogonal complement of Ker theta."""
    g = a.algebra
    kf = killing(g)
    rows = [[kf.pair_vec(n, _unit(g.dim, j)) for j in range(g.dim)] for n in kernel]
    comp = linsolve(rows, [Fraction(0)] * len(rows)).nullspace
    if len(comp) != 3:
        raise Type3TripleNotFoundError(
            f"orthogonal complement of Ker theta has dimension {len(comp)}, not 3")
    triple = []
    for f in (POLY_ONE, POLY_T, Poly.t(2)):
        width = max([len(p.coeffs) for p in a.theta] + [len(f.coeffs)])
        theta_w = [_theta_poly_of_vec(a, w) for w in comp]
        rows = [[q.coeff(d) for q in theta_w] for d in range(width)]
        sol = linsolve(rows, [f.coeff(d) for d in range(width)])
        if not sol.unique:
            raise Type3TripleNotFoundError(
                "theta is not bijective on the orthogonal complement")
        vec = [Fraction(0)] * g.dim
        for c, w in zip(sol.particular, comp):
            vec = [v + c * wi for v, wi in zip(vec, w)]
        triple.append(vec)
    return triple


def _type3_triple_linearized(g: LieAlgebra, particulars, kernel):
    """Adjust the particular preimages by kernel elements, solving the
    bracket constraints with the quadratic correction terms dropped.

    Sufficient whenever the kernel acts abelianly; the caller re-verifies
    the full relations exactly either way.
    """
    p0, p1, p2 = particulars
    nk = len(kernel)
    dim = g.dim
    nvars = 3 * nk  # u0, u1, u2 coordinates in the kernel basis

    def bracket(x, y):
        return g.bracket_vec(list(x), list(y))

    rows = [[Fraction(0)] * nvars for _ in range(3 * dim)]
    rhs = []

    def add_block(eq, var_block, coeffs_per_kernel):
        for a_idx, vec in enumerate(coeffs_per_kernel):
            for d in range(dim):
                rows[eq * dim + d][var_block * nk + a_idx] += vec[d]

    # [x1, x2] - x2 = 0
    add_block(0, 1, [bracket(n, p2) for n in kernel])
    add_block(0, 2, [[c - n_val for c, n_val in zip(bracket(p1, n), n)] for n in kernel])
    rhs.extend([c2 - br for br, c2 in zip(bracket(p1, p2), p2)])
    # [x1, x0] + x0 = 0
    add_block(1, 1, [bracket(n, p0) for n in kernel])
    add_block(1, 0, [[c + n_val for c, n_val in zip(bracket(p1, n), n)] for n in kernel])
    rhs.extend([-c0 - br for br, c0 in zip(bracket(p1, p0), p0)])
    # [x2, x0] + 2 x1 = 0
    add_block(2, 2, [bracket(n, p0) for n in kernel])
    add_block(2, 0, [bracket(p2, n) for n in kernel])
    add_block(2, 1, [[2 * n_val for n_val in n] for n in kernel])
    rhs.extend([-2 * c1 - br for br, c1 in zip(bracket(p2, p0), p1)])

    sol = linsolve(rows, rhs)
    if not sol.consistent:
        raise Type3TripleNotFoundError(
            "linearized bracket constraints are inconsistent; "
            "a standard triple, if it exists, needs a nonlinear search")
    u = sol.particular
    out = []
    for block, p in enumerate((p0, p1, p2)):
        vec = list(p)
        for a_idx, n in enumerate(kernel):
            c = u[block * nk + a_idx]
            vec = [v + c * ni for v, ni in zip(vec, n)]
        out.append(vec)
    return out


def _unit(dim, i):
    e = [Fraction(0)] * dim
    e[i] = Fraction(1)
    return e


@dataclass(frozen=True)
class CriteriaReport:
    ok: bool
    report: str

    def __bool__(self):
        return self.ok


def check_type_criteria(g: LieAlgebra, at: ActionType,
                        levi: Optional[Sequence[Sequence[Fraction]]] = None) -> CriteriaReport:
    """Verify the existence conditions behind a classification witness."""
    if at.tag is ActionTag.TRIVIAL:
        return CriteriaReport(True, "trivial action, nothing to check")
    if at.tag is ActionTag.TYPE1:
        return _check_type1(g, at.witness)
    if at.tag is ActionTag.TYPE2:
        return _check_type2(g, at.witness)
    return _check_type3(g, at.witness, levi)


def _derived_vectors(g: LieAlgebra):
    out = []
    for (i, j), comps in g.table.items():
        vec = [Fraction(0)] * g.dim
        for k, c in comps.items():
            vec[k] = c
        out.append(vec)
    return out


def _check_type1(g, w: Type1Witness) -> CriteriaReport:
    for d in _derived_vectors(g):
        val = sum((li * di for li, di in zip(w.lam, d)), Fraction(0))
        if val != 0:
            return CriteriaReport(False, f"lambda does not vanish on [g, g]: value {val}")
    return CriteriaReport(True, "[g, g] lies in Ker lambda")


def _in_span(vectors, target) -> bool:
    rows = [tuple(v) for v in vectors]
    return matrix_rank(rows + [tuple(target)]) == matrix_rank(rows)


def _check_type2(g, w: Type2Witness) -> CriteriaReport:
    dim = g.dim
    lam_row = list(w.lam)
    mu_row = list(w.mu)
    both = [lam_row, mu_row]
    if matrix_rank(both) != 2:
        return CriteriaReport(False, "lambda and mu are not independent")
    x0 = linsolve(both, [1, 0])
    y0 = linsolve(both, [0, 1])
    if not (x0.consistent and y0.consistent):
        return CriteriaReport(False, "no vectors with lambda=1/mu=0 and lambda=0/mu=1")
    x0, y0 = list(x0.particular), list(y0.particular)
    s_basis = [list(v) for v in linsolve(both, [0, 0]).nullspace]
    if len(s_basis) + 2 != dim:
        return CriteriaReport(False, "S + <x0> + <y0> does not decompose g")
    # S must be an ideal
    for i in range(dim):
        for s in s_basis:
            if not _in_span(s_basis, g.bracket_vec(_unit(dim, i), s)):
                return CriteriaReport(False, "S is not an ideal")
    hull = s_basis + [x0]
    for d in _derived_vectors(g):
        if not _in_span(hull, d):
            return CriteriaReport(False, "[g, g] is not contained in S + <x0>")
    drift = [c + (w.m - 1) * xc for c, xc in zip(g.bracket_vec(x0, y0), x0)]
    if not (all(v == 0 for v in drift) or _in_span(s_basis, drift)):
        return CriteriaReport(False, f"[x0, y0] + (m-1) x0 is not in S (m={w.m})")
    return CriteriaReport(True, "decomposition, ideal and bracket conditions all hold")


def _check_type3(g, w: Type3Witness, levi) -> CriteriaReport:
    if not _check_sl2_triple(g, list(w.x0), list(w.x1), list(w.x2)):
        return CriteriaReport(False, "triple fails the standard bracket relations")
    if levi is not None:
        levi = [list(v) for v in levi]
        for v in (w.x0, w.x1, w.x2):
            if not _in_span(levi, list(v)):
                return CriteriaReport(False, "triple is not inside the declared Levi complement")
        for a_vec in levi:
            for b_vec in levi:
                if not _in_span(levi, g.bracket_vec(a_vec, b_vec)):
                    return CriteriaReport(False, "declared Levi complement is not a subalgebra")
        triple = [list(w.x0), list(w.x1), list(w.x2)]
        for a_vec in levi:
            for s in triple:
                if not _in_span(triple, g.bracket_vec(a_vec, s)):
                    return CriteriaReport(False, "triple does not span an ideal of the Levi complement")
    return CriteriaReport(True, "triple spans a standard sl2")


class CrossedProduct:
    """The Lie Rinehart algebra R ⊗ g induced by an action, with R = Q[t]
    or its fraction field selected by `ring`."""

    __slots__ = ("action", "ring", "_theta_ring")

    def __init__(self, action: Action, ring: CoefficientRing = POLY_RING):
        object.__setattr__(self, "action", action)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_theta_ring", tuple(ring.convert(p) for p in action.theta))

    def __setattr__(self, name, value):
        raise AttributeError("CrossedProduct is immutable")

    @staticmethod
    def trivial(g: LieAlgebra, ring: CoefficientRing = POLY_RING) -> "CrossedProduct":
        return CrossedProduct(Action(g, tuple(Poly() for _ in range(g.dim))), ring)

    @property
    def algebra(self) -> LieAlgebra:
        return self.action.algebra

    @property
    def dim(self) -> int:
        return self.action.algebra.dim

    def theta_coeffs(self, ring: CoefficientRing):
        if ring is self.ring:
            return self._theta_ring
        return tuple(ring.convert(p) for p in self.action.theta)

    def theta_of(self, u: Multivector):
        """theta extended module-linearly to degree-1 elements."""
        ring = join_ring(self.ring, u.ring)
        theta = self.theta_coeffs(ring)
        acc = ring.zero
        for (i,), c in u.promote(ring).terms.items():
            acc = acc + c * theta[i]
        return acc

    def scalar(self, value) -> Multivector:
        return Multivector.scalar(self.dim, value, self.ring)

    def basis_element(self, i: int) -> Multivector:
        return Multivector.basis(self.dim, i, self.ring)

    def bracket(self, u: Multivector, v: Multivector) -> Multivector:
        """Crossed-product bracket of degree-1 elements:

        [aX, bY] = ab [X, Y] + a (theta(X) b) Y - b (theta(Y) a) X,
        extended bilinearly; theta(X) acts as theta_X d/dt.
        """
        if u.degree != 1 or v.degree != 1:
            raise DimensionMismatchError("crossed bracket takes degree-1 elements")
        ring = join_ring(join_ring(u.ring, v.ring), self.ring)
        a, b = u.promote(ring), v.promote(ring)
        at, bt = a.terms, b.terms
        items = []
        for (i, j), comps in self.algebra.table.items():
            ai, aj = at.get((i,)), at.get((j,))
            bi, bj = bt.get((i,)), bt.get((j,))
            cross = None
            if ai is not None and bj is not None:
                cross = ai * bj
            if aj is not None and bi is not None:
                part = aj * bi
                cross = -part if cross is None else cross - part
            if cross is None or cross.is_zero():
                continue
            for k, c in comps.items():
                items.append(((k,), cross * c))
        db = [(key, d) for key, c in bt.items() if not (d := c.derivative()).is_zero()]
        if db:
            theta_u = self.theta_of(a)
            if not theta_u.is_zero():
                items.extend((key, theta_u * d) for key, d in db)
        da = [(key, d) for key, c in at.items() if not (d := c.derivative()).is_zero()]
        if da:
            theta_v = self.theta_of(b)
            if not theta_v.is_zero():
                items.extend((key, -(theta_v * d)) for key, d in da)
        return Multivector.build(self.dim, 1, items, ring)


def crossed_bracket(cp: CrossedProduct, u: Multivector, v: Multivector) -> Multivector:
    return cp.bracket(u, v)


@dataclass(frozen=True)
class ExtendedData:
    """Realization of a nontrivial crossed product as Q[t] ⋉ L."""

    l_basis: tuple[Multivector, ...]
    d_images: tuple[Multivector, ...]
    delta: Poly
    generator: Multivector  # degree-1 element implementing D = [generator, .]


def extended_realization(a: Action) -> ExtendedData:
    """Exhibit the kernel module L, the derivation pair (D, delta) and the
    implementing generator for a nontrivial classified action."""
    if a.is_trivial():
        raise PreconditionError("extended realization needs a nontrivial action")
    at = classify(a)
    g = a.algebra
    dim = g.dim

    if at.tag is ActionTag.TYPE1:
        w: Type1Witness = at.witness
        gen_vec = linsolve([list(w.lam)], [1]).particular
        kernel = linsolve([list(w.lam)], [0]).nullspace
        l_basis = [Multivector.from_vector(n, POLY_RING) for n in kernel]
        generator = Multivector.from_vector(gen_vec, POLY_RING)
        delta = w.h
        ring = POLY_RING
    elif at.tag is ActionTag.TYPE2:
        w: Type2Witness = at.witness
        both = [list(w.lam), list(w.mu)]
        x0 = linsolve(both, [1, 0]).particular
        y0 = linsolve(both, [0, 1]).particular
        s_basis = linsolve(both, [0, 0]).nullspace
        ring = POLY_RING if w.m >= 1 else RATFUNC_RING
        shift = Poly([w.b, 1])
        if w.m >= 1:
            factor = ring.convert(shift ** (w.m - 1))
        else:
            factor = RatFunc(POLY_ONE, shift)
        mixed = (Multivector.from_vector(x0, ring)
                 - Multivector.from_vector(y0, ring).scale(factor))
        l_basis = [Multivector.from_vector(s, ring) for s in s_basis] + [mixed]
        generator = Multivector.from_vector(y0, ring)
        delta = shift
    else:
        if at.tag is not ActionTag.TYPE3:
            raise PreconditionError("trivial actions have no extended realization")
        w: Type3Witness = at.witness
        kernel = _theta_kernel(a)
        ring = POLY_RING
        x0 = Multivector.from_vector(w.x0, ring)
        x1 = Multivector.from_vector(w.x1, ring)
        x2 = Multivector.from_vector(w.x2, ring)
        a_elt = x2 - x1.scale(POLY_T)
        b_elt = x1 - x0.scale(POLY_T)
        l_basis = [Multivector.from_vector(n, ring) for n in kernel] + [a_elt, b_elt]
        generator = x0
        delta = POLY_ONE

    cp = CrossedProduct(a, ring)
    for elt in l_basis:
        if not _is_ring_zero(cp.theta_of(elt)):
            raise InternalContradictionError("an L-basis element is not in Ker theta")
    d_images = tuple(cp.bracket(generator, elt) for elt in l_basis)
    for img in d_images:
        if not _is_ring_zero(cp.theta_of(img)):
            raise InternalContradictionError("D does not preserve L")
    _validate_derivation_laws(cp, l_basis, d_images, generator, delta)
    return ExtendedData(tuple(l_basis), d_images, delta, generator)


def _is_ring_zero(x) -> bool:
    return x.is_zero()


def _validate_derivation_laws(cp, l_basis, d_images, generator, delta):
    # D[l1, l2] = [D l1, l2] + [l1, D l2] on basis pairs
    for (l1, d1), (l2, d2) in itertools.combinations(zip(l_basis, d_images), 2):
        lhs = cp.bracket(generator, cp.bracket(l1, l2))
        rhs = cp.bracket(d1, l2) + cp.bracket(l1, d2)
        if lhs != rhs:
            raise InternalContradictionError("derivation law fails on an L-basis pair")
    # D(t l) = delta(t) l + t D(l) with delta(t) = delta
    t_elt = cp.ring.convert(POLY_T)
    for l, d in zip(l_basis, d_images):
        lhs = cp.bracket(generator, l.scale(t_elt))
        rhs = l.scale(cp.ring.convert(delta)) + d.scale(t_elt)
        if lhs != rhs:
            raise InternalContradictionError("module derivation law fails on an L-basis element")


def gamma_section(a: Action) -> Multivector:
    """A module section gamma with theta(gamma) = 1.

    Rational-function coefficients for Types 1 and 2; for Type 3 the
    section is polynomial (it is the triple's first element).
    """
    if a.is_trivial():
        raise PreconditionError("a trivial action admits no section")
    at = classify(a)
    if at.tag is ActionTag.TYPE1:
        w: Type1Witness = at.witness
        vec = linsolve([list(w.lam)], [1]).particular
        return Multivector.from_vector(vec, RATFUNC_RING).scale(RatFunc(POLY_ONE, w.h))
    if at.tag is ActionTag.TYPE2:
        w: Type2Witness = at.witness
        vec = linsolve([list(w.mu)], [1]).particular
        lam_x = sum((li * vi for li, vi in zip(w.lam, vec)), Fraction(0))
        shift = Poly([w.b, 1])
        denom = lam_x * shift ** w.m + shift
        return Multivector.from_vector(vec, RATFUNC_RING).scale(RatFunc(POLY_ONE, denom))
    w: Type3Witness = at.witness
    return Multivector.from_vector(w.x0, POLY_RING)
