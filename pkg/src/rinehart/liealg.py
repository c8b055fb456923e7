"""Finite-dimensional Lie algebras over Q given by structure constants.

Construction validates antisymmetry and the Jacobi identity on all basis
triples; everything downstream silently depends on both, so validation is
mandatory rather than lazy.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import (
    DimensionMismatchError,
    JacobiViolationError,
    KillingSingularError,
)
from .exactalg import QMatrix, invert_matrix, linsolve, matrix_rank
from .multivec import Multivector, POLY_RING

#: Degree-3 multivector with scalar coefficients (e.g. the Cartan trivector).
Trivector = Multivector

# Normalization of the triple Killing contraction identifying degree-3
# multivectors with trilinear forms.  Pinned so that cartan_3form on the
# standard sl2 basis is exactly 4*H^E+^E-; see tests/test_liealg.py.
_CARTAN_CONTRACTION_SCALE = Fraction(1, 32)


class LieAlgebra:
    """Lie algebra with named basis and exact rational structure constants.

    Brackets are stored as ``table[(i, j)] = {k: c}`` for i < j, meaning
    [X_i, X_j] = sum_k c * X_k.
    """

    __slots__ = ("basis_names", "table")

    def __init__(self, basis_names: Sequence[str],
                 structure: Mapping[tuple[int, int], Mapping[int, Fraction]]):
        names = tuple(basis_names)
        if len(set(names)) != len(names):
            raise JacobiViolationError("duplicate basis names")
        dim = len(names)
        table: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), comps in structure.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise DimensionMismatchError(f"basis index out of range in pair ({i}, {j})")
            comps = {k: Fraction(c) for k, c in comps.items() if c != 0}
            if any(not 0 <= k < dim for k in comps):
                raise DimensionMismatchError(f"target index out of range for pair ({i}, {j})")
            if not comps:
                continue
            if i == j:
                raise JacobiViolationError(
                    f"[X_{i}, X_{i}] must vanish", triple=(i, i, None))
            key, flip = ((i, j), False) if i < j else ((j, i), True)
            entry = {k: (-c if flip else c) for k, c in comps.items()}
            if key in table and table[key] != entry:
                raise JacobiViolationError(
                    f"antisymmetry violated on pair {key}", triple=(i, j, None))
            table[key] = entry
        object.__setattr__(self, "basis_names", names)
        object.__setattr__(self, "table", table)
        self._validate_jacobi()

    def __setattr__(self, name, value):
        raise AttributeError("LieAlgebra is immutable")

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def name_index(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise DimensionMismatchError(f"unknown basis name {name!r}") from None

    def bracket_basis(self, i: int, j: int) -> dict[int, Fraction]:
        """[X_i, X_j] as a sparse coefficient map."""
        if i == j:
            return {}
        if i < j:
            return dict(self.table.get((i, j), {}))
        return {k: -c for k, c in self.table.get((j, i), {}).items()}

    def bracket_vec(self, x: Sequence, y: Sequence) -> list:
        """Bilinear extension of the bracket to coefficient vectors.

        Generic over the coefficient ring: works for Fractions as well as
        polynomial coefficients.
        """
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatchError("coefficient vector length must equal dim")
        zero = 0 * (x[0] if len(x) else Fraction(0))
        out = [zero] * self.dim
        for (i, j), comps in self.table.items():
            cross = x[i] * y[j] - x[j] * y[i]
            if cross == zero:
                continue
            for k, c in comps.items():
                out[k] = out[k] + c * cross
        return out

    def _validate_jacobi(self):
        dim = self.dim
        unit = [[Fraction(1 if a == b else 0) for b in range(dim)] for a in range(dim)]
        for i, j, k in itertools.combinations(range(dim), 3):
            acc = [Fraction(0)] * dim
            for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                inner = self.bracket_vec(unit[a], unit[b])
                term = self.bracket_vec(inner, unit[c])
                acc = [p + q for p, q in zip(acc, term)]
            if any(v != 0 for v in acc):
                raise JacobiViolationError(
                    f"Jacobi identity fails on basis triple "
                    f"({self.basis_names[i]}, {self.basis_names[j]}, {self.basis_names[k]})",
                    triple=(i, j, k))

    def ad_matrix(self, x: Sequence[Fraction]) -> list[list[Fraction]]:
        """Matrix of ad_x in the basis, rows indexing output components."""
        cols = []
        unit = [Fraction(0)] * self.dim
        for j in range(self.dim):
            e = list(unit)
            e[j] = Fraction(1)
            cols.append(self.bracket_vec(list(x), e))
        return [[cols[j][k] for j in range(self.dim)] for k in range(self.dim)]

    def __repr__(self):
        return f"LieAlgebra({list(self.basis_names)!r}, dim={self.dim})"


def lie_bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> list:
    return g.bracket_vec(x, y)


def make_sl2() -> LieAlgebra:
    """sl(2) on the basis (H, E+, E-) with [H,E+]=E+, [H,E-]=-E-, [E+,E-]=-2H."""
    return LieAlgebra(
        ("H", "E+", "E-"),
        {(0, 1): {1: Fraction(1)},
         (0, 2): {2: Fraction(-1)},
         (1, 2): {0: Fraction(-2)}},
    )


def make_abelian(names: Sequence[str]) -> LieAlgebra:
    return LieAlgebra(tuple(names), {})


def direct_sum(g1: LieAlgebra, g2: LieAlgebra) -> LieAlgebra:
    """Direct sum of ideals; colliding names in the second block get a prime."""
    names = list(g1.basis_names)
    for n in g2.basis_names:
        fresh = n
        while fresh in names:
            fresh += "'"
        names.append(fresh)
    shift = g1.dim
    structure: dict[tuple[int, int], dict[int, Fraction]] = {}
    for (i, j), comps in g1.table.items():
        structure[(i, j)] = dict(comps)
    for (i, j), comps in g2.table.items():
        structure[(i + shift, j + shift)] = {k + shift: c for k, c in comps.items()}
    return LieAlgebra(tuple(names), structure)


class KillingForm:
    """Killing form kappa(X, Y) = trace(ad X ∘ ad Y) of a Lie algebra."""

    __slots__ = ("algebra", "matrix", "_inverse")

    def __init__(self, algebra: LieAlgebra, matrix: QMatrix):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "_inverse", None)

    def __setattr__(self, name, value):
        raise AttributeError("KillingForm is immutable")

    def __getitem__(self, ij):
        return self.matrix[ij]

    def pair_vec(self, x: Sequence, y: Sequence):
        """kappa(x, y), generic over the coefficient ring of x and y."""
        acc = 0 * (x[0] * y[0]) if x else Fraction(0)
        for i, xi in enumerate(x):
            if xi == 0 * xi:
                continue
            for j, yj in enumerate(y):
                c = self.matrix[i, j]
                if c != 0:
                    acc = acc + c * xi * yj
        return acc

    @property
    def inverse(self) -> QMatrix:
        if self._inverse is None:
            try:
                inv = invert_matrix(self.matrix)
            except ValueError:
                raise KillingSingularError(
                    "the Killing form is singular; the algebra is not semisimple"
                ) from None
            object.__setattr__(self, "_inverse", inv)
        return self._inverse


@lru_cache(maxsize=None)
def _killing_cached(g: LieAlgebra) -> KillingForm:
    dim = g.dim
    unit = [[Fraction(1 if a == b else 0) for b in range(dim)] for a in range(dim)]
    ads = [g.ad_matrix(unit[i]) for i in range(dim)]
    rows = []
    for i in range(dim):
        row = []
        for j in range(dim):
            tr = sum(
                (ads[i][a][b] * ads[j][b][a]
                 for a in range(dim) for b in range(dim)),
                Fraction(0),
            )
            row.append(tr)
        rows.append(row)
    return KillingForm(g, QMatrix.from_rows(rows))


def killing(g: LieAlgebra) -> KillingForm:
    return _killing_cached(g)


def is_semisimple(g: LieAlgebra) -> bool:
    if g.dim == 0:
        return True
    return matrix_rank(killing(g).matrix.entries) == g.dim


def derived_subalgebra_basis(g: LieAlgebra) -> list[tuple[Fraction, ...]]:
    """Basis of [g, g] as coefficient vectors."""
    rows = []
    for (i, j), comps in g.table.items():
        vec = [Fraction(0)] * g.dim
        for k, c in comps.items():
            vec[k] = c
        rows.append(vec)
    # reduce to an independent set
    basis: list[tuple[Fraction, ...]] = []
    for vec in rows:
        if matrix_rank(basis + [tuple(vec)]) > len(basis):
            basis.append(tuple(vec))
    return basis


def radical(g: LieAlgebra) -> list[tuple[Fraction, ...]]:
    """Basis of {x : kappa(x, [g,g]) = 0} (Cartan's solvability criterion)."""
    derived = derived_subalgebra_basis(g)
    if not derived:
        return [tuple(Fraction(1 if a == b else 0) for b in range(g.dim))
                for a in range(g.dim)]
    kf = killing(g)
    rows = [[kf.pair_vec(d, _unit(g.dim, j)) for j in range(g.dim)] for d in derived]
    sol = linsolve(rows, [Fraction(0)] * len(rows))
    return list(sol.nullspace)


def _unit(dim: int, i: int) -> list[Fraction]:
    e = [Fraction(0)] * dim
    e[i] = Fraction(1)
    return e


def killing_sharp(g: LieAlgebra, functional: Sequence) -> list:
    """Solve kappa(x, X_i) = functional_i exactly.

    The entries may be Fractions or polynomials; the inverse Killing matrix
    acts entrywise.
    """
    kf = killing(g)
    if len(functional) != g.dim:
        raise DimensionMismatchError("functional length must equal dim")
    return kf.inverse.mat_vec(list(functional))


def cartan_3form(g: LieAlgebra) -> Trivector:
    """The trivector whose scaled triple Killing contraction with X∧Y∧Z
    gives ([X,Y], Z).

    Requires a nondegenerate Killing form.  The contraction normalization
    must keep cartan_3form(make_sl2()) == 4*H^E+^E-.
    """
    if not is_semisimple(g):
        raise KillingSingularError("cartan_3form requires a semisimple algebra")
    dim = g.dim
    kf = killing(g)
    triples = list(itertools.combinations(range(dim), 3))
    if not triples:
        return Multivector.zero(dim, 3, POLY_RING)

    def gram_det(t1, t2):
        m = [[kf[a, b] for b in t2] for a in t1]
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    rows = [[_CARTAN_CONTRACTION_SCALE * gram_det(t1, t2) for t2 in triples]
            for t1 in triples]
    rhs = []
    for i, j, k in triples:
        br = g.bracket_basis(i, j)
        vec = [Fraction(0)] * dim
        for a, c in br.items():
            vec[a] = c
        rhs.append(kf.pair_vec(vec, _unit(dim, k)))
    sol = linsolve(rows, rhs)
    if not sol.unique:
        raise KillingSingularError("triple contraction matrix unexpectedly singular")
    return Multivector.build(
        dim, 3, [(t, c) for t, c in zip(triples, sol.particular)], POLY_RING)
