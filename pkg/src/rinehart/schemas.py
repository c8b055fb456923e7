"""Wire formats for problems and reports, as pydantic models.

Exactness is non-negotiable on the wire: rationals travel as "p/q"
strings, polynomials as ascending coefficient arrays of such strings, and
rational functions as {"num": [...], "den": [...]} pairs.  Floats never
appear.  Multivectors are lists of {indices, coeff} terms with the
indices given by basis names.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from .errors import InputParseError
from .exactalg import Poly, RatFunc
from .liealg import LieAlgebra
from .multivec import CoefficientRing, Multivector, POLY_RING, RATFUNC_RING
from .action import Action, CrossedProduct, validate_action
from .bialgebra import SplitCrossedProduct

PolyWire = list[str]


class RatFuncWire(BaseModel):
    model_config = ConfigDict(extra="forbid")
    num: PolyWire
    den: PolyWire


CoeffWire = Union[PolyWire, RatFuncWire]


class TermWire(BaseModel):
    model_config = ConfigDict(extra="forbid")
    indices: list[str]
    coeff: CoeffWire


class BracketWire(BaseModel):
    model_config = ConfigDict(extra="forbid")
    pair: tuple[str, str]
    coeffs: dict[str, str]


class AlgebraWire(BaseModel):
    model_config = ConfigDict(extra="forbid")
    basis: list[str]
    brackets: list[BracketWire] = Field(default_factory=list)

    @field_validator("basis")
    @classmethod
    def _unique_names(cls, names):
        if len(set(names)) != len(names):
            raise ValueError("basis names must be unique")
        return names


class SplittingWire(BaseModel):
    model_config = ConfigDict(extra="forbid")
    sl2: list[str]
    kernel: list[str] = Field(default_factory=list)

    @field_validator("sl2")
    @classmethod
    def _triple(cls, names):
        if len(names) != 3:
            raise ValueError("the acting block must list exactly three names")
        return names


class OperatorWire(BaseModel):
    """Images of a degree-+1 operator on the generator t and on the basis."""

    model_config = ConfigDict(extra="forbid")
    t: list[TermWire]
    basis: dict[str, list[TermWire]]


class ProblemFile(BaseModel):
    """A problem description: an algebra with an action, plus whatever the
    requested command needs (bivector, constant, splitting, operator)."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    algebra: AlgebraWire
    action: dict[str, PolyWire] = Field(default_factory=dict)
    lambda_: Optional[list[TermWire]] = Field(default=None, alias="lambda")
    epsilon: Optional[str] = None
    splitting: Optional[SplittingWire] = None
    omega_map: Optional[dict[str, list[TermWire]]] = None
    operator: Optional[OperatorWire] = None


# ---------------------------------------------------------------------------
# wire -> engine


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    cleaned = text.strip()
    if not _RATIONAL_RE.match(cleaned):
        raise InputParseError(
            f"not an exact rational: {text!r} (expected integer or p/q form)")
    try:
        return Fraction(cleaned)
    except ZeroDivisionError:
        raise InputParseError(f"zero denominator in rational {text!r}") from None


def poly_from_wire(wire: PolyWire) -> Poly:
    return Poly([parse_rational(c) for c in wire])


def coeff_from_wire(wire: CoeffWire, ring: CoefficientRing):
    if isinstance(wire, RatFuncWire):
        value = RatFunc(poly_from_wire(wire.num), poly_from_wire(wire.den))
        if ring is POLY_RING and not value.is_polynomial():
            raise InputParseError(
                "rational-function coefficient in a polynomial-ring problem; "
                "rerun with ring=ratfunc")
        return ring.convert(value)
    return ring.convert(poly_from_wire(wire))


def algebra_from_wire(wire: AlgebraWire) -> LieAlgebra:
    names = tuple(wire.basis)
    index = {n: i for i, n in enumerate(names)}
    structure: dict[tuple[int, int], dict[int, Fraction]] = {}
    for entry in wire.brackets:
        left, right = entry.pair
        for name in (left, right, *entry.coeffs):
            if name not in index:
                raise InputParseError(f"bracket references undeclared basis name {name!r}")
        key = (index[left], index[right])
        if key in structure:
            raise InputParseError(f"duplicate bracket entry for pair {entry.pair}")
        structure[key] = {index[k]: parse_rational(v) for k, v in entry.coeffs.items()}
    return LieAlgebra(names, structure)


def action_from_wire(g: LieAlgebra, action: dict[str, PolyWire]) -> Action:
    index = {n: i for i, n in enumerate(g.basis_names)}
    for name in action:
        if name not in index:
            raise InputParseError(f"action references undeclared basis name {name!r}")
    theta = [Poly() for _ in range(g.dim)]
    for name, coeffs in action.items():
        theta[index[name]] = poly_from_wire(coeffs)
    return validate_action(g, theta)


def multivector_from_wire(g: LieAlgebra, terms: list[TermWire], degree: int,
                          ring: CoefficientRing) -> Multivector:
    index = {n: i for i, n in enumerate(g.basis_names)}
    items = []
    for term in terms:
        try:
            idx = tuple(index[n] for n in term.indices)
        except KeyError as exc:
            raise InputParseError(f"unknown basis name {exc.args[0]!r} in a term") from None
        if len(idx) != degree:
            raise InputParseError(
                f"term arity {len(idx)} does not match expected degree {degree}")
        items.append((idx, coeff_from_wire(term.coeff, ring)))
    return Multivector.build(g.dim, degree, items, ring)


def split_from_wire(cp: CrossedProduct, wire: SplittingWire) -> SplitCrossedProduct:
    index = {n: i for i, n in enumerate(cp.algebra.basis_names)}
    try:
        triple = tuple(index[n] for n in wire.sl2)
        kernel = tuple(index[n] for n in wire.kernel)
    except KeyError as exc:
        raise InputParseError(f"splitting references undeclared name {exc.args[0]!r}") from None
    return SplitCrossedProduct(cp, triple, kernel)


def ring_from_name(name: str) -> CoefficientRing:
    if name == "poly":
        return POLY_RING
    if name == "ratfunc":
        return RATFUNC_RING
    raise InputParseError(f"unknown coefficient ring {name!r}")


# ---------------------------------------------------------------------------
# engine -> wire


def rational_to_wire(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def poly_to_wire(p: Poly) -> PolyWire:
    return [rational_to_wire(c) for c in p.coeffs]


def coeff_to_wire(c) -> CoeffWire:
    if isinstance(c, Poly):
        return poly_to_wire(c)
    if c.is_polynomial():
        return poly_to_wire(c.num)
    return RatFuncWire(num=poly_to_wire(c.num), den=poly_to_wire(c.den))


def multivector_to_wire(g: LieAlgebra, mv: Multivector) -> list[TermWire]:
    out = []
    for idx in sorted(mv.terms):
        out.append(TermWire(
            indices=[g.basis_names[i] for i in idx],
            coeff=coeff_to_wire(mv.terms[idx])))
    return out


# ---------------------------------------------------------------------------
# reports


class ViolationWire(BaseModel):
    pair: tuple[str, str]
    lhs: PolyWire
    rhs: PolyWire


class ValidateReport(BaseModel):
    command: Literal["validate"] = "validate"
    verdict: Literal["valid", "invalid"]
    dim: int
    violation: Optional[ViolationWire] = None
    detail: str = ""
    timing_ms: float = 0.0


class Type1WitnessWire(BaseModel):
    h: PolyWire
    lam: dict[str, str]


class Type2WitnessWire(BaseModel):
    b: str
    m: int
    lam: dict[str, str]
    mu: dict[str, str]


class Type3WitnessWire(BaseModel):
    x0: dict[str, str]
    x1: dict[str, str]
    x2: dict[str, str]


class ClassifyReport(BaseModel):
    command: Literal["classify"] = "classify"
    verdict: Literal["Trivial", "Type1", "Type2", "Type3"]
    rank: int
    type1: Optional[Type1WitnessWire] = None
    type2: Optional[Type2WitnessWire] = None
    type3: Optional[Type3WitnessWire] = None
    timing_ms: float = 0.0


class DybeReport(BaseModel):
    command: Literal["dybe"] = "dybe"
    verdict: Literal["yes", "no"]
    epsilon: str
    residual: list[TermWire]
    omega: Optional[list[TermWire]] = None
    omega_is_constant: bool = False
    reason: str = ""
    timing_ms: float = 0.0


class DualBracketEntry(BaseModel):
    pair: tuple[str, str]
    value: list[TermWire]


class DstarReport(BaseModel):
    command: Literal["dstar"] = "dstar"
    verdict: Literal["square-zero", "square-nonzero"]
    lambda_part: list[TermWire]
    epsilon: str
    square_counterexample: Optional[str] = None
    dual_anchor: dict[str, CoeffWire]
    dual_brackets: list[DualBracketEntry]
    dual_is_crossed_product: bool
    timing_ms: float = 0.0


class IdentityResult(BaseModel):
    name: str
    ok: bool


class SelftestReport(BaseModel):
    command: Literal["selftest"] = "selftest"
    verdict: Literal["pass", "fail"]
    total: int
    passed: int
    identities: list[IdentityResult]
    timing_ms: float = 0.0


Report = Union[ValidateReport, ClassifyReport, DybeReport, DstarReport, SelftestReport]
