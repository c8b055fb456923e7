"""Service layer: one function per command, shared by the HTTP API and
the CLI, plus the FastAPI application wrapping them.

Each function takes a parsed ProblemFile and returns a typed report.
Engine errors propagate as rinehart.errors exceptions; the HTTP layer
maps them to 4xx responses and the CLI to exit codes.
"""

from __future__ import annotations

import time
from fractions import Fraction
from typing import Literal

from fastapi import FastAPI, HTTPException

from . import __version__
from .errors import EngineError, InputParseError, InternalContradictionError, PreconditionError
from .multivec import POLY_RING
from .liealg import LieAlgebra
from .action import ActionTag, CrossedProduct, classify
from .errors import JacobiViolationError, MorphismViolationError
from .schouten import GradedOperator, square_check
from .bialgebra import (
    DybeProblem,
    decompose_dstar,
    detect_split,
    dual_structures,
    is_dynamical_rmatrix,
)
from .schemas import (
    ClassifyReport,
    DstarReport,
    DualBracketEntry,
    DybeReport,
    IdentityResult,
    ProblemFile,
    SelftestReport,
    Type1WitnessWire,
    Type2WitnessWire,
    Type3WitnessWire,
    ValidateReport,
    ViolationWire,
    action_from_wire,
    algebra_from_wire,
    coeff_to_wire,
    multivector_from_wire,
    multivector_to_wire,
    parse_rational,
    poly_to_wire,
    rational_to_wire,
    ring_from_name,
    split_from_wire,
)
from .selftest import run_selftest

RingName = Literal["poly", "ratfunc"]


def _named_covector(g: LieAlgebra, values) -> dict[str, str]:
    return {name: rational_to_wire(Fraction(v))
            for name, v in zip(g.basis_names, values) if v != 0}


def run_validate(problem: ProblemFile, ring: RingName = "poly") -> ValidateReport:
    start = time.perf_counter()
    try:
        g = algebra_from_wire(problem.algebra)
    except JacobiViolationError as exc:
        return ValidateReport(
            verdict="invalid", dim=len(problem.algebra.basis),
            detail=str(exc), timing_ms=_ms(start))
    try:
        action_from_wire(g, problem.action)
    except MorphismViolationError as exc:
        i, j = exc.pair
        return ValidateReport(
            verdict="invalid", dim=g.dim,
            violation=ViolationWire(
                pair=(g.basis_names[i], g.basis_names[j]),
                lhs=poly_to_wire(exc.lhs), rhs=poly_to_wire(exc.rhs)),
            detail=str(exc), timing_ms=_ms(start))
    return ValidateReport(verdict="valid", dim=g.dim, timing_ms=_ms(start))


def run_classify(problem: ProblemFile, ring: RingName = "poly") -> ClassifyReport:
    start = time.perf_counter()
    g = algebra_from_wire(problem.algebra)
    action = action_from_wire(g, problem.action)
    at = classify(action)
    report = ClassifyReport(verdict=at.tag.value, rank=action.rank(), timing_ms=0.0)
    if at.tag is ActionTag.TYPE1:
        report.type1 = Type1WitnessWire(
            h=poly_to_wire(at.witness.h), lam=_named_covector(g, at.witness.lam))
    elif at.tag is ActionTag.TYPE2:
        report.type2 = Type2WitnessWire(
            b=rational_to_wire(at.witness.b), m=at.witness.m,
            lam=_named_covector(g, at.witness.lam),
            mu=_named_covector(g, at.witness.mu))
    elif at.tag is ActionTag.TYPE3:
        report.type3 = Type3WitnessWire(
            x0=_named_covector(g, at.witness.x0),
            x1=_named_covector(g, at.witness.x1),
            x2=_named_covector(g, at.witness.x2))
    report.timing_ms = _ms(start)
    return report


def _build_split(problem: ProblemFile, cp: CrossedProduct):
    if problem.splitting is not None:
        return split_from_wire(cp, problem.splitting)
    return detect_split(cp)


def run_dybe(problem: ProblemFile, ring: RingName = "poly") -> DybeReport:
    start = time.perf_counter()
    g = algebra_from_wire(problem.algebra)
    action = action_from_wire(g, problem.action)
    if problem.lambda_ is None or problem.epsilon is None:
        raise PreconditionError("the dybe command needs 'lambda' and 'epsilon'")
    ring_obj = ring_from_name(ring)
    cp = CrossedProduct(action, ring_obj)
    split = _build_split(problem, cp)
    lam = multivector_from_wire(g, problem.lambda_, 2, ring_obj)
    eps = parse_rational(problem.epsilon)
    verdict = is_dynamical_rmatrix(DybeProblem(split, lam, eps))
    return DybeReport(
        verdict="yes" if verdict.ok else "no",
        epsilon=rational_to_wire(eps),
        residual=multivector_to_wire(g, verdict.residual),
        omega=multivector_to_wire(g, verdict.omega) if verdict.omega is not None else None,
        omega_is_constant=verdict.omega_is_constant,
        reason=verdict.reason,
        timing_ms=_ms(start))


def run_dstar(problem: ProblemFile, ring: RingName = "poly") -> DstarReport:
    start = time.perf_counter()
    g = algebra_from_wire(problem.algebra)
    action = action_from_wire(g, problem.action)
    cp = CrossedProduct(action, POLY_RING)
    split = _build_split(problem, cp)

    if problem.operator is not None:
        op_wire = problem.operator
        image_of_t = multivector_from_wire(g, op_wire.t, 1, POLY_RING)
        images = []
        for name in g.basis_names:
            if name not in op_wire.basis:
                raise PreconditionError(f"operator image missing for basis name {name!r}")
            images.append(multivector_from_wire(g, op_wire.basis[name], 2, POLY_RING))
        dstar = GradedOperator.from_images(image_of_t, images)
    elif problem.lambda_ is not None and problem.epsilon is not None:
        lam_in = multivector_from_wire(g, problem.lambda_, 2, POLY_RING)
        eps_in = parse_rational(problem.epsilon)
        assembled = GradedOperator.from_rmatrix(cp, lam_in, eps_in)
        dstar = GradedOperator.from_images(assembled.image_of_t, assembled.image_of_basis)
    else:
        raise PreconditionError(
            "the dstar command needs either 'operator' or both 'lambda' and 'epsilon'")

    decomposition = decompose_dstar(split, dstar)
    square = square_check(dstar, cp)
    dual_ring = ring_from_name(ring)
    dual_cp = CrossedProduct(action, dual_ring) if dual_ring is not POLY_RING else cp
    dual = dual_structures(dual_cp, decomposition.lam.promote(dual_ring), decomposition.epsilon)
    return DstarReport(
        verdict="square-zero" if square.is_zero else "square-nonzero",
        lambda_part=multivector_to_wire(g, decomposition.lam),
        epsilon=rational_to_wire(decomposition.epsilon),
        square_counterexample=square.generator,
        dual_anchor={name: coeff_to_wire(val)
                     for name, val in zip(g.basis_names, dual.anchor)},
        dual_brackets=[
            DualBracketEntry(
                pair=(g.basis_names[i], g.basis_names[j]),
                value=multivector_to_wire(g, mv))
            for (i, j), mv in sorted(dual.bracket_table.items())],
        dual_is_crossed_product=dual.is_crossed_product,
        timing_ms=_ms(start))


def run_selftest_report() -> SelftestReport:
    start = time.perf_counter()
    results = run_selftest()
    passed = sum(1 for _, ok in results if ok)
    return SelftestReport(
        verdict="pass" if passed == len(results) else "fail",
        total=len(results),
        passed=passed,
        identities=[IdentityResult(name=name, ok=ok) for name, ok in results],
        timing_ms=_ms(start))


def _ms(start: float) -> float:
    return (time.perf_counter() - start) * 1000.0


# ---------------------------------------------------------------------------
# FastAPI application

app = FastAPI(
    title="rinehart",
    version=__version__,
    description=(
        "Exact verification service for crossed-product Lie algebra "
        "structures: action validation and classification, dynamical "
        "Yang-Baxter candidates, and bialgebra differentials."),
)


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except InputParseError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from None
    except InternalContradictionError as exc:
        raise HTTPException(status_code=500, detail=str(exc)) from None
    except PreconditionError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None
    except EngineError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from None


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.post("/validate", response_model=ValidateReport)
def validate_endpoint(problem: ProblemFile, ring: RingName = "poly") -> ValidateReport:
    return _guard(run_validate, problem, ring)


@app.post("/classify", response_model=ClassifyReport)
def classify_endpoint(problem: ProblemFile, ring: RingName = "poly") -> ClassifyReport:
    return _guard(run_classify, problem, ring)


@app.post("/dybe", response_model=DybeReport)
def dybe_endpoint(problem: ProblemFile, ring: RingName = "poly") -> DybeReport:
    return _guard(run_dybe, problem, ring)


@app.post("/dstar", response_model=DstarReport)
def dstar_endpoint(problem: ProblemFile, ring: RingName = "poly") -> DstarReport:
    return _guard(run_dstar, problem, ring)


@app.post("/selftest", response_model=SelftestReport)
def selftest_endpoint() -> SelftestReport:
    return _guard(run_selftest_report)
