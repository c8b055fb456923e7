"""Command-line front end: a thin client over the service layer.

Commands mirror the HTTP endpoints one-to-one; problems are JSON files.
Exit codes: 0 when a verdict was delivered (yes or no), 2 on parse
errors, 3 on precondition violations, 4 on internal contradictions.
"""

from __future__ import annotations

import argparse
import json
import sys

from pydantic import ValidationError

from .errors import (
    EngineError,
    InputParseError,
    InternalContradictionError,
    PreconditionError,
)
from .schemas import (
    ClassifyReport,
    DstarReport,
    DybeReport,
    ProblemFile,
    SelftestReport,
    TermWire,
    ValidateReport,
)
from .service import (
    run_classify,
    run_dstar,
    run_dybe,
    run_selftest_report,
    run_validate,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4


def _load_problem(path: str) -> ProblemFile:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise InputParseError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    try:
        return ProblemFile.model_validate(raw)
    except ValidationError as exc:
        raise InputParseError(f"{path}: {exc}") from None


def _poly_str(coeffs: list[str]) -> str:
    if not coeffs:
        return "0"
    parts = []
    for k, c in enumerate(coeffs):
        if c in ("0", "0/1"):
            continue
        unit = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
        parts.append(c if not unit else f"{c}*{unit}")
    return " + ".join(parts) if parts else "0"


def _coeff_str(coeff) -> str:
    if isinstance(coeff, list):
        return _poly_str(coeff)
    return f"({_poly_str(coeff.num)})/({_poly_str(coeff.den)})"


def _terms_str(terms: list[TermWire]) -> str:
    if not terms:
        return "0"
    return " + ".join(
        f"({_coeff_str(t.coeff)}) {'^'.join(t.indices) if t.indices else '1'}"
        for t in terms)


def _print_validate(report: ValidateReport):
    print(f"validate: {report.verdict} (dim {report.dim})")
    if report.violation is not None:
        v = report.violation
        print(f"  first violation on pair ({v.pair[0]}, {v.pair[1]}):")
        print(f"    theta([X, Y]) = {_poly_str(v.lhs)}")
        print(f"    [theta_X, theta_Y] = {_poly_str(v.rhs)}")
    elif report.detail:
        print(f"  {report.detail}")


def _print_classify(report: ClassifyReport):
    print(f"classify: {report.verdict} (rank {report.rank})")
    if report.type1 is not None:
        print(f"  h = {_poly_str(report.type1.h)}")
        print(f"  lambda = {report.type1.lam}")
    if report.type2 is not None:
        print(f"  b = {report.type2.b}, m = {report.type2.m}")
        print(f"  lambda = {report.type2.lam}")
        print(f"  mu = {report.type2.mu}")
    if report.type3 is not None:
        print(f"  x0 = {report.type3.x0}")
        print(f"  x1 = {report.type3.x1}")
        print(f"  x2 = {report.type3.x2}")


def _print_dybe(report: DybeReport):
    print(f"dybe: {report.verdict} (epsilon = {report.epsilon})")
    print(f"  residual = {_terms_str(report.residual)}")
    if report.omega is not None:
        constant = "constant" if report.omega_is_constant else "not constant"
        print(f"  casimir term = {_terms_str(report.omega)} ({constant})")
    if report.reason:
        print(f"  {report.reason}")


def _print_dstar(report: DstarReport):
    print(f"dstar: {report.verdict}")
    print(f"  lambda = {_terms_str(report.lambda_part)}")
    print(f"  epsilon = {report.epsilon}")
    if report.square_counterexample:
        print(f"  square fails on generator {report.square_counterexample}")
    flag = "yes" if report.dual_is_crossed_product else "no"
    print(f"  dual is a crossed product: {flag}")
    print("  dual anchor:")
    for name, val in report.dual_anchor.items():
        print(f"    {name} -> {_coeff_str(val)}")
    print("  dual brackets:")
    for entry in report.dual_brackets:
        print(f"    [{entry.pair[0]}, {entry.pair[1]}]* = {_terms_str(entry.value)}")


def _print_selftest(report: SelftestReport):
    print(f"selftest: {report.verdict} ({report.passed}/{report.total})")
    for item in report.identities:
        mark = "pass" if item.ok else "FAIL"
        print(f"  [{mark}] {item.name}")


def _emit(report, machine: bool, printer) -> int:
    if machine:
        print(report.model_dump_json())
    else:
        printer(report)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="rinehart",
        description="Exact crossed-product Lie algebra toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_file_command(name, help_text):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("file", help="JSON problem description")
        cmd.add_argument("--machine", action="store_true",
                         help="emit the report as JSON")
        cmd.add_argument("--ring", choices=("poly", "ratfunc"), default="poly",
                         help="coefficient ring for the computation")
        return cmd

    add_file_command("validate", "check the Jacobi identity and the morphism law")
    add_file_command("classify", "classify an action by the rank of its image")
    add_file_command("dybe", "test a bivector against the dynamical Yang-Baxter equation")
    add_file_command("dstar", "decompose a differential and compute the dual structure")

    st = sub.add_parser("selftest", help="run the built-in identity suite")
    st.add_argument("--machine", action="store_true")

    srv = sub.add_parser("serve", help="run the HTTP service")
    srv.add_argument("--host", default="127.0.0.1")
    srv.add_argument("--port", type=int, default=8000)

    args = parser.parse_args(argv)

    try:
        if args.command == "serve":
            import uvicorn

            from .service import app
            uvicorn.run(app, host=args.host, port=args.port)
            return EXIT_OK
        if args.command == "selftest":
            report = run_selftest_report()
            code = _emit(report, args.machine, _print_selftest)
            return code if report.verdict == "pass" else EXIT_INTERNAL
        problem = _load_problem(args.file)
        if args.command == "validate":
            return _emit(run_validate(problem, args.ring), args.machine, _print_validate)
        if args.command == "classify":
            return _emit(run_classify(problem, args.ring), args.machine, _print_classify)
        if args.command == "dybe":
            return _emit(run_dybe(problem, args.ring), args.machine, _print_dybe)
        if args.command == "dstar":
            return _emit(run_dstar(problem, args.ring), args.machine, _print_dstar)
        parser.error(f"unknown command {args.command!r}")
    except InputParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InternalContradictionError as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (PreconditionError, EngineError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
