"""Service layer: one operation per endpoint, wrapped by a FastAPI app.

The operations are plain functions over the pydantic request/response
models; the HTTP endpoints and the command-line client are both thin
callers of these, so every transport sees identical behaviour.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .conditions import (
    CHECKERS,
    THEOREM_ALGEBRAIC,
    THEOREM_EXPONENTIAL,
    THEOREM_TRIGONOMETRIC,
    check_theorem2,
    find_constants,
)
from .polynomials import (
    ALGEBRAIC,
    EXPONENTIAL,
    TRIGONOMETRIC,
    StructuralError,
    expand_factored,
)
from .precision import (
    PrecisionConfigError,
    ScalarParseError,
    format_scalar,
    format_trimmed,
    parse_scalar,
)
from .problems import BuiltProblem, ProblemError, build_problem
from .schemas import (
    CheckRequest,
    CheckResponse,
    ExpandRequest,
    ExpandResponse,
    FoundConstants,
    HarmonicCoefficients,
    InequalityRowModel,
    OrderRequest,
    OrderResponse,
    ProblemFile,
    ResultFile,
    SolveRequest,
    TableRow,
    TheoremReportModel,
)
from .solver import InsufficientDataError, estimate_order, solve

_THEOREM_BY_FAMILY = {
    ALGEBRAIC: THEOREM_ALGEBRAIC,
    TRIGONOMETRIC: THEOREM_TRIGONOMETRIC,
    EXPONENTIAL: THEOREM_EXPONENTIAL,
}
_THEOREM_BY_FLAG = {
    "1": THEOREM_ALGEBRAIC,
    "2": THEOREM_TRIGONOMETRIC,
    "3": THEOREM_EXPONENTIAL,
}


def _run_solver(built: BuiltProblem):
    try:
        return solve(built.family, built.poly, built.multiplicities, built.initial,
                     built.config)
    except StructuralError as err:
        raise ProblemError("problem", str(err)) from err


def _diag_digits(ctx) -> int:
    return min(18, ctx.decimal_digits)


def run_solve(request: SolveRequest) -> ResultFile:
    built = build_problem(request.problem)
    ctx = built.ctx
    result = _run_solver(built)
    try:
        roots = [format_scalar(x, request.digits, ctx) for x in result.roots]
        table = [TableRow(k=0, values=list(built.initial_strings))]
        for row in result.trace.rows[1:]:
            table.append(
                TableRow(k=row.k, values=[format_scalar(x, request.digits, ctx)
                                          for x in row.values])
            )
    except PrecisionConfigError as err:
        raise ProblemError("digits", str(err)) from err
    return ResultFile(
        status=result.status,
        roots=roots,
        iterations_used=result.iterations_used,
        table=table,
    )


def _report_model(report, ctx) -> TheoremReportModel:
    digits = _diag_digits(ctx)

    def fmt(x):
        return format_trimmed(x, digits, ctx)

    return TheoremReportModel(
        theorem=report.theorem,
        applicable=report.applicable,
        satisfied=report.satisfied,
        d=None if report.d is None else fmt(report.d),
        derived_constants={k: fmt(v) for k, v in report.derived_constants.items()},
        initial_ball_radius=fmt(report.initial_ball_radius),
        rows=[
            InequalityRowModel(label=r.label, lhs=fmt(r.lhs), rhs=fmt(r.rhs),
                               passed=r.passed)
            for r in report.rows
        ],
        notes=list(report.notes),
    )


def _require_exact_roots(built: BuiltProblem):
    if built.exact_roots is None:
        raise ProblemError(
            "representation",
            "exact roots required: this operation needs the factored representation",
        )


def run_check(request: CheckRequest) -> CheckResponse:
    built = build_problem(request.problem)
    _require_exact_roots(built)
    ctx = built.ctx
    roots = built.exact_roots
    multiplicities = built.multiplicities

    theorem = (
        _THEOREM_BY_FAMILY[built.family]
        if request.theorem == "auto"
        else _THEOREM_BY_FLAG[request.theorem]
    )
    total = sum(multiplicities)
    n = total if theorem == THEOREM_ALGEBRAIC else total // 2
    digits = _diag_digits(ctx)

    if request.search:
        found = find_constants(theorem, roots, multiplicities, n, ctx)
        if found is None:
            return CheckResponse(search_performed=True, satisfied=False)
        c, q, xi = found
        if theorem == THEOREM_TRIGONOMETRIC:
            report = check_theorem2(roots, multiplicities, n, c, q, xi, ctx)
        else:
            report = CHECKERS[theorem](roots, multiplicities, n, c, q, ctx)
        return CheckResponse(
            report=_report_model(report, ctx),
            search_performed=True,
            found=FoundConstants(
                c=format_trimmed(c, digits, ctx),
                q=format_trimmed(q, digits, ctx),
                xi=None if xi is None else format_trimmed(xi, digits, ctx),
            ),
            satisfied=report.satisfied,
        )

    def constant(name, text):
        if text is None:
            raise ProblemError(name, f"required for theorem {theorem} unless --search is used")
        try:
            return parse_scalar(text, ctx)
        except ScalarParseError as err:
            raise ProblemError(name, str(err)) from err

    c = constant("c", request.c)
    q = constant("q", request.q)
    if theorem == THEOREM_TRIGONOMETRIC:
        xi = constant("xi", request.xi)
        report = check_theorem2(roots, multiplicities, n, c, q, xi, ctx)
    else:
        report = CHECKERS[theorem](roots, multiplicities, n, c, q, ctx)
    return CheckResponse(report=_report_model(report, ctx), satisfied=report.satisfied)


def run_expand(request: ExpandRequest) -> ExpandResponse:
    built = build_problem(request.problem)
    _require_exact_roots(built)
    ctx = built.ctx
    try:
        poly = expand_factored(built.poly, ctx)
    except StructuralError as err:
        raise ProblemError("representation.factored", str(err)) from err

    digits = ctx.decimal_digits

    def fmt(x):
        return format_trimmed(x, digits, ctx)

    if built.family == ALGEBRAIC:
        coefficients = [fmt(c) for c in poly.coeffs]
    else:
        coefficients = HarmonicCoefficients(
            a0=fmt(poly.a0), a=[fmt(v) for v in poly.a], b=[fmt(v) for v in poly.b]
        )
    return ExpandResponse(family=built.family, coefficients=coefficients)


def run_order(request: OrderRequest) -> OrderResponse:
    built = build_problem(request.problem)
    _require_exact_roots(built)
    result = _run_solver(built)
    try:
        slope = estimate_order(result.trace, built.exact_roots)
    except InsufficientDataError as err:
        return OrderResponse(
            status=result.status,
            iterations_used=result.iterations_used,
            detail=str(err),
        )
    return OrderResponse(
        status=result.status,
        iterations_used=result.iterations_used,
        order_estimate=format_trimmed(slope, 4, built.ctx),
    )


app = FastAPI(
    title="allroots",
    description="Simultaneous high-precision refinement of all roots of "
    "algebraic, trigonometric and exponential polynomials with known "
    "multiplicities, with certified-convergence condition checks.",
)


def _problem_detail(err: ProblemError) -> dict:
    return {"field": err.fieldname, "message": str(err)}


@app.post("/solve", response_model=ResultFile)
def solve_endpoint(request: SolveRequest) -> ResultFile:
    try:
        return run_solve(request)
    except ProblemError as err:
        raise HTTPException(status_code=422, detail=_problem_detail(err))


@app.post("/check", response_model=CheckResponse)
def check_endpoint(request: CheckRequest) -> CheckResponse:
    try:
        return run_check(request)
    except ProblemError as err:
        raise HTTPException(status_code=422, detail=_problem_detail(err))


@app.post("/expand", response_model=ExpandResponse)
def expand_endpoint(request: ExpandRequest) -> ExpandResponse:
    try:
        return run_expand(request)
    except ProblemError as err:
        raise HTTPException(status_code=422, detail=_problem_detail(err))


@app.post("/order", response_model=OrderResponse)
def order_endpoint(request: OrderRequest) -> OrderResponse:
    try:
        return run_order(request)
    except ProblemError as err:
        raise HTTPException(status_code=422, detail=_problem_detail(err))


@app.get("/health")
def health_endpoint() -> dict:
    return {"status": "ok"}
