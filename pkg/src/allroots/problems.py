"""Conversion from validated problem files to core solver objects."""

from __future__ import annotations

from dataclasses import dataclass

from .polynomials import (
    ALGEBRAIC,
    AlgebraicPoly,
    ExpPoly,
    FactoredSpec,
    StructuralError,
    TrigPoly,
)
from .precision import (
    PrecisionConfigError,
    PrecisionContext,
    ScalarParseError,
    parse_scalar,
)
from .schemas import HarmonicCoefficients, ProblemFile
from .solver import SolveConfig


class ProblemError(ValueError):
    """A problem file is structurally or numerically invalid."""

    def __init__(self, fieldname: str, message: str):
        self.fieldname = fieldname
        super().__init__(f"{fieldname}: {message}")


@dataclass
class BuiltProblem:
    family: str
    poly: object
    multiplicities: tuple
    initial: tuple
    initial_strings: tuple
    exact_roots: tuple | None  # known only for factored representations
    ctx: PrecisionContext
    config: SolveConfig


def _parse(text: str, ctx: PrecisionContext, fieldname: str):
    try:
        return parse_scalar(text, ctx)
    except ScalarParseError as err:
        raise ProblemError(fieldname, str(err)) from err


def _parse_list(items, ctx, fieldname):
    return tuple(_parse(text, ctx, f"{fieldname}[{index}]") for index, text in enumerate(items))


def build_problem(problem: ProblemFile) -> BuiltProblem:
    """Validate and convert a problem file; raises ProblemError on defects."""
    try:
        ctx = PrecisionContext(problem.precision_digits)
    except PrecisionConfigError as err:
        raise ProblemError("precision_digits", str(err)) from err

    tolerance = _parse(problem.tolerance, ctx, "tolerance")
    if tolerance <= 0:
        raise ProblemError("tolerance", "must be positive")

    representation = problem.representation
    exact_roots = None
    if representation.factored is not None:
        factored = representation.factored
        roots = _parse_list(factored.roots, ctx, "representation.factored.roots")
        scale = (
            ctx.one
            if factored.scale is None
            else _parse(factored.scale, ctx, "representation.factored.scale")
        )
        try:
            poly = FactoredSpec(
                family=problem.family,
                roots=roots,
                multiplicities=tuple(factored.multiplicities),
                scale=scale,
            )
        except StructuralError as err:
            raise ProblemError("representation.factored", str(err)) from err
        multiplicities = poly.multiplicities
        exact_roots = roots
        if problem.multiplicities is not None and tuple(problem.multiplicities) != multiplicities:
            raise ProblemError(
                "multiplicities",
                "must match representation.factored.multiplicities when both are given",
            )
    else:
        if problem.multiplicities is None:
            raise ProblemError(
                "multiplicities", "required when the representation is coefficients"
            )
        multiplicities = tuple(problem.multiplicities)
        coefficients = representation.coefficients
        if problem.family == ALGEBRAIC:
            if not isinstance(coefficients, list):
                raise ProblemError(
                    "representation.coefficients",
                    "the algebraic family takes a plain list of coefficient strings",
                )
            coeffs = _parse_list(coefficients, ctx, "representation.coefficients")
            try:
                poly = AlgebraicPoly(coeffs)
            except StructuralError as err:
                raise ProblemError("representation.coefficients", str(err)) from err
        else:
            if not isinstance(coefficients, HarmonicCoefficients):
                raise ProblemError(
                    "representation.coefficients",
                    f"the {problem.family} family takes an object with fields a0, a, b",
                )
            a0 = _parse(coefficients.a0, ctx, "representation.coefficients.a0")
            a = _parse_list(coefficients.a, ctx, "representation.coefficients.a")
            b = _parse_list(coefficients.b, ctx, "representation.coefficients.b")
            cls = TrigPoly if problem.family == "trigonometric" else ExpPoly
            try:
                poly = cls(a0=a0, a=a, b=b)
            except StructuralError as err:
                raise ProblemError("representation.coefficients", str(err)) from err

    if not all(m >= 1 for m in multiplicities):
        raise ProblemError("multiplicities", "must all be >= 1")

    initial = _parse_list(problem.initial, ctx, "initial")
    if len(initial) != len(multiplicities):
        raise ProblemError(
            "initial",
            f"length {len(initial)} does not match the {len(multiplicities)} multiplicities",
        )

    config = SolveConfig(
        precision=ctx,
        tolerance=tolerance,
        max_iterations=problem.max_iterations,
    )
    return BuiltProblem(
        family=problem.family,
        poly=poly,
        multiplicities=multiplicities,
        initial=initial,
        initial_strings=tuple(problem.initial),
        exact_roots=exact_roots,
        ctx=ctx,
        config=config,
    )
