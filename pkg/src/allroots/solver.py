"""Total-step (Jacobi) simultaneous iteration driver.

Every sweep computes all corrections from the current vector before any
replacement, matching the update formulas, whose right-hand sides only ever
reference the previous iterate.  A sweep whose corrections all stay within
the tolerance declares convergence without recording the (numerically
identical) new row, so ``iterations_used`` is the index of the last row
that actually moved.

Each trace row stores the maximum correction applied *from* it during the
following sweep, hence a converged result always ends on a row whose
``max_delta`` is at or below the tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .corrections import (
    CollisionError,
    DenominatorUnderflowError,
    RootState,
    step_general,
)
from .polynomials import ALGEBRAIC, FactoredSpec, StructuralError, eval_with_derivative
from .precision import PrecisionContext

CONVERGED = "converged"
MAX_ITERATIONS_REACHED = "max_iterations_reached"
COLLISION = "collision"
DENOMINATOR_UNDERFLOW = "denominator_underflow"
DIVERGED = "diverged"

STATUSES = (CONVERGED, MAX_ITERATIONS_REACHED, COLLISION, DENOMINATOR_UNDERFLOW, DIVERGED)


class InsufficientDataError(ValueError):
    """Too few usable trace rows to fit a convergence order."""


@dataclass
class SolveConfig:
    """Iteration control; floors default to 10^(10-digits) of the context."""

    precision: PrecisionContext
    tolerance: object = None
    max_iterations: int = 50
    denominator_floor: object = None
    collision_floor: object = None
    divergence_bound: object = None

    def __post_init__(self):
        if self.tolerance is None:
            self.tolerance = self.precision.power10(-20)
        if self.tolerance <= 0:
            raise StructuralError("tolerance must be positive")
        if self.max_iterations < 1:
            raise StructuralError("max_iterations must be >= 1")


@dataclass
class TraceRow:
    k: int
    values: tuple
    max_delta: object  # max correction applied from this row; None if unknown
    residuals: tuple


@dataclass
class IterationTrace:
    precision: PrecisionContext
    rows: list = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.rows)

    def errors_against(self, exact_roots):
        """Per-row max absolute coordinate error."""
        return [
            max(abs(v - r) for v, r in zip(row.values, exact_roots))
            for row in self.rows
        ]


@dataclass
class SolveResult:
    status: str
    roots: tuple
    iterations_used: int
    trace: IterationTrace
    order_estimate: object = None
    failure_index: int | None = None
    failure_pair: tuple | None = None


def _validate_problem(family, poly, multiplicities, initial):
    if getattr(poly, "family", None) != family:
        raise StructuralError(
            f"polynomial family {getattr(poly, 'family', None)!r} does not match {family!r}"
        )
    multiplicities = tuple(multiplicities)
    initial = tuple(initial)
    if len(initial) != len(multiplicities):
        raise StructuralError("initial and multiplicities must have equal length")
    total = sum(multiplicities)
    if isinstance(poly, FactoredSpec):
        if multiplicities != poly.multiplicities:
            raise StructuralError(
                "multiplicities must match the factored spec's multiplicities"
            )
    else:
        expected = poly.degree if family == ALGEBRAIC else 2 * poly.degree
        if total != expected:
            raise StructuralError(
                f"multiplicities sum to {total}, expected {expected} for this polynomial"
            )
    return multiplicities, initial


def solve(family, poly, multiplicities, initial, config: SolveConfig) -> SolveResult:
    """Refine all roots simultaneously; the trace is complete on any status."""
    multiplicities, initial = _validate_problem(family, poly, multiplicities, initial)
    ctx = config.precision
    m = len(initial)

    def residuals(values):
        out = []
        for x in values:
            value, _ = eval_with_derivative(poly, x, ctx)
            out.append(abs(value))
        return tuple(out)

    bound = config.divergence_bound
    if bound is None:
        bound = ctx.power10(6) * (1 + max(abs(x) for x in initial))

    trace = IterationTrace(precision=ctx)
    trace.rows.append(TraceRow(0, initial, None, residuals(initial)))

    status = MAX_ITERATIONS_REACHED
    failure_index = None
    failure_pair = None
    for sweep in range(1, config.max_iterations + 1):
        current = trace.rows[-1]
        state = RootState(current.values, multiplicities)
        try:
            candidate = tuple(
                step_general(
                    family, poly, i, state, ctx,
                    denominator_floor=config.denominator_floor,
                    collision_floor=config.collision_floor,
                )
                for i in range(m)
            )
        except CollisionError as err:
            status = COLLISION
            failure_index = err.i
            failure_pair = (err.i, err.j)
            break
        except DenominatorUnderflowError as err:
            status = DENOMINATOR_UNDERFLOW
            failure_index = err.index
            break

        delta = max(abs(new - old) for new, old in zip(candidate, current.values))
        current.max_delta = delta

        bad = [
            i for i, x in enumerate(candidate)
            if not ctx.is_finite(x) or abs(x) > bound
        ]
        if bad:
            trace.rows.append(TraceRow(sweep, candidate, None, residuals(candidate)))
            status = DIVERGED
            failure_index = bad[0]
            break

        if delta <= config.tolerance:
            status = CONVERGED
            break
        trace.rows.append(TraceRow(sweep, candidate, None, residuals(candidate)))

    final = trace.rows[-1]
    return SolveResult(
        status=status,
        roots=final.values,
        iterations_used=final.k,
        trace=trace,
        failure_index=failure_index,
        failure_pair=failure_pair,
    )


def estimate_order(trace: IterationTrace, exact_roots=None):
    """Least-squares slope of log e_{k+1} against log e_k.

    Errors are measured against the exact roots when given, otherwise
    against the final row as a proxy.  Rows whose error is at or below ten
    times the context's precision floor are unusable, as are pairs that do
    not strictly decrease; fewer than two usable pairs raise
    InsufficientDataError.
    """
    ctx = trace.precision
    rows = trace.rows
    if exact_roots is None:
        if len(rows) < 2:
            raise InsufficientDataError("trace has fewer than 2 rows")
        exact_roots = rows[-1].values
    errors = trace.errors_against(exact_roots)

    floor = 10 * ctx.power10(-ctx.decimal_digits)
    points = []
    for ek, ek1 in zip(errors, errors[1:]):
        if ek > floor and ek1 > floor and ek1 < ek:
            points.append((ctx.log(ek), ctx.log(ek1)))
    if len(points) < 2:
        raise InsufficientDataError(
            f"only {len(points)} usable consecutive error pairs (need >= 2)"
        )

    n = len(points)
    mean_x = sum(p[0] for p in points) / n
    mean_y = sum(p[1] for p in points) / n
    sxx = sum((p[0] - mean_x) ** 2 for p in points)
    sxy = sum((p[0] - mean_x) * (p[1] - mean_y) for p in points)
    if sxx == 0:
        raise InsufficientDataError("error pairs are degenerate (no spread)")
    return sxy / sxx
