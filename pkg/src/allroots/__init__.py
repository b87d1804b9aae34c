"""Simultaneous refinement of all roots of algebraic, trigonometric and
exponential polynomials with known multiplicities.

The iteration corrects every approximation in parallel each sweep using the
multiplicity-scaled Newton step deflated by the other approximations, and
converges cubically.  Sufficient-condition checkers certify convergence
balls, and the empirical order of a run can be estimated from its trace.
"""

from .conditions import (
    TheoremReport,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    find_constants,
    min_pairwise_gap,
    verify_initial_ball,
)
from .corrections import (
    CollisionError,
    DenominatorUnderflowError,
    RootState,
    ehrlich_step_simple,
    log_deriv_q,
    step_general,
)
from .polynomials import (
    ALGEBRAIC,
    EXPONENTIAL,
    FAMILIES,
    TRIGONOMETRIC,
    AlgebraicPoly,
    ExpPoly,
    FactoredSpec,
    StructuralError,
    TrigPoly,
    eval_factored,
    eval_with_derivative,
    expand_factored,
)
from .precision import (
    PrecisionConfigError,
    PrecisionContext,
    ScalarParseError,
    format_scalar,
    format_trimmed,
    parse_scalar,
)
from .solver import (
    COLLISION,
    CONVERGED,
    DENOMINATOR_UNDERFLOW,
    DIVERGED,
    MAX_ITERATIONS_REACHED,
    STATUSES,
    InsufficientDataError,
    IterationTrace,
    SolveConfig,
    SolveResult,
    TraceRow,
    estimate_order,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "ALGEBRAIC",
    "COLLISION",
    "CONVERGED",
    "DENOMINATOR_UNDERFLOW",
    "DIVERGED",
    "EXPONENTIAL",
    "FAMILIES",
    "MAX_ITERATIONS_REACHED",
    "STATUSES",
    "TRIGONOMETRIC",
    "AlgebraicPoly",
    "CollisionError",
    "DenominatorUnderflowError",
    "ExpPoly",
    "FactoredSpec",
    "InsufficientDataError",
    "IterationTrace",
    "PrecisionConfigError",
    "PrecisionContext",
    "RootState",
    "ScalarParseError",
    "SolveConfig",
    "SolveResult",
    "StructuralError",
    "TheoremReport",
    "TraceRow",
    "TrigPoly",
    "check_theorem1",
    "check_theorem2",
    "check_theorem3",
    "ehrlich_step_simple",
    "estimate_order",
    "eval_factored",
    "eval_with_derivative",
    "expand_factored",
    "find_constants",
    "format_scalar",
    "format_trimmed",
    "log_deriv_q",
    "min_pairwise_gap",
    "parse_scalar",
    "solve",
    "step_general",
    "verify_initial_ball",
]
