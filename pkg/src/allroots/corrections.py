"""Per-root correction kernels for the simultaneous iteration.

The update for coordinate i is

    x_i  <-  x_i - m_i * v / (v' - v * S_i)

where (v, v') is the polynomial and its derivative at x_i, m_i the known
multiplicity, and S_i the logarithmic derivative of the deflation product
over the other approximations:

    algebraic      S_i = sum_{j != i} m_j / (x_i - x_j)
    trigonometric  S_i = (1/2) sum_{j != i} m_j * cot((x_i - x_j)/2)
    exponential    S_i = (1/2) sum_{j != i} m_j * coth((x_i - x_j)/2)

Near-coincident approximations make S_i singular and a vanishing
denominator makes the step wild; both conditions are reported as typed
errors instead of producing a garbage update.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomials import (
    ALGEBRAIC,
    EXPONENTIAL,
    FAMILIES,
    TRIGONOMETRIC,
    AlgebraicPoly,
    StructuralError,
    eval_with_derivative,
)
from .precision import PrecisionContext


class CollisionError(Exception):
    """Two approximations are closer than the collision floor."""

    def __init__(self, i: int, j: int, gap):
        self.i = i
        self.j = j
        self.gap = gap
        super().__init__(f"approximations {i} and {j} collide (gap {gap})")


class DenominatorUnderflowError(Exception):
    """The correction denominator v' - v*S fell below the floor."""

    def __init__(self, index: int, denominator):
        self.index = index
        self.denominator = denominator
        super().__init__(
            f"denominator underflow at coordinate {index}: {denominator}"
        )


@dataclass
class RootState:
    """Current approximation vector with its fixed multiplicity vector."""

    values: tuple
    multiplicities: tuple

    def __post_init__(self):
        self.values = tuple(self.values)
        self.multiplicities = tuple(self.multiplicities)
        if len(self.values) != len(self.multiplicities):
            raise StructuralError("values and multiplicities must have equal length")
        if len(self.values) < 1:
            raise StructuralError("at least one approximation is required")
        if not all(isinstance(m, int) and m >= 1 for m in self.multiplicities):
            raise StructuralError("multiplicities must be positive integers")

    def __len__(self) -> int:
        return len(self.values)


def default_floor(ctx: PrecisionContext):
    """Shared default for collision and denominator floors: 10^(10-digits)."""
    return ctx.power10(10 - ctx.decimal_digits)


def log_deriv_q(family: str, i: int, state: RootState, ctx: PrecisionContext,
                collision_floor=None):
    """Log-derivative of the deflation product at x_i (empty sum for m=1).

    Gaps are taken as-is: trigonometric gaps are not reduced modulo 2*pi, a
    gap within the floor of a nonzero multiple of 2*pi is a collision too
    (the half-angle sine vanishes there).
    """
    if family not in FAMILIES:
        raise StructuralError(f"unknown family {family!r}")
    if not 0 <= i < len(state):
        raise StructuralError(f"coordinate index {i} out of range")
    floor = default_floor(ctx) if collision_floor is None else collision_floor
    x = state.values[i]
    total = ctx.zero
    for j, (xj, mj) in enumerate(zip(state.values, state.multiplicities)):
        if j == i:
            continue
        gap = x - xj
        if abs(gap) < floor:
            raise CollisionError(i, j, gap)
        if family == ALGEBRAIC:
            total += mj / gap
        elif family == TRIGONOMETRIC:
            two_pi = 2 * ctx.pi
            wraps = ctx.floor(abs(gap) / two_pi + ctx.mpf(1) / 2)
            if wraps >= 1 and abs(abs(gap) - wraps * two_pi) < floor:
                raise CollisionError(i, j, gap)
            half = gap / 2
            total += mj * ctx.cos(half) / ctx.sin(half) / 2
        else:
            half = gap / 2
            total += mj * ctx.cosh(half) / ctx.sinh(half) / 2
    return total


def step_general(family: str, poly, i: int, state: RootState, ctx: PrecisionContext,
                 denominator_floor=None, collision_floor=None):
    """One multiplicity-aware correction of coordinate i.

    An exactly vanishing value short-circuits to the fixed point, so a root
    that has been hit is never disturbed, even when the denominator would
    underflow there.  The denominator floor is relative to |v'|: it fires
    when v' - v*S loses essentially all its digits to cancellation, not
    when the denominator is merely small (near a multiple root v' itself
    vanishes, legitimately).
    """
    if getattr(poly, "family", None) != family:
        raise StructuralError(
            f"polynomial family {getattr(poly, 'family', None)!r} does not match {family!r}"
        )
    floor = default_floor(ctx) if denominator_floor is None else denominator_floor
    x = state.values[i]
    value, deriv = eval_with_derivative(poly, x, ctx)
    if value == 0:
        return x
    log_deriv = log_deriv_q(family, i, state, ctx, collision_floor=collision_floor)
    denominator = deriv - value * log_deriv
    if denominator == 0 or abs(denominator) < floor * abs(deriv):
        raise DenominatorUnderflowError(i, denominator)
    return x - state.multiplicities[i] * value / denominator


def ehrlich_step_simple(poly: AlgebraicPoly, i: int, values, ctx: PrecisionContext,
                        denominator_floor=None, collision_floor=None):
    """Classic simple-roots update of coordinate i (all multiplicities one).

    Implemented directly from its own formula, independent of step_general,
    so the two can be checked against each other.
    """
    values = tuple(values)
    if len(values) != poly.degree:
        raise StructuralError(
            f"need exactly {poly.degree} approximations, got {len(values)}"
        )
    if not 0 <= i < len(values):
        raise StructuralError(f"coordinate index {i} out of range")
    den_floor = default_floor(ctx) if denominator_floor is None else denominator_floor
    col_floor = default_floor(ctx) if collision_floor is None else collision_floor

    x = values[i]
    value, deriv = poly.eval_with_derivative(x, ctx)
    if value == 0:
        return x
    total = ctx.zero
    for j, xj in enumerate(values):
        if j == i:
            continue
        gap = x - xj
        if abs(gap) < col_floor:
            raise CollisionError(i, j, gap)
        total += 1 / gap
    denominator = deriv - value * total
    if denominator == 0 or abs(denominator) < den_floor * abs(deriv):
        raise DenominatorUnderflowError(i, denominator)
    return x - value / denominator
