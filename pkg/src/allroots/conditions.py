"""Sufficient-condition checkers for certified cubic convergence.

Each checker evaluates its published inequality system verbatim for given
exact roots, multiplicities and candidate constants, and returns a report
listing every inequality as a ``lhs < rhs`` row with both numeric sides, so
the overall verdict can be reproduced from the rows alone.  A grid search
over the constants is provided for when feasible values are wanted rather
than checked.

Some printed conditions are dimensionally odd (the algebraic per-root bound
mixes the gap d with the pure number 1) or use a constant far from tight;
they are implemented exactly as printed and flagged in the report notes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomials import StructuralError
from .precision import PrecisionContext

THEOREM_ALGEBRAIC = "T1"
THEOREM_TRIGONOMETRIC = "T2"
THEOREM_EXPONENTIAL = "T3"


@dataclass
class InequalityRow:
    """One strict inequality, normalized to the form lhs < rhs."""

    label: str
    lhs: object
    rhs: object
    passed: bool


@dataclass
class TheoremReport:
    theorem: str
    d: object  # min pairwise root gap; None for a single root
    derived_constants: dict
    rows: list
    satisfied: bool
    initial_ball_radius: object
    applicable: bool = True
    notes: tuple = ()


def min_pairwise_gap(roots):
    """Brute-force minimum |x_i - x_j| over all pairs; None for m = 1."""
    best = None
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            gap = abs(roots[i] - roots[j])
            if best is None or gap < best:
                best = gap
    return best


def _strict(label, lhs, rhs) -> InequalityRow:
    return InequalityRow(label, lhs, rhs, bool(lhs < rhs))


def _validated(roots, multiplicities):
    roots = tuple(roots)
    multiplicities = tuple(multiplicities)
    if len(roots) != len(multiplicities):
        raise StructuralError("roots and multiplicities must have equal length")
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if roots[i] == roots[j]:
                raise StructuralError("roots must be pairwise distinct")
    return roots, multiplicities


def _not_applicable(theorem, c, q, note):
    return TheoremReport(
        theorem=theorem,
        d=None,
        derived_constants={},
        rows=[],
        satisfied=False,
        initial_ball_radius=c * q,
        applicable=False,
        notes=(note,),
    )


_SINGLE_ROOT_NOTE = "single root: no pairwise gap d exists, conditions not applicable"


def check_theorem1(roots, multiplicities, n: int, c, q, ctx: PrecisionContext) -> TheoremReport:
    """Algebraic-family conditions for constants (c, q).

    Global: 0 < q < 1, c > 0, d - 2c > 0.  Per root i:
    0 < c^2 (n - 3 m_i) + (n + (3d - 1) m_i) c < d^2 m_i.
    """
    roots, multiplicities = _validated(roots, multiplicities)
    if n != sum(multiplicities):
        raise StructuralError(f"n = {n} but multiplicities sum to {sum(multiplicities)}")
    c, q = ctx.mpf(c), ctx.mpf(q)
    d = min_pairwise_gap(roots)
    if d is None:
        return _not_applicable(THEOREM_ALGEBRAIC, c, q, _SINGLE_ROOT_NOTE)

    rows = [
        _strict("0 < q", ctx.zero, q),
        _strict("q < 1", q, ctx.one),
        _strict("0 < c", ctx.zero, c),
        _strict("0 < d - 2c", ctx.zero, d - 2 * c),
    ]
    for i, m in enumerate(multiplicities):
        middle = c**2 * (n - 3 * m) + (n + (3 * d - 1) * m) * c
        rows.append(_strict(f"0 < c^2(n-3m_{i+1}) + (n+(3d-1)m_{i+1})c", ctx.zero, middle))
        rows.append(_strict(f"c^2(n-3m_{i+1}) + (n+(3d-1)m_{i+1})c < d^2 m_{i+1}",
                            middle, d**2 * m))
    return TheoremReport(
        theorem=THEOREM_ALGEBRAIC,
        d=d,
        derived_constants={},
        rows=rows,
        satisfied=all(row.passed for row in rows),
        initial_ball_radius=c * q,
        notes=("the per-root bound's (3d - 1) term mixes the gap scale d with "
               "the pure number 1; implemented as printed",),
    )


def check_theorem2(roots, multiplicities, n: int, c, q, xi, ctx: PrecisionContext) -> TheoremReport:
    """Trigonometric-family conditions for constants (c, q, xi).

    Global: 0 < q < 1, 0 < c, 2c < xi, d - 2c > 0, and all roots within an
    interval shorter than 2*pi - 2*xi.  With A = min(|sin(xi/2)|,
    |sin(d/2 - c)|), per root i: c^2 (4n + m_i (9A^2/8 - 2)) < A^2 m_i.
    """
    roots, multiplicities = _validated(roots, multiplicities)
    c, q, xi = ctx.mpf(c), ctx.mpf(q), ctx.mpf(xi)
    d = min_pairwise_gap(roots)
    if d is None:
        return _not_applicable(THEOREM_TRIGONOMETRIC, c, q, _SINGLE_ROOT_NOTE)

    spread = max(abs(a - b) for a in roots for b in roots)
    big_a = min(abs(ctx.sin(xi / 2)), abs(ctx.sin(d / 2 - c)))
    rows = [
        _strict("0 < q", ctx.zero, q),
        _strict("q < 1", q, ctx.one),
        _strict("0 < c", ctx.zero, c),
        _strict("0 < xi", ctx.zero, xi),
        _strict("2c < xi", 2 * c, xi),
        _strict("0 < d - 2c", ctx.zero, d - 2 * c),
        _strict("max|x_i - x_j| < 2pi - 2xi", spread, 2 * ctx.pi - 2 * xi),
    ]
    for i, m in enumerate(multiplicities):
        lhs = c**2 * (4 * n + m * (9 * big_a**2 / 8 - 2))
        rows.append(_strict(f"c^2(4n + m_{i+1}(9A^2/8 - 2)) < A^2 m_{i+1}",
                            lhs, big_a**2 * m))
    return TheoremReport(
        theorem=THEOREM_TRIGONOMETRIC,
        d=d,
        derived_constants={"A": big_a},
        rows=rows,
        satisfied=all(row.passed for row in rows),
        initial_ball_radius=c * q,
    )


def check_theorem3(roots, multiplicities, n: int, c, q, ctx: PrecisionContext) -> TheoremReport:
    """Exponential-family conditions for constants (c, q).

    Global: 0 < q < 1, c > 0, d - 2c > 0, cosh(c/2)/2 + c|sinh(c/2)|/8 < 6
    and cosh(c/2) < 2.  With s = sinh((d - 2c)/2), per root i:
    c^2 (4n + (s^2 - 2) m_i) < s^2 m_i.
    """
    roots, multiplicities = _validated(roots, multiplicities)
    c, q = ctx.mpf(c), ctx.mpf(q)
    d = min_pairwise_gap(roots)
    if d is None:
        return _not_applicable(THEOREM_EXPONENTIAL, c, q, _SINGLE_ROOT_NOTE)

    s = ctx.sinh((d - 2 * c) / 2)
    rows = [
        _strict("0 < q", ctx.zero, q),
        _strict("q < 1", q, ctx.one),
        _strict("0 < c", ctx.zero, c),
        _strict("0 < d - 2c", ctx.zero, d - 2 * c),
        _strict("cosh(c/2)/2 + c|sinh(c/2)|/8 < 6",
                ctx.cosh(c / 2) / 2 + c * abs(ctx.sinh(c / 2)) / 8, ctx.mpf(6)),
        _strict("cosh(c/2) < 2", ctx.cosh(c / 2), ctx.mpf(2)),
    ]
    for i, m in enumerate(multiplicities):
        lhs = c**2 * (4 * n + (s**2 - 2) * m)
        rows.append(_strict(f"c^2(4n + (s^2-2)m_{i+1}) < s^2 m_{i+1}", lhs, s**2 * m))
    return TheoremReport(
        theorem=THEOREM_EXPONENTIAL,
        d=d,
        derived_constants={"s": s},
        rows=rows,
        satisfied=all(row.passed for row in rows),
        initial_ball_radius=c * q,
        notes=("the upper bound 6 on cosh(c/2)/2 + c|sinh(c/2)|/8 is far from "
               "tight for any admissible c; implemented as printed",),
    )


CHECKERS = {
    THEOREM_ALGEBRAIC: check_theorem1,
    THEOREM_TRIGONOMETRIC: check_theorem2,
    THEOREM_EXPONENTIAL: check_theorem3,
}

_C_GRID_POINTS = 64
_C_GRID_DECADES = 4
_Q_GRID = tuple(f"0.{k}" for k in range(1, 10))
_XI_GRID_POINTS = 32


def find_constants(theorem: str, roots, multiplicities, n: int, ctx: PrecisionContext):
    """Grid-search feasible constants maximizing the ball radius c*q.

    c runs over 64 logarithmic points below d/2, q over 0.1..0.9, and (for
    the trigonometric theorem) xi over 32 linear points in (2c, pi).  Ties
    prefer smaller c, then smaller q.  Returns (c, q, xi) with xi = None
    except for the trigonometric theorem, or None when the grid finds no
    feasible point (including the single-root case, which no gap-based
    condition can certify).
    """
    if theorem not in CHECKERS:
        raise StructuralError(f"unknown theorem {theorem!r}")
    roots = tuple(roots)
    d = min_pairwise_gap(roots)
    if d is None:
        return None

    best = None  # (radius, -c, -q) maximized lexicographically
    for jc in range(_C_GRID_POINTS):
        exponent = ctx.mpf(-_C_GRID_DECADES * (jc + 1)) / _C_GRID_POINTS
        c = (d / 2) * ctx.mpf(10) ** exponent
        for q_text in _Q_GRID:
            q = ctx.mpf(q_text)
            if theorem == THEOREM_TRIGONOMETRIC:
                feasible_xi = None
                lo, hi = 2 * c, ctx.pi
                if lo < hi:
                    for l in range(1, _XI_GRID_POINTS + 1):
                        xi = lo + (hi - lo) * l / (_XI_GRID_POINTS + 1)
                        if check_theorem2(roots, multiplicities, n, c, q, xi, ctx).satisfied:
                            feasible_xi = xi
                            break
                if feasible_xi is None:
                    continue
                candidate = (c * q, -c, -q, (c, q, feasible_xi))
            else:
                report = CHECKERS[theorem](roots, multiplicities, n, c, q, ctx)
                if not report.satisfied:
                    continue
                candidate = (c * q, -c, -q, (c, q, None))
            if best is None or candidate[:3] > best[:3]:
                best = candidate
    return best[3] if best is not None else None


def verify_initial_ball(initials, roots, c, q):
    """Per-root flags |x_i^(0) - x_i| <= c*q (non-strict)."""
    initials = tuple(initials)
    roots = tuple(roots)
    if len(initials) != len(roots):
        raise StructuralError("initials and roots must have equal length")
    radius = c * q
    return [abs(x0 - x) <= radius for x0, x in zip(initials, roots)]
