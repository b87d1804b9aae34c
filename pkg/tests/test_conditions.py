import math

import pytest

from allroots import (
    StructuralError,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    find_constants,
    min_pairwise_gap,
    verify_initial_ball,
)

EX1 = {"roots": ("-2", "1", "3"), "mults": (2, 1, 3), "n": 6}
EX2 = {"roots": ("1", "2", "2.5"), "mults": (3, 2, 1), "n": 3}
EX3 = {"roots": ("-2", "3"), "mults": (2, 2), "n": 2}


def mpf_roots(ctx, example):
    return tuple(ctx.mpf(r) for r in example["roots"])


def float_oracle_t1(roots, mults, n, c, q):
    """Plain-float re-evaluation of every algebraic-family inequality."""
    d = min(abs(a - b) for i, a in enumerate(roots) for b in roots[i + 1:])
    rows = [(0.0, q), (q, 1.0), (0.0, c), (0.0, d - 2 * c)]
    for m in mults:
        mid = c * c * (n - 3 * m) + (n + (3 * d - 1) * m) * c
        rows.append((0.0, mid))
        rows.append((mid, d * d * m))
    return rows


def float_oracle_t2(roots, mults, n, c, q, xi):
    d = min(abs(a - b) for i, a in enumerate(roots) for b in roots[i + 1:])
    spread = max(abs(a - b) for a in roots for b in roots)
    big_a = min(abs(math.sin(xi / 2)), abs(math.sin(d / 2 - c)))
    rows = [(0.0, q), (q, 1.0), (0.0, c), (0.0, xi), (2 * c, xi),
            (0.0, d - 2 * c), (spread, 2 * math.pi - 2 * xi)]
    for m in mults:
        rows.append((c * c * (4 * n + m * (9 * big_a**2 / 8 - 2)), big_a**2 * m))
    return rows


def float_oracle_t3(roots, mults, n, c, q):
    d = min(abs(a - b) for i, a in enumerate(roots) for b in roots[i + 1:])
    s = math.sinh((d - 2 * c) / 2)
    rows = [(0.0, q), (q, 1.0), (0.0, c), (0.0, d - 2 * c),
            (math.cosh(c / 2) / 2 + c * abs(math.sinh(c / 2)) / 8, 6.0),
            (math.cosh(c / 2), 2.0)]
    for m in mults:
        rows.append((c * c * (4 * n + (s * s - 2) * m), s * s * m))
    return rows


def assert_rows_match_oracle(report, oracle_rows, rel=1e-10):
    assert len(report.rows) == len(oracle_rows)
    for row, (lhs, rhs) in zip(report.rows, oracle_rows):
        assert abs(float(row.lhs) - lhs) <= rel * max(1.0, abs(lhs))
        assert abs(float(row.rhs) - rhs) <= rel * max(1.0, abs(rhs))
        assert row.passed == (float(row.lhs) < float(row.rhs))
    assert report.satisfied == all(l < r for l, r in oracle_rows)


class TestTheorem1:
    def test_feasible_constants(self, ctx30):
        report = check_theorem1(mpf_roots(ctx30, EX1), EX1["mults"], 6,
                                "0.3", "0.5", ctx30)
        assert report.satisfied
        assert report.d == 2
        # the unit-multiplicity row: 3c^2 + 11c = 3.57 < 4
        unit_upper = report.rows[4 + 2 * 1 + 1]
        assert abs(float(unit_upper.lhs) - 3.57) < 1e-12
        assert float(unit_upper.rhs) == 4.0
        assert_rows_match_oracle(report, float_oracle_t1([-2, 1, 3], EX1["mults"], 6, 0.3, 0.5))

    def test_infeasible_at_larger_c(self, ctx30):
        report = check_theorem1(mpf_roots(ctx30, EX1), EX1["mults"], 6,
                                "0.4", "0.5", ctx30)
        assert not report.satisfied
        assert_rows_match_oracle(report, float_oracle_t1([-2, 1, 3], EX1["mults"], 6, 0.4, 0.5))

    def test_q_at_one_fails(self, ctx30):
        report = check_theorem1(mpf_roots(ctx30, EX1), EX1["mults"], 6, "0.3", "1", ctx30)
        assert not report.satisfied

    def test_inconsistent_n_rejected(self, ctx30):
        with pytest.raises(StructuralError):
            check_theorem1(mpf_roots(ctx30, EX1), EX1["mults"], 5, "0.3", "0.5", ctx30)

    def test_monotone_in_c_while_lower_bound_holds(self, ctx30):
        roots = mpf_roots(ctx30, EX1)
        c = ctx30.mpf("0.3")
        while c > ctx30.power10(-6):
            report = check_theorem1(roots, EX1["mults"], 6, c, "0.5", ctx30)
            lower_ok = all(r.passed for r in report.rows if r.label.startswith("0 < c^2"))
            if lower_ok:
                assert report.satisfied
            c = c / 2


class TestTheorem2:
    def test_feasible_constants(self, ctx30):
        report = check_theorem2(mpf_roots(ctx30, EX2), EX2["mults"], 3,
                                "0.05", "0.5", "2", ctx30)
        assert report.satisfied
        a_value = report.derived_constants["A"]
        assert abs(a_value - ctx30.sin(ctx30.mpf("0.2"))) < ctx30.power10(-25)
        assert_rows_match_oracle(
            report, float_oracle_t2([1, 2, 2.5], EX2["mults"], 3, 0.05, 0.5, 2.0))

    def test_xi_below_2c_fails(self, ctx30):
        report = check_theorem2(mpf_roots(ctx30, EX2), EX2["mults"], 3,
                                "0.05", "0.5", "0.05", ctx30)
        assert not report.satisfied
        failing = [r for r in report.rows if r.label == "2c < xi"]
        assert failing and not failing[0].passed

    def test_excessive_spread_fails(self, ctx30):
        roots = (ctx30.zero, ctx30.mpf("6.2"))
        report = check_theorem2(roots, (1, 1), 1, "0.01", "0.5", "0.1", ctx30)
        spread_row = [r for r in report.rows if "2pi - 2xi" in r.label][0]
        assert not spread_row.passed
        assert not report.satisfied


class TestTheorem3:
    def test_feasible_constants(self, ctx30):
        report = check_theorem3(mpf_roots(ctx30, EX3), EX3["mults"], 2,
                                "0.5", "0.5", ctx30)
        assert report.satisfied
        s = report.derived_constants["s"]
        assert abs(s - ctx30.sinh(ctx30.mpf(2))) < ctx30.power10(-25)
        per_root = report.rows[-1]
        assert abs(float(per_root.lhs) - 7.577) < 0.01
        assert abs(float(per_root.rhs) - 26.31) < 0.01
        assert_rows_match_oracle(report, float_oracle_t3([-2, 3], EX3["mults"], 2, 0.5, 0.5))

    def test_gap_constraint_fails_for_large_c(self, ctx30):
        report = check_theorem3(mpf_roots(ctx30, EX3), EX3["mults"], 2, "2.5", "0.5", ctx30)
        assert not report.satisfied

    def test_c_zero_boundary_fails(self, ctx30):
        report = check_theorem3(mpf_roots(ctx30, EX3), EX3["mults"], 2, "0", "0.5", ctx30)
        assert not report.satisfied


class TestFindConstants:
    def test_algebraic_example_feasible_above_point_three(self, ctx30):
        found = find_constants("T1", mpf_roots(ctx30, EX1), EX1["mults"], 6, ctx30)
        assert found is not None
        c, q, xi = found
        assert xi is None
        assert c >= ctx30.mpf("0.3")
        assert check_theorem1(mpf_roots(ctx30, EX1), EX1["mults"], 6, c, q, ctx30).satisfied

    def test_trig_example_feasible(self, ctx30):
        found = find_constants("T2", mpf_roots(ctx30, EX2), EX2["mults"], 3, ctx30)
        assert found is not None
        c, q, xi = found
        assert xi is not None
        assert check_theorem2(mpf_roots(ctx30, EX2), EX2["mults"], 3, c, q, xi, ctx30).satisfied

    def test_exp_example_feasible(self, ctx30):
        found = find_constants("T3", mpf_roots(ctx30, EX3), EX3["mults"], 2, ctx30)
        assert found is not None
        c, q, _ = found
        assert check_theorem3(mpf_roots(ctx30, EX3), EX3["mults"], 2, c, q, ctx30).satisfied

    def test_inflated_multiplicities_infeasible(self, ctx30):
        # with one unit multiplicity kept, inflating the partner drives the
        # n*c term past d^2 for every c on the grid
        roots = (ctx30.zero, ctx30.one)
        mults = (1, 40001)
        found = find_constants("T1", roots, mults, sum(mults), ctx30)
        assert found is None

    def test_single_root_not_certifiable(self, ctx30):
        assert find_constants("T1", (ctx30.one,), (2,), 2, ctx30) is None
        report = check_theorem1((ctx30.one,), (2,), 2, "0.1", "0.5", ctx30)
        assert not report.applicable
        assert not report.satisfied
        assert report.d is None


class TestVerifyInitialBall:
    def test_exact_roots_all_inside(self, ctx30):
        roots = mpf_roots(ctx30, EX1)
        assert verify_initial_ball(roots, roots, ctx30.mpf("0.3"), ctx30.mpf("0.5")) \
            == [True, True, True]

    def test_reference_initials_outside_small_ball(self, ctx30):
        initials = (ctx30.mpf(-3), ctx30.mpf("0.1"), ctx30.mpf(4))
        flags = verify_initial_ball(initials, mpf_roots(ctx30, EX1),
                                    ctx30.mpf("0.3"), ctx30.mpf("0.5"))
        assert flags == [False, False, False]

    def test_boundary_is_inclusive(self, ctx30):
        root = (ctx30.zero,)
        initial = (ctx30.mpf("0.15"),)
        assert verify_initial_ball(initial, root, ctx30.mpf("0.3"), ctx30.mpf("0.5")) == [True]


class TestGapComputation:
    def test_brute_force_and_permutation_invariance(self, ctx30):
        roots = (ctx30.mpf(5), ctx30.mpf(-1), ctx30.mpf(2), ctx30.mpf("2.25"))
        assert min_pairwise_gap(roots) == ctx30.mpf("0.25")
        assert min_pairwise_gap(roots[::-1]) == ctx30.mpf("0.25")
        assert min_pairwise_gap((ctx30.one,)) is None
