import random
from decimal import Decimal

import pytest

from allroots import (
    PrecisionConfigError,
    PrecisionContext,
    ScalarParseError,
    format_scalar,
    format_trimmed,
    parse_scalar,
)


class TestParse:
    def test_zero_is_exact(self, ctx30):
        assert parse_scalar("0", ctx30) == 0

    def test_18_digit_value_round_trips(self, ctx30):
        text = "-1.99942363112391931"
        x = parse_scalar(text, ctx30)
        assert format_scalar(x, 17, ctx30) == text
        assert format_scalar(x, 18, ctx30) == "-1.999423631123919310"

    def test_power_of_ten(self, ctx30):
        x = parse_scalar("1e-18", ctx30)
        exact = ctx30.mpf(10) ** -18
        assert x > 0
        assert abs(x - exact) <= abs(exact) * ctx30.power10(1 - 30)

    @pytest.mark.parametrize("text,position", [
        ("", 0),
        ("abc", 0),
        ("--5", 0),
        ("1.2.3", 3),
        ("1e", 1),
        ("3,14", 1),
        ("5 ", 1),
    ])
    def test_malformed_text_reports_position(self, ctx30, text, position):
        with pytest.raises(ScalarParseError) as excinfo:
            parse_scalar(text, ctx30)
        assert excinfo.value.position == position


class TestFormat:
    def test_integer_three(self, ctx30):
        assert format_scalar(ctx30.mpf(3), 18, ctx30) == "3.000000000000000000"

    def test_zero_two_digits(self, ctx30):
        assert format_scalar(ctx30.zero, 2, ctx30) == "0.00"

    def test_two_point_five(self, ctx30):
        x = parse_scalar("2.5", ctx30)
        assert format_scalar(x, 18, ctx30) == "2.500000000000000000"

    def test_round_half_even(self, ctx30):
        # 0.125 and 0.375 are exact binary fractions; ties go to even
        assert format_scalar(parse_scalar("0.125", ctx30), 2, ctx30) == "0.12"
        assert format_scalar(parse_scalar("0.375", ctx30), 2, ctx30) == "0.38"

    def test_negative_zero_never_emitted(self, ctx30):
        tiny = parse_scalar("-0.0001", ctx30)
        assert format_scalar(tiny, 2, ctx30) == "0.00"

    def test_digits_above_context_precision_rejected(self, ctx30):
        with pytest.raises(PrecisionConfigError):
            format_scalar(ctx30.one, 31, ctx30)

    def test_digits_must_be_positive(self, ctx30):
        with pytest.raises(PrecisionConfigError):
            format_scalar(ctx30.one, 0, ctx30)

    def test_non_finite_rejected(self, ctx30):
        with pytest.raises(PrecisionConfigError):
            format_scalar(ctx30.inf, 4, ctx30)

    def test_trimmed(self, ctx30):
        assert format_trimmed(ctx30.mpf(3), 18, ctx30) == "3"
        assert format_trimmed(parse_scalar("-0.5", ctx30), 18, ctx30) == "-0.5"
        assert format_trimmed(ctx30.zero, 6, ctx30) == "0"


class TestContext:
    def test_minimum_digits_enforced(self):
        with pytest.raises(PrecisionConfigError):
            PrecisionContext(14)

    def test_contexts_are_independent(self):
        a = PrecisionContext(20)
        b = PrecisionContext(40)
        third_a = a.mpf(1) / 3
        third_b = b.mpf(1) / 3
        # the wider context resolves more of the repeating fraction
        assert third_a != third_b
        assert abs(third_b - third_a) < 1e-19


class TestRoundTrip:
    @pytest.mark.parametrize("digits", [5, 18, 25])
    def test_parse_format_round_trip(self, ctx30, digits):
        rng = random.Random(1234)
        bound = ctx30.power10(-digits)
        for _ in range(500):
            x = ctx30.mpf(f"{rng.uniform(-10, 10):.17g}")
            back = parse_scalar(format_scalar(x, digits, ctx30), ctx30)
            assert abs(back - x) <= bound

    def test_monotone_formatting(self, ctx30):
        rng = random.Random(99)
        values = sorted(ctx30.mpf(f"{rng.uniform(-50, 50):.17g}") for _ in range(300))
        formatted = [Decimal(format_scalar(v, 12, ctx30)) for v in values]
        assert formatted == sorted(formatted)


class TestElementaryIdentities:
    def test_sin_cos_identity(self, ctx30):
        rng = random.Random(7)
        eps = ctx30.power10(1 - ctx30.decimal_digits)
        for _ in range(1000):
            x = ctx30.mpf(f"{rng.uniform(-10, 10):.17g}")
            residue = abs(ctx30.sin(x) ** 2 + ctx30.cos(x) ** 2 - 1)
            assert residue <= 4 * eps

    def test_cosh_sinh_identity(self, ctx30):
        rng = random.Random(8)
        eps = ctx30.power10(1 - ctx30.decimal_digits)
        for _ in range(1000):
            x = ctx30.mpf(f"{rng.uniform(-5, 5):.17g}")
            scale = ctx30.cosh(x) ** 2
            residue = abs(ctx30.cosh(x) ** 2 - ctx30.sinh(x) ** 2 - 1)
            assert residue <= 4 * eps * scale
