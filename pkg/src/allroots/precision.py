"""Precision-parametric real arithmetic on top of mpmath contexts.

Every solver component works with scalars owned by a ``PrecisionContext``.
A context is an independent mpmath real context fixed to a requested number
of significant decimal digits, so two contexts never interfere and results
are reproducible bit for bit.
"""

from __future__ import annotations

import re

from mpmath.ctx_mp import MPContext

MIN_DECIMAL_DIGITS = 15

_NUMERAL = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?")


class ScalarParseError(ValueError):
    """Malformed decimal text; ``position`` is the first offending index."""

    def __init__(self, text: str, position: int):
        self.text = text
        self.position = position
        shown = text if len(text) <= 40 else text[:37] + "..."
        super().__init__(
            f"invalid decimal numeral {shown!r}: unexpected character at position {position}"
        )


class PrecisionConfigError(ValueError):
    """A precision/formatting request outside the context's capabilities."""


class PrecisionContext:
    """Working precision, in significant decimal digits (>= 15).

    Wraps a private mpmath context: plain arithmetic on scalars created
    here is correctly rounded at this precision, and the elementary
    functions are accurate to well under 2 ulp.
    """

    def __init__(self, decimal_digits: int = 30):
        if not isinstance(decimal_digits, int) or decimal_digits < MIN_DECIMAL_DIGITS:
            raise PrecisionConfigError(
                f"decimal_digits must be an integer >= {MIN_DECIMAL_DIGITS}, got {decimal_digits!r}"
            )
        self.decimal_digits = decimal_digits
        ctx = MPContext()
        ctx.dps = decimal_digits
        self._mp = ctx

    def __repr__(self) -> str:
        return f"PrecisionContext(decimal_digits={self.decimal_digits})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PrecisionContext)
            and other.decimal_digits == self.decimal_digits
        )

    def __hash__(self) -> int:
        return hash(("PrecisionContext", self.decimal_digits))

    # -- construction ------------------------------------------------------

    def mpf(self, value):
        """Convert an int, decimal string or scalar to this context."""
        return self._mp.mpf(value)

    def mpc(self, real=0, imag=0):
        return self._mp.mpc(real, imag)

    @property
    def zero(self):
        return self._mp.mpf(0)

    @property
    def one(self):
        return self._mp.mpf(1)

    @property
    def pi(self):
        return +self._mp.pi

    @property
    def inf(self):
        return self._mp.inf

    def power10(self, exponent: int):
        """10**exponent at context precision (exact for these magnitudes)."""
        return self._mp.mpf(10) ** exponent

    # -- elementary functions ---------------------------------------------

    def sin(self, x):
        return self._mp.sin(x)

    def cos(self, x):
        return self._mp.cos(x)

    def sinh(self, x):
        return self._mp.sinh(x)

    def cosh(self, x):
        return self._mp.cosh(x)

    def exp(self, x):
        return self._mp.exp(x)

    def log(self, x):
        return self._mp.log(x)

    def sqrt(self, x):
        return self._mp.sqrt(x)

    def floor(self, x):
        return self._mp.floor(x)

    def is_finite(self, x) -> bool:
        return self._mp.isfinite(x)


def parse_scalar(text: str, ctx: PrecisionContext):
    """Parse a signed decimal numeral, correctly rounded at ``ctx`` precision.

    Raises ScalarParseError pointing at the first character that breaks the
    numeral grammar (optional sign, digits with optional fraction, optional
    decimal exponent).
    """
    if not isinstance(text, str):
        raise ScalarParseError(repr(text), 0)
    match = _NUMERAL.match(text)
    if match is None:
        raise ScalarParseError(text, 0)
    if match.end() != len(text):
        raise ScalarParseError(text, match.end())
    return ctx.mpf(text)


def format_scalar(x, digits: int, ctx: PrecisionContext) -> str:
    """Fixed-point decimal with exactly ``digits`` fractional digits.

    Rounding is exact round-half-even on the scalar's rational value, so the
    output is independent of any intermediate arithmetic. "-0" is never
    produced.
    """
    if not isinstance(digits, int) or digits < 1:
        raise PrecisionConfigError(f"digits must be a positive integer, got {digits!r}")
    if digits > ctx.decimal_digits:
        raise PrecisionConfigError(
            f"requested {digits} fractional digits exceeds context precision "
            f"({ctx.decimal_digits} digits)"
        )
    if not ctx.is_finite(x):
        raise PrecisionConfigError(f"cannot format non-finite value {x!r}")

    sign, man, exp, _ = x._mpf_
    man = int(man)
    if man == 0:
        return "0." + "0" * digits

    # |x| * 10**digits as an exact integer quotient + remainder
    scaled = man * 10**digits
    if exp >= 0:
        quotient, remainder, divisor = scaled << exp, 0, 1
    else:
        divisor = 1 << (-exp)
        quotient, remainder = divmod(scaled, divisor)

    doubled = remainder * 2
    if doubled > divisor or (doubled == divisor and quotient & 1):
        quotient += 1

    body = str(quotient).rjust(digits + 1, "0")
    integer_part, fraction_part = body[:-digits], body[-digits:]
    negative = sign == 1 and quotient != 0
    return ("-" if negative else "") + integer_part + "." + fraction_part


def format_trimmed(x, digits: int, ctx: PrecisionContext) -> str:
    """format_scalar with trailing fractional zeros (and a bare dot) removed."""
    text = format_scalar(x, digits, ctx)
    text = text.rstrip("0").rstrip(".")
    return text if text not in ("", "-") else "0"
