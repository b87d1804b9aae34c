"""Polynomial families and their evaluation.

Three coefficient families are supported:

* algebraic  ``x^n + a_1 x^(n-1) + ... + a_n``  (monic)
* trigonometric  ``a_0/2 + sum_l (a_l cos(lx) + b_l sin(lx))``
* exponential  ``a_0/2 + sum_l (a_l cosh(lx) + b_l sinh(lx))``

plus a factored product form holding roots with multiplicities, whose factor
is ``(x - r)`` for the algebraic family and ``sin((x - r)/2)`` resp.
``sinh((x - r)/2)`` for the other two.  Factored evaluation accumulates
value and derivative together, so both vanish exactly at a multiple root.
"""

from __future__ import annotations

from dataclasses import dataclass

from .precision import PrecisionContext

ALGEBRAIC = "algebraic"
TRIGONOMETRIC = "trigonometric"
EXPONENTIAL = "exponential"
FAMILIES = (ALGEBRAIC, TRIGONOMETRIC, EXPONENTIAL)


class StructuralError(ValueError):
    """A polynomial or factored spec violates a structural requirement."""


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise StructuralError(message)


@dataclass
class AlgebraicPoly:
    """Monic algebraic polynomial, coefficients in degree-descending order."""

    coeffs: tuple

    family = ALGEBRAIC

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        _require(len(coeffs) >= 2, "algebraic polynomial needs degree >= 1")
        lead = coeffs[0]
        _require(lead != 0, "leading coefficient must be nonzero")
        if lead != 1:
            coeffs = tuple(c / lead for c in coeffs)
        self.coeffs = coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def eval_with_derivative(self, x, ctx: PrecisionContext):
        """Horner scheme carrying the derivative alongside the value."""
        value = self.coeffs[0]
        deriv = ctx.zero
        for c in self.coeffs[1:]:
            deriv = deriv * x + value
            value = value * x + c
        return value, deriv


@dataclass
class _HarmonicPoly:
    """Shared representation for the cos/sin and cosh/sinh families."""

    a0: object
    a: tuple
    b: tuple

    def __post_init__(self):
        self.a = tuple(self.a)
        self.b = tuple(self.b)
        _require(len(self.a) == len(self.b), "a and b must have equal length")
        _require(len(self.a) >= 1, "degree must be >= 1")
        _require(
            self.a[-1] != 0 or self.b[-1] != 0,
            "at least one leading coefficient (a_n, b_n) must be nonzero",
        )

    @property
    def degree(self) -> int:
        return len(self.a)


class TrigPoly(_HarmonicPoly):
    """Trigonometric polynomial a0/2 + sum(a_l cos(lx) + b_l sin(lx))."""

    family = TRIGONOMETRIC

    def eval_with_derivative(self, x, ctx: PrecisionContext):
        value = self.a0 / 2
        deriv = ctx.zero
        for l, (al, bl) in enumerate(zip(self.a, self.b), start=1):
            s, c = ctx.sin(l * x), ctx.cos(l * x)
            value += al * c + bl * s
            deriv += l * (bl * c - al * s)
        return value, deriv


class ExpPoly(_HarmonicPoly):
    """Exponential polynomial a0/2 + sum(a_l cosh(lx) + b_l sinh(lx))."""

    family = EXPONENTIAL

    def eval_with_derivative(self, x, ctx: PrecisionContext):
        value = self.a0 / 2
        deriv = ctx.zero
        for l, (al, bl) in enumerate(zip(self.a, self.b), start=1):
            sh, ch = ctx.sinh(l * x), ctx.cosh(l * x)
            value += al * ch + bl * sh
            deriv += l * (al * sh + bl * ch)
        return value, deriv


@dataclass
class FactoredSpec:
    """Product form: scale * prod_j f((x - root_j)/s)^multiplicity_j."""

    family: str
    roots: tuple
    multiplicities: tuple
    scale: object = 1

    def __post_init__(self):
        _require(self.family in FAMILIES, f"unknown family {self.family!r}")
        self.roots = tuple(self.roots)
        self.multiplicities = tuple(self.multiplicities)
        _require(len(self.roots) >= 1, "at least one root is required")
        _require(
            len(self.roots) == len(self.multiplicities),
            "roots and multiplicities must have equal length",
        )
        _require(
            all(isinstance(m, int) and m >= 1 for m in self.multiplicities),
            "multiplicities must be positive integers",
        )
        for i in range(len(self.roots)):
            for j in range(i + 1, len(self.roots)):
                _require(self.roots[i] != self.roots[j], "roots must be pairwise distinct")
        if self.family != ALGEBRAIC:
            _require(
                sum(self.multiplicities) % 2 == 0,
                f"total multiplicity must be even for the {self.family} family",
            )

    @property
    def total_multiplicity(self) -> int:
        return sum(self.multiplicities)

    @property
    def degree(self) -> int:
        """Degree of the equivalent coefficient form."""
        total = self.total_multiplicity
        return total if self.family == ALGEBRAIC else total // 2

    def eval_with_derivative(self, x, ctx: PrecisionContext):
        """Dual (value, derivative) product accumulation.

        The product rule is carried through the factors directly instead of
        using the logarithmic derivative, so evaluation is total: at a root
        of multiplicity >= 2 both channels are exactly zero.
        """
        value = ctx.mpf(self.scale)
        deriv = ctx.zero
        for root, mult in zip(self.roots, self.multiplicities):
            if self.family == ALGEBRAIC:
                u, du = x - root, ctx.one
            elif self.family == TRIGONOMETRIC:
                t = (x - root) / 2
                u, du = ctx.sin(t), ctx.cos(t) / 2
            else:
                t = (x - root) / 2
                u, du = ctx.sinh(t), ctx.cosh(t) / 2
            factor_value = u**mult
            factor_deriv = mult * u ** (mult - 1) * du
            value, deriv = value * factor_value, deriv * factor_value + value * factor_deriv
        return value, deriv


def eval_with_derivative(poly, x, ctx: PrecisionContext):
    """(value, first derivative) of any supported representation at x."""
    return poly.eval_with_derivative(x, ctx)


def eval_factored(spec: FactoredSpec, x, ctx: PrecisionContext):
    return spec.eval_with_derivative(x, ctx)


def _convolve(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, pi in enumerate(p):
        for j, qj in enumerate(q):
            out[i + j] += pi * qj
    return out


def expand_factored(spec: FactoredSpec, ctx: PrecisionContext):
    """Expand a factored spec into its coefficient form.

    Algebraic specs expand by repeated linear-factor convolution.  The
    trigonometric family goes through half-angle complex exponentials: each
    factor sin((x - r)/2) is a two-term Laurent polynomial in w = e^(ix/2),
    the product is convolved, and the cos/sin coefficients are read off the
    even powers of w.  The imaginary residue must cancel and is checked, not
    silently dropped.  The exponential family uses the same construction
    with real e^(x/2), which involves no imaginary parts at all.
    """
    scale = ctx.mpf(spec.scale)
    if spec.family == ALGEBRAIC:
        coeffs = [scale]
        for root, mult in zip(spec.roots, spec.multiplicities):
            factor = [ctx.one, -ctx.mpf(root)]
            for _ in range(mult):
                coeffs = _convolve(coeffs, factor)
        return AlgebraicPoly(tuple(coeffs))

    total = spec.total_multiplicity
    if total % 2 != 0:
        raise StructuralError(
            f"total multiplicity must be even for the {spec.family} family"
        )
    n = total // 2

    # Laurent coefficients over w, exponents -total..total; index shift +total.
    laurent = [ctx.mpc(0) for _ in range(2 * total + 1)]
    if spec.family == TRIGONOMETRIC:
        laurent[total] = ctx.mpc(scale)
        inv_two_i = ctx.mpc(0, -ctx.mpf(1) / 2)  # 1/(2i)
        for root, mult in zip(spec.roots, spec.multiplicities):
            half = ctx.mpf(root) / 2
            up = ctx.mpc(ctx.cos(half), -ctx.sin(half)) * inv_two_i
            down = -ctx.mpc(ctx.cos(half), ctx.sin(half)) * inv_two_i
            for _ in range(mult):
                new = [ctx.mpc(0) for _ in range(2 * total + 1)]
                for k, coeff in enumerate(laurent):
                    if coeff == 0:
                        continue
                    new[k + 1] += coeff * up
                    new[k - 1] += coeff * down
                laurent = new
    else:
        laurent[total] = ctx.mpc(scale)
        for root, mult in zip(spec.roots, spec.multiplicities):
            half = ctx.mpf(root) / 2
            up = ctx.mpc(ctx.exp(-half) / 2)
            down = ctx.mpc(-ctx.exp(half) / 2)
            for _ in range(mult):
                new = [ctx.mpc(0) for _ in range(2 * total + 1)]
                for k, coeff in enumerate(laurent):
                    if coeff == 0:
                        continue
                    new[k + 1] += coeff * up
                    new[k - 1] += coeff * down
                laurent = new

    # c_l = coefficient of e^(ilx) (trig) or e^(lx) (exp), l = -n..n
    c = {l: laurent[total + 2 * l] for l in range(-n, n + 1)}
    magnitude = max(abs(v) for v in c.values())
    residue_floor = ctx.power10(5 - ctx.decimal_digits) * magnitude

    # real polynomial <=> c_0 real and c_{-l} = conj(c_l)
    residue = abs(c[0].imag)
    for l in range(1, n + 1):
        residue = max(residue, abs(c[l] - c[-l].conjugate()) / 2)
    if spec.family == TRIGONOMETRIC and residue > residue_floor:
        raise StructuralError(
            f"imaginary residue {residue} above tolerance after half-angle expansion"
        )

    a0 = 2 * c[0].real
    if spec.family == TRIGONOMETRIC:
        a = tuple(c[l].real + c[-l].real for l in range(1, n + 1))
        b = tuple(c[-l].imag - c[l].imag for l in range(1, n + 1))
        cls = TrigPoly
    else:
        a = tuple(c[l].real + c[-l].real for l in range(1, n + 1))
        b = tuple(c[l].real - c[-l].real for l in range(1, n + 1))
        cls = ExpPoly

    if max(abs(a[-1]), abs(b[-1])) <= residue_floor:
        raise StructuralError(
            "leading coefficients vanished after expansion (degenerate degree)"
        )
    return cls(a0=a0, a=a, b=b)
