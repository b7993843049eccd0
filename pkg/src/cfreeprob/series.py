"""Truncated formal power series and the generating-function side of c-free theory.

The moment/cumulant generating series of a pair (A and C for the cumulants,
B and D for the moments) satisfy two functional equations; `check_thm51` and
`check_thm52` compute their residuals with exact truncated arithmetic, so a
correct pair yields identically zero series.  Analytic evaluation (continued
fractions, Stieltjes inversion) is numeric and lives in `cf_eval`,
`CauchyEvaluator` and `stieltjes_density`.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .cumulants import (
    MeasurePair,
    cfree_cumulants_from_moments,
    free_cumulants_from_moments,
)

CF_DEFAULT_DEPTH = 64
_CF_TINY = 1e-13

STIELTJES_EPS_MIN = 1e-8
STIELTJES_EPS_MAX = 1e-2
STIELTJES_EPS_LADDER = (1e-3, 1e-4, 1e-5)


class NumericalDegeneracyError(ArithmeticError):
    """A continued-fraction denominator collapsed to (near) zero."""


class TruncatedSeries:
    """Power series coefficients c_0..c_N over exact rationals, hard truncation.

    Binary operations require equal orders; arithmetic never reads beyond the
    stored coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("need at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.coeffs[n]

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedSeries":
        return cls([Fraction(value)] + [Fraction(0)] * order)

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls.constant(0, order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def truncated(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1])

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise ValueError(
                    "orders must match (%d vs %d)" % (self.order, other.order)
                )
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + self._coerce(other)

    def __mul__(self, other):
        other = self._coerce(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ValueError("reciprocal needs a nonzero constant term")
        inv0 = 1 / a0
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = sum(
                self.coeffs[k] * out[n - k] for k in range(1, n + 1) if self.coeffs[k]
            )
            out.append(-inv0 * acc)
        return TruncatedSeries(out)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(z)); the inner series must have zero constant term."""
        inner = self._coerce(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs inner constant term 0")
        result = TruncatedSeries.constant(self.coeffs[0], self.order)
        power = TruncatedSeries.constant(1, self.order)
        for k in range(1, self.order + 1):
            power = power * inner
            if self.coeffs[k]:
                result = result + self.coeffs[k] * power
        return result

    def shift_up(self) -> "TruncatedSeries":
        """Multiply by z, truncating the top coefficient."""
        return TruncatedSeries((Fraction(0),) + self.coeffs[:-1])

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "TruncatedSeries(%r)" % (tuple(str(c) for c in self.coeffs),)


def abcd_from_pair(pair: MeasurePair):
    """Generating series (A, B, C, D) of a measure pair at its order.

    A carries the free cumulants of nu, C the c-free cumulants of the pair,
    B and D the nu- and mu-moments (constant term 1).
    """
    r = free_cumulants_from_moments(pair.nu)
    R = cfree_cumulants_from_moments(pair)
    A = TruncatedSeries((Fraction(0),) + r.values)
    C = TruncatedSeries((Fraction(0),) + R.values)
    B = TruncatedSeries(pair.nu.moments)
    D = TruncatedSeries(pair.mu.moments)
    return A, B, C, D


def check_thm51(A, B, C, D):
    """Residuals of the two functional equations linking (A, C) to (B, D).

    Returns (A(zB) + 1 - B, C(zB)*D - (D - 1)*B); both vanish identically
    when the four series come from one pair.
    """
    zB = B.shift_up()
    res1 = A.compose(zB) + 1 - B
    res2 = C.compose(zB) * D - (D - 1) * B
    return res1, res2


def check_thm52(pair: MeasurePair):
    """Residuals of the Cauchy/R-transform relations, restated for truncations.

    The fixed-point form of the nu-relation becomes B(z/(1+A)) = 1 + A, and
    the G-relation becomes D * (B - C(zB)) = B; both are checked with exact
    series arithmetic.  Returns the residual pair.
    """
    A, B, C, D = abcd_from_pair(pair)
    one_plus_A = A + 1
    inner = one_plus_A.reciprocal().shift_up()
    res1 = B.compose(inner) - one_plus_A
    zB = B.shift_up()
    res2 = D * (B - C.compose(zB)) - B
    return res1, res2


def cf_eval(levels, z: complex) -> complex:
    """Finite continued fraction 1/(z - s_1 - w_1/(z - s_2 - w_2/(...))).

    levels is a sequence of (shift, weight); a weight may be a callable of z
    for z-dependent partial numerators.  The fraction is truncated after the
    last level (tail 0), so the final weight is unused.
    """
    if not levels:
        raise ValueError("need at least one level")
    f = None
    for shift, weight in reversed(list(levels)):
        den = z - shift
        if f is not None:
            if abs(f) < _CF_TINY:
                raise NumericalDegeneracyError("continued fraction denominator ~ 0")
            w = weight(z) if callable(weight) else weight
            den -= w / f
        f = den
    if abs(f) < _CF_TINY:
        raise NumericalDegeneracyError("continued fraction denominator ~ 0")
    return 1.0 / f


def gaussian_cf_levels(alpha: float, beta: float, depth: int = CF_DEFAULT_DEPTH):
    """Levels of the Cauchy-transform fraction of the two-parameter Gaussian law."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    a2, b2 = alpha * alpha, beta * beta
    return [(0.0, a2)] + [(0.0, b2)] * (depth - 1)


def poisson_cf_levels(alpha: float, beta: float, depth: int = CF_DEFAULT_DEPTH):
    """Levels of the Cauchy-transform fraction of the two-parameter Poisson law.

    Partial numerators are proportional to z, hence callable weights.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    ratio = alpha / beta
    first = (-(ratio * (1.0 - beta)), lambda z, r=ratio: r * z)
    rest = (-(1.0 - beta), lambda z: z)
    return [first] + [rest] * (depth - 1)


class CauchyEvaluator:
    """Evaluates a Cauchy transform G on the upper half-plane, tagged by origin."""

    __slots__ = ("kind", "_fn")

    def __init__(self, kind: str, fn):
        self.kind = kind
        self._fn = fn

    def __call__(self, z: complex) -> complex:
        z = complex(z)
        if z.imag <= 0:
            raise ValueError("evaluation requires Im z > 0")
        return self._fn(z)

    @classmethod
    def from_moments(cls, m) -> "CauchyEvaluator":
        """Asymptotic series sum m_n / z^(n+1); diagnostic only, no tail control."""
        moments = [float(v) for v in m.moments]

        def fn(z):
            acc = 0.0 + 0.0j
            zpow = z
            for v in moments:
                acc += v / zpow
                zpow *= z
            return acc

        return cls("from-moments", fn)

    @classmethod
    def continued_fraction(cls, levels) -> "CauchyEvaluator":
        levels = list(levels)
        return cls(
            "continued-fraction(depth=%d)" % len(levels),
            lambda z: cf_eval(levels, z),
        )

    def __repr__(self):
        return "CauchyEvaluator(%r)" % (self.kind,)


def stieltjes_density(G, t: float, eps: float) -> float:
    """-(1/pi) Im G(t + i*eps); tends to the a.c. density as eps -> 0."""
    if not STIELTJES_EPS_MIN <= eps <= STIELTJES_EPS_MAX:
        raise ValueError(
            "eps must be in [%g, %g]" % (STIELTJES_EPS_MIN, STIELTJES_EPS_MAX)
        )
    return -G(complex(t, eps)).imag / math.pi


def stieltjes_density_ladder(G, t: float, eps_ladder=STIELTJES_EPS_LADDER):
    """Density estimates at each eps of the ladder; reported, not extrapolated."""
    return [(eps, stieltjes_density(G, t, eps)) for eps in eps_ladder]
