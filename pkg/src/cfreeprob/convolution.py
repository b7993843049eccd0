"""Convolutions of measure pairs through cumulant additivity, plus dilation.

c-free convolution adds both cumulant families; free and boolean convolution
are the diagonal (nu = mu) and delta_0 (nu = point mass at 0) specializations.
`scaled_power` performs the N-fold convolution plus dilation in one shot at
the cumulant level, which keeps the central-limit experiment exact-rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cumulants import (
    CFreeCumulantSequence,
    FreeCumulantSequence,
    MeasurePair,
    MomentSequence,
    cfree_cumulants_from_moments,
    free_cumulants_from_moments,
    moments_from_cfree_cumulants,
    moments_from_free_cumulants,
)

SQRT_APPROX_DIGITS = 30


@dataclass(frozen=True)
class SqrtScaling:
    """Exact dilation factor sqrt(value) for a positive rational value.

    Used for the 1/sqrt(N) dilation of the central limit theorem: only even
    powers of the factor appear for centered inputs, so the computation stays
    exact.  Odd powers of an irrational root fall back to a rational
    approximation of sqrt(value) computed to SQRT_APPROX_DIGITS significant
    digits (far beyond 64-bit float precision).
    """

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))
        if self.value <= 0:
            raise ValueError("squared scaling factor must be positive")


def _exact_sqrt(q: Fraction) -> Fraction | None:
    num = math.isqrt(q.numerator)
    den = math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def _approx_sqrt(q: Fraction, digits: int = SQRT_APPROX_DIGITS) -> Fraction:
    scale = 10**digits
    return Fraction(math.isqrt(q.numerator * q.denominator * scale * scale), q.denominator * scale)


def _power_of_factor(lam, n: int) -> Fraction:
    """lam**n for a Fraction or SqrtScaling factor."""
    if isinstance(lam, SqrtScaling):
        half, rem = divmod(n, 2)
        out = lam.value**half
        if rem:
            root = _exact_sqrt(lam.value)
            if root is None:
                root = _approx_sqrt(lam.value)
            out *= root
        return out
    return Fraction(lam) ** n


@dataclass(frozen=True)
class ScalingSpec:
    """N-fold convolution followed by dilation with factor lam.

    lam may be an exact rational or a SqrtScaling; ScalingSpec.clt(N) builds
    the standard D_{sqrt(1/N)} of the central limit theorem.
    """

    copies: int
    lam: Fraction | SqrtScaling = Fraction(1)

    def __post_init__(self):
        if self.copies < 1:
            raise ValueError("copies must be >= 1")
        if not isinstance(self.lam, SqrtScaling):
            object.__setattr__(self, "lam", Fraction(self.lam))

    @classmethod
    def clt(cls, copies: int) -> "ScalingSpec":
        return cls(copies, SqrtScaling(Fraction(1, copies)))


def _add_values(a, b):
    return tuple(x + y for x, y in zip(a, b))


def cfree_convolve(p1: MeasurePair, p2: MeasurePair) -> MeasurePair:
    """c-free convolution: both cumulant families add."""
    if p1.order != p2.order:
        raise ValueError("orders must match (%d vs %d)" % (p1.order, p2.order))
    r = FreeCumulantSequence(
        _add_values(
            free_cumulants_from_moments(p1.nu).values,
            free_cumulants_from_moments(p2.nu).values,
        )
    )
    R = CFreeCumulantSequence(
        _add_values(
            cfree_cumulants_from_moments(p1).values,
            cfree_cumulants_from_moments(p2).values,
        )
    )
    nu = moments_from_free_cumulants(r)
    mu = moments_from_cfree_cumulants(R, nu)
    return MeasurePair(mu, nu)


def free_convolve(m1: MomentSequence, m2: MomentSequence) -> MomentSequence:
    """Free convolution of two moment sequences (free cumulants add)."""
    if m1.order != m2.order:
        raise ValueError("orders must match (%d vs %d)" % (m1.order, m2.order))
    r = FreeCumulantSequence(
        _add_values(
            free_cumulants_from_moments(m1).values,
            free_cumulants_from_moments(m2).values,
        )
    )
    return moments_from_free_cumulants(r)


def boolean_convolve(m1: MomentSequence, m2: MomentSequence) -> MomentSequence:
    """Boolean convolution: c-free convolution with both nu-slots pinned to delta_0."""
    out = cfree_convolve(MeasurePair.with_delta0(m1), MeasurePair.with_delta0(m2))
    return out.mu


def dilate_moments(m: MomentSequence, lam) -> MomentSequence:
    """Moments of the dilation t -> lam*t: m_n scales by lam**n."""
    return MomentSequence(
        [v * _power_of_factor(lam, n) for n, v in enumerate(m.moments)]
    )


def dilate(pair: MeasurePair, lam) -> MeasurePair:
    """Dilate both components of a pair by the factor lam."""
    return MeasurePair(dilate_moments(pair.mu, lam), dilate_moments(pair.nu, lam))


def scaled_power(pair: MeasurePair, spec: ScalingSpec) -> MeasurePair:
    """Dilated N-fold c-free convolution of a pair with itself.

    Works directly on cumulants: the n-th cumulants of the result are
    N * lam**n times those of the input, which equals iterating
    cfree_convolve N times and dilating once.
    """
    r = free_cumulants_from_moments(pair.nu)
    R = cfree_cumulants_from_moments(pair)
    factors = [spec.copies * _power_of_factor(spec.lam, n) for n in range(1, pair.order + 1)]
    r_new = FreeCumulantSequence(
        [f * v if v else Fraction(0) for f, v in zip(factors, r.values)]
    )
    R_new = CFreeCumulantSequence(
        [f * v if v else Fraction(0) for f, v in zip(factors, R.values)]
    )
    nu = moments_from_free_cumulants(r_new)
    mu = moments_from_cfree_cumulants(R_new, nu)
    return MeasurePair(mu, nu)
