"""Closed-form limit laws of the c-free central and Poisson limit theorems.

Each law is a pair of parameters (alpha, beta): alpha drives the mu-side,
beta the nu-side.  The module provides the exact combinatorial moments, the
closed-form measures (atoms plus an absolutely continuous density), their
Cauchy transforms, the associated orthogonal polynomials, and quadrature that
handles the inverse-square-root endpoint behaviour of the densities.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from scipy import integrate

from . import series as series_mod
from .partitions import count_a, count_s

MAX_QUADRATURE_N = 12
_ATOM_TINY = 1e-12


class QuadratureError(RuntimeError):
    """Adaptive integration failed to reach the requested accuracy."""


@dataclass(frozen=True)
class ClosedFormMeasure:
    """Atoms plus an absolutely continuous density with interval support."""

    family: str
    alpha: float
    beta: float
    atoms: tuple[tuple[float, float], ...]
    support: Optional[tuple[float, float]]
    density: Optional[Callable[[float], float]]

    def density_at(self, t: float) -> float:
        if self.density is None or self.support is None:
            return 0.0
        lo, hi = self.support
        if t <= lo or t >= hi:
            return 0.0
        return self.density(t)

    def atom_mass(self) -> float:
        return sum(w for _, w in self.atoms)


def gaussian_limit_moments_from_squares(alpha_sq, beta_sq, n: int) -> Fraction:
    """Exact n-th moment of the central-limit law, given squared parameters.

    Odd moments vanish; even moments are the inner-block-count sum
    sum_k a(m, k) * alpha^2(m-k) * beta^2k with n = 2m.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Fraction(1)
    if n % 2:
        return Fraction(0)
    a2, b2 = Fraction(alpha_sq), Fraction(beta_sq)
    m = n // 2
    return sum(
        (count_a(m, k) * a2 ** (m - k) * b2**k for k in range(m)), Fraction(0)
    )


def gaussian_limit_moments(alpha, beta, n: int) -> Fraction:
    """Exact n-th moment of the central-limit law with rational parameters."""
    return gaussian_limit_moments_from_squares(
        Fraction(alpha) ** 2, Fraction(beta) ** 2, n
    )


def poisson_limit_moments(alpha, beta, n: int) -> Fraction:
    """Exact n-th moment of the Poisson-limit law: sum s(n,k,l) alpha^k beta^l."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Fraction(1)
    a, b = Fraction(alpha), Fraction(beta)
    total = Fraction(0)
    for k in range(1, n + 1):
        for l in range(0, n - k + 1):
            cnt = count_s(n, k, l)
            if cnt:
                total += cnt * a**k * b**l
    return total


def gaussian_limit_measure(alpha: float, beta: float) -> ClosedFormMeasure:
    """Closed-form central-limit law: possible symmetric atom pair plus density.

    Atoms appear exactly when beta^2/alpha^2 < 1/2; each carries the residue
    of the Cauchy transform at its pole, (alpha^2 - 2 beta^2)/(2(alpha^2 -
    beta^2)), which is what makes the total mass 1 and matches the beta -> 0
    two-point limit.  For beta = 0 the continuous part collapses and the law
    is the two-point measure at +-alpha.
    """
    alpha, beta = float(alpha), float(beta)
    if alpha <= 0 or beta < 0:
        raise ValueError("need alpha > 0 and beta >= 0")
    if beta == 0.0:
        return ClosedFormMeasure(
            "gaussian", alpha, beta, ((-alpha, 0.5), (alpha, 0.5)), None, None
        )
    a2, b2 = alpha * alpha, beta * beta
    atoms = []
    if 2.0 * b2 < a2:
        c = 0.5 * (a2 - 2.0 * b2) / (a2 - b2)
        loc = a2 / math.sqrt(a2 - b2)
        if c > _ATOM_TINY:
            atoms = [(-loc, c), (loc, c)]

    def density(t, _a2=a2, _b2=b2):
        rad = 4.0 * _b2 - t * t
        if rad < 0.0:
            rad = 0.0
        return _a2 * math.sqrt(rad) / (2.0 * math.pi * (_a2 * _a2 - (_a2 - _b2) * t * t))

    return ClosedFormMeasure(
        "gaussian", alpha, beta, tuple(atoms), (-2.0 * beta, 2.0 * beta), density
    )


def poisson_limit_measure(alpha: float, beta: float) -> ClosedFormMeasure:
    """Closed-form Poisson-limit law: atoms at 0 and z_0 plus a density.

    alpha = beta uses the stated free-Poisson specialization (z_0 is singular
    there); the z_0 atom exists on alpha <= beta - sqrt(beta) or
    alpha >= beta + sqrt(beta), implemented literally.
    """
    alpha, beta = float(alpha), float(beta)
    if alpha <= 0 or beta <= 0:
        raise ValueError("need alpha > 0 and beta > 0")
    sqrt_b = math.sqrt(beta)
    lo, hi = (1.0 - sqrt_b) ** 2, (1.0 + sqrt_b) ** 2
    atoms = []
    if beta < 1.0:
        a_w = (1.0 - beta) / (1.0 + alpha - beta)
        if a_w > _ATOM_TINY:
            atoms.append((0.0, a_w))
    if alpha != beta:
        if alpha <= beta - sqrt_b or alpha >= beta + sqrt_b:
            z0 = alpha + alpha / (alpha - beta)
            b_w = (beta * z0 - alpha * alpha) / (z0 * (beta - alpha))
            if b_w > _ATOM_TINY:
                atoms.append((z0, b_w))

    def density(t, _a=alpha, _b=beta):
        rad = 4.0 * _b - (t - (1.0 + _b)) ** 2
        if rad < 0.0:
            rad = 0.0
        den = 2.0 * t * (t * (_b - _a) + _a * (1.0 - _b + _a))
        return _a * math.sqrt(rad) / (math.pi * den)

    return ClosedFormMeasure(
        "poisson", alpha, beta, tuple(sorted(atoms)), (lo, hi), density
    )


def _upper_sqrt(w1: complex, w2: complex) -> complex:
    # sqrt(w1*w2) with the branch that behaves like z at infinity on Im z > 0
    return cmath.sqrt(w1) * cmath.sqrt(w2)


def gaussian_cauchy_G(alpha: float, beta: float, z: complex) -> complex:
    """Cauchy transform of the central-limit law on the upper half-plane."""
    z = complex(z)
    if z.imag <= 0:
        raise ValueError("evaluation requires Im z > 0")
    a2, b2 = alpha * alpha, beta * beta
    root = _upper_sqrt(z - 2.0 * beta, z + 2.0 * beta)
    num = z * (0.5 * a2 - b2) + 0.5 * a2 * root
    den = z * z * (a2 - b2) - a2 * a2
    return num / den


def poisson_cauchy_G(alpha: float, beta: float, z: complex) -> complex:
    """Cauchy transform of the Poisson-limit law on the upper half-plane."""
    z = complex(z)
    if z.imag <= 0:
        raise ValueError("evaluation requires Im z > 0")
    w = z - (1.0 + beta)
    sqrt_b = math.sqrt(beta)
    root = _upper_sqrt(w - 2.0 * sqrt_b, w + 2.0 * sqrt_b)
    num = z * (2.0 * beta - alpha) + alpha * (1.0 - beta) - alpha * root
    den = 2.0 * z * (z * (beta - alpha) + alpha * (1.0 - beta + alpha))
    return num / den


def gaussian_cauchy_evaluator(alpha: float, beta: float) -> series_mod.CauchyEvaluator:
    return series_mod.CauchyEvaluator(
        "closed-form-gaussian(%g,%g)" % (alpha, beta),
        lambda z: gaussian_cauchy_G(alpha, beta, z),
    )


def poisson_cauchy_evaluator(alpha: float, beta: float) -> series_mod.CauchyEvaluator:
    return series_mod.CauchyEvaluator(
        "closed-form-poisson(%g,%g)" % (alpha, beta),
        lambda z: poisson_cauchy_G(alpha, beta, z),
    )


@dataclass(frozen=True)
class OrthoPolySeq:
    """Monic orthogonal polynomials p_0..p_n as coefficient rows (c_0..c_d)."""

    degree_cap: int
    rows: tuple[tuple[Fraction, ...], ...]

    def evaluate(self, degree: int, x: float) -> float:
        acc = 0.0
        for c in reversed(self.rows[degree]):
            acc = acc * x + float(c)
        return acc


def ortho_polys_from_squares(alpha_sq, beta_sq, n_max: int) -> OrthoPolySeq:
    """Orthogonal polynomials of the central-limit law from squared parameters.

    p_0 = 1, p_1 = x, p_2 = x^2 - alpha^2, then the three-term recurrence
    p_{n+1} = x p_n - beta^2 p_{n-1}.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    a2, b2 = Fraction(alpha_sq), Fraction(beta_sq)
    rows = [
        (Fraction(1),),
        (Fraction(0), Fraction(1)),
        (-a2, Fraction(0), Fraction(1)),
    ]
    for _ in range(2, n_max):
        prev, cur = rows[-2], rows[-1]
        nxt = [Fraction(0)] + list(cur)
        for i, c in enumerate(prev):
            nxt[i] -= b2 * c
        rows.append(tuple(nxt))
    return OrthoPolySeq(n_max, tuple(rows))


def ortho_polys(alpha, beta, n_max: int) -> OrthoPolySeq:
    return ortho_polys_from_squares(Fraction(alpha) ** 2, Fraction(beta) ** 2, n_max)


def _integrate_against_density(measure: ClosedFormMeasure, f) -> float:
    """Integral of f against the continuous part.

    Substituting t = center + radius*sin(theta) absorbs the square-root
    endpoint behaviour of the densities (and the 1/t factor when the support
    touches 0), leaving a smooth integrand for adaptive quadrature.
    """
    if measure.density is None or measure.support is None:
        return 0.0
    lo, hi = measure.support
    center, radius = 0.5 * (lo + hi), 0.5 * (hi - lo)

    def g(theta):
        t = center + radius * math.sin(theta)
        return f(t) * measure.density_at(t) * radius * math.cos(theta)

    with warnings.catch_warnings():
        # near machine precision quad reports roundoff; the estimate below
        # still guards the result
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        val, err = integrate.quad(
            g, -0.5 * math.pi, 0.5 * math.pi, epsabs=1e-13, epsrel=1e-12, limit=200
        )
    if err > 1e-7:
        raise QuadratureError("integration error estimate %.3e too large" % err)
    return val


def quadrature_moment(measure: ClosedFormMeasure, n: int) -> float:
    """n-th moment by atoms plus adaptive quadrature of the density."""
    if not 0 <= n <= MAX_QUADRATURE_N:
        raise ValueError("n must be in 0..%d" % MAX_QUADRATURE_N)
    atom_part = sum(w * loc**n for loc, w in measure.atoms)
    return atom_part + _integrate_against_density(measure, lambda t: t**n)


def total_mass(measure: ClosedFormMeasure) -> float:
    return quadrature_moment(measure, 0)


def cauchy_density(gamma: float, t: float) -> float:
    return gamma / (math.pi * (1.0 + gamma * gamma * t * t))


def cauchy_tail_limit_check(gamma: float, alphas, grid=None) -> dict:
    """Sup-distance between the central-limit density at beta = gamma*alpha^2
    and the Cauchy density, over a fixed grid, for each alpha.

    The distances should decrease along ascending alphas.
    """
    if gamma <= 0:
        raise ValueError("gamma must be positive")
    alphas = [float(a) for a in alphas]
    if sorted(alphas) != alphas:
        raise ValueError("alphas must be ascending")
    if grid is None:
        grid = [-3.0 + 6.0 * i / 120 for i in range(121)]
    distances = []
    for a in alphas:
        measure = gaussian_limit_measure(a, gamma * a * a)
        sup = max(
            abs(measure.density_at(t) - cauchy_density(gamma, t)) for t in grid
        )
        distances.append(sup)
    return {
        "gamma": gamma,
        "alphas": alphas,
        "sup_distances": distances,
        "monotone_decreasing": all(
            d2 < d1 for d1, d2 in zip(distances, distances[1:])
        ),
        "cauchy_density_at_zero": gamma / math.pi,
    }
