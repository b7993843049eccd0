"""Acceptance suite: one test per release criterion, tolerances pinned.

Run with `pytest -v -s tests/test_acceptance.py` to see one line per
criterion.  Everything here runs without the figures package.
"""

import math
import random
from fractions import Fraction as F

import sympy

from cfreeprob import convolution as V
from cfreeprob import cumulants as C
from cfreeprob import limit_laws as L
from cfreeprob import partitions as P
from cfreeprob import product_state as W
from cfreeprob import series as S

SEED = 987123


def report(num, text):
    print("PASS criterion %02d: %s" % (num, text))


def rand_moments(rng, order, span=5, den=4):
    return C.MomentSequence(
        [F(1)] + [F(rng.randint(-span, span), rng.randint(1, den)) for _ in range(order)]
    )


def rand_pair(rng, order):
    return C.MeasurePair(rand_moments(rng, order), rand_moments(rng, order))


def test_criterion_01_partition_counts():
    for n in range(1, 11):
        closed = math.comb(2 * n, n) // (n + 1)
        assert len(P.enumerate_nc(n)) == closed
        assert len(P.enumerate_nc2(2 * n)) == closed
    report(1, "|NC(n)| and |NC_2(2n)| equal the Catalan closed form, n <= 10")


def test_criterion_02_inner_count_recursion():
    for n in range(1, 11):
        hist = [0] * (n + 1)
        for p in P.enumerate_nc2(2 * n):
            bc, _ = P.classify(p)
            hist[bc.inner_count] += 1
        assert hist == [P.count_a(n, k) for k in range(n + 1)]
        assert P.count_a(n, 0) == 1
    for n in range(2, 11):
        assert P.count_a(n, n - 1) == P.count_a(n, n - 2) == P.catalan(n - 1)
    report(2, "inner-block counts: recursion = enumeration (n <= 10), boundaries exact")


def test_criterion_03_block_count_recursions():
    for n in range(1, 10):
        t_hist = {}
        s_hist = {}
        for p in P.enumerate_nc(n):
            bc, _ = P.classify(p)
            t_hist[len(p.blocks)] = t_hist.get(len(p.blocks), 0) + 1
            key = (bc.outer_count, bc.inner_count)
            s_hist[key] = s_hist.get(key, 0) + 1
        for k in range(0, n + 1):
            assert P.count_t(n, k) == t_hist.get(k, 0) == P.kreweras_t(n, k)
        for (k, l), cnt in s_hist.items():
            assert P.count_s(n, k, l) == cnt
        for k in range(1, n + 1):
            for l in range(0, n):
                assert P.count_s(n, k, l) == s_hist.get((k, l), 0)
    for n in range(2, 10):
        for l in range(0, n):
            assert P.count_s(n, 1, l) == P.count_t(n - 1, l + 1)
    for n in range(1, 9):
        for k in range(0, n):
            for l in range(0, n):
                assert P.count_s(n, k + 1, l) == sum(
                    P.count_s(r, 1, j) * P.count_s(n - r, k, l - j)
                    for r in range(1, n + 1)
                    for j in range(0, l + 1)
                )
    report(3, "t/s recursions = Kreweras closed form = enumeration, n <= 9")


def test_criterion_04_roundtrips_and_worked_formulas():
    rng = random.Random(SEED)
    for _ in range(200):
        order = rng.randint(1, 12)
        m = rand_moments(rng, order)
        assert C.moments_from_free_cumulants(C.free_cumulants_from_moments(m)) == m
        pair = rand_pair(rng, order)
        R = C.cfree_cumulants_from_moments(pair)
        assert C.moments_from_cfree_cumulants(R, pair.nu) == pair.mu

    r1, r2, r3 = sympy.symbols("r1 r2 r3")
    assert sympy.expand(
        C._free_to_moments_raw([r1, r2, r3])[3] - (r3 + 3 * r2 * r1 + r1**3)
    ) == 0
    m1, m2, m3 = sympy.symbols("m1 m2 m3")
    assert sympy.expand(
        C._moments_to_free_raw([1, m1, m2, m3])[2] - (m3 - 3 * m2 * m1 + 2 * m1**3)
    ) == 0
    u1, u2, u3, n1, n2, n3 = sympy.symbols("u1 u2 u3 n1 n2 n3")
    R3 = C._moments_to_cfree_raw([1, u1, u2, u3], [1, n1, n2, n3])[2]
    assert sympy.expand(
        R3 - (u3 - 2 * u2 * u1 - u2 * n1 + u1**3 + u1**2 * n1)
    ) == 0
    report(4, "200 exact roundtrips (order <= 12); order-3 formulas hold symbolically")


def test_criterion_05_word_oracle_equivalence():
    rng = random.Random(SEED + 1)
    for _ in range(20):
        p1 = rand_pair(rng, 8)
        p2 = rand_pair(rng, 8)
        conv = V.cfree_convolve(p1, p2)
        for n in range(1, 9):
            assert W.sum_moments_via_words(p1, p2, n) == conv.mu[n]
    report(5, "word-oracle mu-moments equal convolution exactly, n <= 8, 20 pairs")


def test_criterion_06_functional_equation_residuals():
    rng = random.Random(SEED + 2)
    for _ in range(50):
        pair = rand_pair(rng, 12)
        r1, r2 = S.check_thm51(*S.abcd_from_pair(pair))
        assert r1.is_zero() and r2.is_zero()
        s1, s2 = S.check_thm52(pair)
        assert s1.is_zero() and s2.is_zero()
    report(6, "series functional-equation residuals vanish exactly, order 12, 50 pairs")


def test_criterion_07_gaussian_law():
    params = [
        (1.0, 1.0, F(1)),
        (2.0, 1.0, F(4)),
        (math.sqrt(2.0), 1.0, F(2)),
        (1.0, 2.0, F(1)),
    ]
    for alpha, beta, alpha_sq in params:
        meas = L.gaussian_limit_measure(alpha, beta)
        beta_sq = F(beta).limit_denominator() ** 2
        for n in range(0, 9):
            exact = float(L.gaussian_limit_moments_from_squares(alpha_sq, beta_sq, n))
            assert abs(L.quadrature_moment(meas, n) - exact) < 1e-7
        assert abs(L.total_mass(meas) - 1.0) < 1e-8
        expect_atoms = float(beta_sq) / float(alpha_sq) < 0.5
        assert bool(meas.atoms) == expect_atoms
        if expect_atoms:
            a2, b2 = float(alpha_sq), float(beta_sq)
            weight = (a2 - 2 * b2) / (2 * (a2 - b2))
            loc = a2 / math.sqrt(a2 - b2)
            assert sorted(meas.atoms) == [(-loc, weight), (loc, weight)]
    report(7, "gaussian law: moments within 1e-7, mass 1 +- 1e-8, atom region + weights")


def test_criterion_08_poisson_law():
    for alpha, beta in ((F(1), F(1)), (F(1, 2), F(1, 2)), (F(3), F(1)), (F(1), F(3))):
        meas = L.poisson_limit_measure(float(alpha), float(beta))
        for n in range(0, 7):
            exact = float(L.poisson_limit_moments(alpha, beta, n))
            assert abs(L.quadrature_moment(meas, n) - exact) < 1e-7
        assert abs(L.total_mass(meas) - 1.0) < 1e-8
    meas = L.poisson_limit_measure(3.0, 1.0)
    assert len(meas.atoms) == 1
    loc, weight = meas.atoms[0]
    assert loc == 4.5
    assert abs(weight - 0.5) < 1e-9
    report(8, "poisson law: moments within 1e-7, mass 1 +- 1e-8, z0 atom (4.5, 0.5)")


def test_criterion_09_transform_cross_checks():
    checks = [
        ("gaussian", 1.0, 1.0),
        ("gaussian", 2.0, 1.0),
        ("poisson", 1.0, 1.0),
        ("poisson", 3.0, 1.0),
    ]
    for family, alpha, beta in checks:
        if family == "gaussian":
            levels = S.gaussian_cf_levels(alpha, beta, 64)
            G_closed = lambda z: L.gaussian_cauchy_G(alpha, beta, z)
            meas = L.gaussian_limit_measure(alpha, beta)
            G_eval = L.gaussian_cauchy_evaluator(alpha, beta)
            res = (-2.0, -1.0, 0.0, 1.0, 2.0)
        else:
            levels = S.poisson_cf_levels(alpha, beta, 64)
            G_closed = lambda z: L.poisson_cauchy_G(alpha, beta, z)
            meas = L.poisson_limit_measure(alpha, beta)
            G_eval = L.poisson_cauchy_evaluator(alpha, beta)
            res = (0.0, 1.0, 2.0, 3.0, 4.0)
        points = [complex(re, im) for re in res for im in (1.0, 1.5, 2.0, 3.0)]
        assert len(points) == 20
        for z in points:
            assert abs(S.cf_eval(levels, z) - G_closed(z)) < 1e-10
        lo, hi = meas.support
        width = hi - lo
        for i in range(50):
            t = lo + width * (0.05 + 0.9 * i / 49)
            assert abs(S.stieltjes_density(G_eval, t, 1e-4) - meas.density_at(t)) < 1e-2
    report(9, "closed-form G = depth-64 fraction within 1e-10 at 20 points; inversion within 1e-2")


def test_criterion_10_limit_theorem_convergence():
    two_point = C.MomentSequence.symmetric_two_point(1, 6)
    clt_pair = C.MeasurePair(two_point, two_point)
    errors = {}
    for N in (64, 128):
        out = V.scaled_power(clt_pair, V.ScalingSpec.clt(N))
        errors[N] = [
            abs(float(out.mu[n] - L.gaussian_limit_moments(1, 1, n))) for n in range(1, 7)
        ] + [abs(float(out.nu[n] - L.gaussian_limit_moments(1, 1, n))) for n in range(1, 7)]
    assert all(e128 <= 0.6 * e64 for e128, e64 in zip(errors[128], errors[64]))

    errors = {}
    for N in (64, 128):
        mu_N = C.MomentSequence([F(1)] + [F(1, N)] * 6)
        nu_N = C.MomentSequence([F(1)] + [F(1, N)] * 6)
        out = V.scaled_power(C.MeasurePair(mu_N, nu_N), V.ScalingSpec(N))
        errors[N] = [
            abs(float(out.mu[n] - L.poisson_limit_moments(1, 1, n))) for n in range(1, 7)
        ] + [abs(float(out.nu[n] - L.poisson_limit_moments(1, 1, n))) for n in range(1, 7)]
    assert all(e128 <= 0.6 * e64 for e128, e64 in zip(errors[128], errors[64]))
    report(10, "prelimit error at N=128 is <= 0.6x the N=64 error, n <= 6, both setups")


def test_criterion_11_orthogonal_polynomials():
    for alpha, beta in ((1, 1), (2, 1)):
        seq = L.ortho_polys(alpha, beta, 5)
        meas = L.gaussian_limit_measure(float(alpha), float(beta))
        for m in range(6):
            for n in range(m + 1, 6):
                ip = sum(
                    w * seq.evaluate(m, loc) * seq.evaluate(n, loc)
                    for loc, w in meas.atoms
                )
                ip += L._integrate_against_density(
                    meas, lambda t: seq.evaluate(m, t) * seq.evaluate(n, t)
                )
                assert abs(ip) < 1e-7

    cheb_u = [
        (F(1),),
        (F(0), F(1)),
        (F(-1), F(0), F(1)),
        (F(0), F(-2), F(0), F(1)),
        (F(1), F(0), F(-3), F(0), F(1)),
        (F(0), F(3), F(0), F(-4), F(0), F(1)),
    ]
    for n, row in enumerate(cheb_u):
        for j in range(n + 3):
            theta = 0.3 + 2.5 * (j + 1) / (n + 4)
            val = sum(float(c) * (2 * math.cos(theta)) ** k for k, c in enumerate(row))
            assert abs(val - math.sin((n + 1) * theta) / math.sin(theta)) < 1e-12
    assert list(L.ortho_polys(1, 1, 5).rows) == cheb_u

    cheb_t = [
        (F(1),),
        (F(0), F(1)),
        (F(-1), F(0), F(1)),
        (F(0), F(-3, 2), F(0), F(1)),
        (F(1, 2), F(0), F(-2), F(0), F(1)),
        (F(0), F(5, 4), F(0), F(-5, 2), F(0), F(1)),
    ]
    b = math.sqrt(0.5)
    for n, row in enumerate(cheb_t[1:], start=1):
        for j in range(n + 3):
            theta = 0.21 + 2.6 * (j + 1) / (n + 4)
            val = sum(float(c) * (2 * b * math.cos(theta)) ** k for k, c in enumerate(row))
            assert abs(val - 2 * b**n * math.cos(n * theta)) < 1e-12
    assert list(L.ortho_polys_from_squares(F(1), F(1, 2), 5).rows) == cheb_t
    report(11, "orthogonality within 1e-7; Chebyshev U/T coefficient rows match")


def test_criterion_12_cauchy_limit():
    rep = L.cauchy_tail_limit_check(1.0, [2.0, 4.0, 8.0])
    d = rep["sup_distances"]
    assert d[0] > d[1] > d[2]
    report(12, "sup-distance to the Cauchy density decreases over alpha = 2, 4, 8")
