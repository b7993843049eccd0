"""Self-verification suite behind the CLI `verify` command.

Each group re-checks one module's invariants against an independent route
(enumeration vs recursion, word oracle vs cumulant arithmetic, closed form vs
continued fraction, quadrature vs exact combinatorics).  Randomized checks
use a fixed seed so reports are byte-stable.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import convolution, cumulants, limit_laws, partitions, product_state, series

SEED = 20103


@dataclass
class CheckResult:
    group: str
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = "%s %s.%s" % (status, self.group, self.name)
        if self.detail:
            out += "  " + self.detail
        return out


def _rng():
    return random.Random(SEED)


def _rand_fraction(rng, span=5, den=4) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def _rand_moments(rng, order) -> cumulants.MomentSequence:
    return cumulants.MomentSequence(
        [Fraction(1)] + [_rand_fraction(rng) for _ in range(order)]
    )


def _rand_pair(rng, order) -> cumulants.MeasurePair:
    return cumulants.MeasurePair(_rand_moments(rng, order), _rand_moments(rng, order))


def check_partitions() -> list[CheckResult]:
    out = []
    counts_ok = all(
        len(partitions.enumerate_nc(n)) == partitions.catalan(n) for n in range(1, 11)
    )
    pair_ok = all(
        len(partitions.enumerate_nc2(2 * n)) == partitions.catalan(n)
        for n in range(1, 11)
    )
    out.append(CheckResult("partitions", "catalan_counts", counts_ok and pair_ok, "n<=10"))

    a_ok = True
    for n in range(1, 11):
        hist = [0] * (n + 1)
        for p in partitions.enumerate_nc2(2 * n):
            bc, _ = partitions.classify(p)
            hist[bc.inner_count] += 1
        a_ok = a_ok and all(hist[k] == partitions.count_a(n, k) for k in range(n + 1))
        a_ok = a_ok and sum(hist) == partitions.catalan(n)
    out.append(CheckResult("partitions", "inner_counts_vs_enumeration", a_ok, "n<=10"))

    bd_ok = all(partitions.count_a(n, 0) == 1 for n in range(1, 11)) and all(
        partitions.count_a(n, n - 1)
        == partitions.count_a(n, n - 2)
        == partitions.catalan(n - 1)
        for n in range(2, 11)
    )
    out.append(CheckResult("partitions", "inner_count_boundaries", bd_ok, "n<=10"))

    dec_ok = all(
        partitions.count_a(n, k + 1)
        == sum(
            partitions.count_a(l, l - 1) * partitions.count_a(n - l, k - l + 2)
            for l in range(1, k + 3)
        )
        for n in range(2, 11)
        for k in range(0, n - 2)
    )
    out.append(CheckResult("partitions", "first_touch_decomposition", dec_ok, "n<=10"))

    ts_ok = True
    for n in range(1, 10):
        t_hist = {}
        s_hist = {}
        for p in partitions.enumerate_nc(n):
            bc, _ = partitions.classify(p)
            nb = len(p.blocks)
            t_hist[nb] = t_hist.get(nb, 0) + 1
            key = (bc.outer_count, bc.inner_count)
            s_hist[key] = s_hist.get(key, 0) + 1
        for k in range(0, n + 1):
            ts_ok = ts_ok and partitions.count_t(n, k) == t_hist.get(k, 0)
            ts_ok = ts_ok and partitions.kreweras_t(n, k) == partitions.count_t(n, k)
        for k in range(0, n + 1):
            for l in range(0, n + 1):
                ts_ok = ts_ok and partitions.count_s(n, k, l) == s_hist.get((k, l), 0)
        ts_ok = ts_ok and sum(
            partitions.count_s(n, k, l) for k in range(n + 1) for l in range(n + 1)
        ) == partitions.catalan(n)
    out.append(CheckResult("partitions", "block_counts_vs_enumeration", ts_ok, "n<=9"))

    bij_ok = True
    for n in range(1, 9):
        for p in partitions.enumerate_nc2(2 * n):
            path = partitions.to_catalan_path(p)
            bij_ok = bij_ok and partitions.from_catalan_path(path) == p
            bc, _ = partitions.classify(p)
            bij_ok = bij_ok and path.diagonal_touches() == bc.outer_count
    out.append(CheckResult("partitions", "catalan_path_bijection", bij_ok, "2n<=16"))
    return out


def check_cumulants(trials=40) -> list[CheckResult]:
    rng = _rng()
    out = []

    rt_ok = True
    for _ in range(trials):
        order = rng.randint(1, 12)
        m = _rand_moments(rng, order)
        rt_ok = rt_ok and cumulants.moments_from_free_cumulants(
            cumulants.free_cumulants_from_moments(m)
        ) == m
        pair = _rand_pair(rng, order)
        R = cumulants.cfree_cumulants_from_moments(pair)
        rt_ok = rt_ok and cumulants.moments_from_cfree_cumulants(R, pair.nu) == pair.mu
    out.append(CheckResult("cumulants", "roundtrips_exact", rt_ok, "%d trials" % trials))

    ps_ok = True
    for _ in range(6):
        pair = _rand_pair(rng, 10)
        r = cumulants.free_cumulants_from_moments(pair.nu)
        R = cumulants.cfree_cumulants_from_moments(pair)
        for n in range(1, 11):
            ps_ok = ps_ok and cumulants.partition_sum_moment(r, R, n) == pair.mu[n]
    out.append(CheckResult("cumulants", "partition_sum_oracle", ps_ok, "n<=10"))

    diag_ok = True
    for _ in range(10):
        nu = _rand_moments(rng, 10)
        R = cumulants.cfree_cumulants_from_moments(cumulants.MeasurePair(nu, nu))
        diag_ok = diag_ok and R.values == cumulants.free_cumulants_from_moments(nu).values
    out.append(CheckResult("cumulants", "diagonal_collapse", diag_ok))

    bool_ok = True
    for _ in range(10):
        mu = _rand_moments(rng, 8)
        R = cumulants.cfree_cumulants_from_moments(cumulants.MeasurePair.with_delta0(mu))
        # only all-outer (interval) partitions contribute when nu = delta_0
        for n in range(1, 9):
            acc = Fraction(0)
            for p in partitions.enumerate_nc(n):
                bc, flags = partitions.classify(p)
                if bc.inner_count:
                    continue
                term = Fraction(1)
                for blk in p.blocks:
                    term *= R[len(blk)]
                acc += term
            bool_ok = bool_ok and acc == mu[n]
    out.append(CheckResult("cumulants", "boolean_interval_partitions", bool_ok, "n<=8"))
    return out


def check_oracle(pairs=6) -> list[CheckResult]:
    rng = _rng()
    out = []

    eq_ok = True
    for _ in range(pairs):
        p1 = _rand_pair(rng, 8)
        p2 = _rand_pair(rng, 8)
        conv = convolution.cfree_convolve(p1, p2)
        for n in range(1, 9):
            eq_ok = eq_ok and product_state.sum_moments_via_words(p1, p2, n) == conv.mu[n]
    out.append(CheckResult("oracle", "word_sums_equal_convolution", eq_ok, "n<=8, %d pairs" % pairs))

    def rand_centered_letters(fam, length, start_index):
        letters = []
        idx = start_index
        for _ in range(length):
            k = rng.randint(1, 2)
            nu = fam.pair(idx).nu
            coeffs = [Fraction(0)] * (k + 1)
            coeffs[k] = Fraction(1)
            coeffs[0] = -nu[k]
            letters.append((idx, tuple(coeffs)))
            idx = 3 - idx
        return tuple(letters)

    ev = None
    lem_ok = True
    for _ in range(12):
        fam = product_state.StateFamily(_rand_pair(rng, 12), _rand_pair(rng, 12))
        ev = product_state._Evaluator(fam, top_is_mu=True)
        # part 1: leading letters in different algebras factorize
        y1 = rand_centered_letters(fam, rng.randint(1, 3), 1)
        y2 = rand_centered_letters(fam, rng.randint(1, 3), 2)
        y1_star = tuple(reversed(y1))
        lhs = ev.eval_letters(y1_star + y2)
        rhs = ev.eval_letters(y1_star) * ev.eval_letters(y2)
        lem_ok = lem_ok and lhs == rhs
        # part 2: middle factor from the algebra that neither word starts with
        y1 = rand_centered_letters(fam, rng.randint(1, 2), 1)
        y2 = rand_centered_letters(fam, rng.randint(1, 2), 1)
        k = rng.randint(1, 2)
        a = (2, product_state._monomial(k))
        psi_a = ev._state(ev.nu, 2, a[1])
        phi_a = ev._state(ev.top, 2, a[1])
        y1_star = tuple(reversed(y1))
        lhs = ev.eval_letters(y1_star + (a,) + y2)
        # y1* and y2 both end/start in algebra 1: merge the junction letters
        f12 = ev.eval_letters(product_state._merge_letters(y1_star + y2))
        f1 = ev.eval_letters(y1_star)
        f2 = ev.eval_letters(y2)
        lem_ok = lem_ok and lhs == psi_a * f12 - psi_a * f1 * f2 + phi_a * f1 * f2
    out.append(CheckResult("oracle", "lemma_identities", lem_ok, "degree<=6"))

    collapse_ok = True
    for _ in range(6):
        nu1 = _rand_moments(rng, 8)
        nu2 = _rand_moments(rng, 8)
        fam = product_state.StateFamily(
            cumulants.MeasurePair(nu1, nu1), cumulants.MeasurePair(nu2, nu2)
        )
        for bits in range(2**5):
            indices = [1 + ((bits >> pos) & 1) for pos in range(5)]
            word = product_state.Word.from_indices(indices)
            collapse_ok = collapse_ok and product_state.eval_phi(
                word, fam
            ) == product_state.eval_psi(word, fam)
    out.append(CheckResult("oracle", "psi_phi_collapse", collapse_ok, "degree 5"))
    return out


def check_series(trials=20) -> list[CheckResult]:
    rng = _rng()
    out = []

    res_ok = True
    for _ in range(trials):
        pair = _rand_pair(rng, 12)
        A, B, C, D = series.abcd_from_pair(pair)
        r1, r2 = series.check_thm51(A, B, C, D)
        s1, s2 = series.check_thm52(pair)
        res_ok = res_ok and r1.is_zero() and r2.is_zero() and s1.is_zero() and s2.is_zero()
    out.append(CheckResult("series", "functional_equation_residuals", res_ok, "order 12"))

    add_ok = True
    for _ in range(8):
        p1 = _rand_pair(rng, 10)
        p2 = _rand_pair(rng, 10)
        conv = convolution.cfree_convolve(p1, p2)
        A1, _, C1, _ = series.abcd_from_pair(p1)
        A2, _, C2, _ = series.abcd_from_pair(p2)
        A, _, C, _ = series.abcd_from_pair(conv)
        add_ok = add_ok and A == A1 + A2 and C == C1 + C2
    out.append(CheckResult("series", "transform_additivity", add_ok))

    bool_ok = True
    for _ in range(8):
        mu = _rand_moments(rng, 10)
        pair = cumulants.MeasurePair.with_delta0(mu)
        _, _, C, D = series.abcd_from_pair(pair)
        bool_ok = bool_ok and D == (1 - C).reciprocal()
    out.append(CheckResult("series", "boolean_reciprocal_form", bool_ok))

    stab_ok = True
    worst = 0.0
    for fam, levels_fn in (
        ("gaussian", lambda d: series.gaussian_cf_levels(1.0, 1.0, d)),
        ("poisson", lambda d: series.poisson_cf_levels(1.0, 1.0, d)),
    ):
        for re_part in (-1.0, 0.5, 2.0, 3.5):
            for im_part in (2.0, 2.5, 3.0):
                z = complex(re_part, im_part)
                d = abs(series.cf_eval(levels_fn(40), z) - series.cf_eval(levels_fn(80), z))
                worst = max(worst, d)
                stab_ok = stab_ok and d < 1e-12
    out.append(
        CheckResult("series", "cf_depth_stability", stab_ok, "max|d40-d80|=%.2e" % worst)
    )

    cf_ok = True
    worst = 0.0
    for a, b, levels, G in (
        (1.0, 1.0, series.gaussian_cf_levels(1.0, 1.0, 64), limit_laws.gaussian_cauchy_G),
        (2.0, 1.0, series.gaussian_cf_levels(2.0, 1.0, 64), limit_laws.gaussian_cauchy_G),
        (1.0, 1.0, series.poisson_cf_levels(1.0, 1.0, 64), limit_laws.poisson_cauchy_G),
        (3.0, 1.0, series.poisson_cf_levels(3.0, 1.0, 64), limit_laws.poisson_cauchy_G),
    ):
        for re_part in (-1.0, 0.0, 1.5, 3.0, 4.0):
            for im_part in (1.0, 2.0):
                z = complex(re_part, im_part)
                d = abs(series.cf_eval(levels, z) - G(a, b, z))
                worst = max(worst, d)
                cf_ok = cf_ok and d < 1e-10
    out.append(
        CheckResult("series", "cf_matches_closed_form", cf_ok, "max err=%.2e" % worst)
    )
    return out


def check_laws() -> list[CheckResult]:
    out = []

    g_ok = True
    worst = 0.0
    gaussian_params = [
        (1.0, 1.0, Fraction(1)),
        (2.0, 1.0, Fraction(4)),
        (math.sqrt(2.0), 1.0, Fraction(2)),
        (1.0, 2.0, Fraction(1)),
    ]
    for alpha, beta, alpha_sq in gaussian_params:
        meas = limit_laws.gaussian_limit_measure(alpha, beta)
        for n in range(0, 9):
            exact = float(
                limit_laws.gaussian_limit_moments_from_squares(
                    alpha_sq, Fraction(beta).limit_denominator() ** 2, n
                )
            )
            err = abs(limit_laws.quadrature_moment(meas, n) - exact)
            worst = max(worst, err)
            g_ok = g_ok and err < 1e-7
        g_ok = g_ok and abs(limit_laws.total_mass(meas) - 1.0) < 1e-8
    out.append(CheckResult("laws", "gaussian_moments_and_mass", g_ok, "max err=%.2e" % worst))

    p_ok = True
    worst = 0.0
    for alpha, beta in ((1, 1), (Fraction(1, 2), Fraction(1, 2)), (3, 1), (1, 3)):
        meas = limit_laws.poisson_limit_measure(float(alpha), float(beta))
        for n in range(0, 7):
            exact = float(limit_laws.poisson_limit_moments(alpha, beta, n))
            err = abs(limit_laws.quadrature_moment(meas, n) - exact)
            worst = max(worst, err)
            p_ok = p_ok and err < 1e-7
        p_ok = p_ok and abs(limit_laws.total_mass(meas) - 1.0) < 1e-8
    out.append(CheckResult("laws", "poisson_moments_and_mass", p_ok, "max err=%.2e" % worst))

    region_ok = True
    for alpha in (0.5, 1.0, 1.4, 1.5, 2.0, 3.0):
        meas = limit_laws.gaussian_limit_measure(alpha, 1.0)
        has_atom = bool(meas.atoms)
        region_ok = region_ok and has_atom == (1.0 / alpha**2 < 0.5)
    for alpha, beta in ((0.5, 0.5), (1.0, 0.25), (3.0, 1.0), (1.0, 3.0), (1.5, 1.0), (2.0, 1.5)):
        meas = limit_laws.poisson_limit_measure(alpha, beta)
        has_zero = any(loc == 0.0 for loc, _ in meas.atoms)
        has_z0 = any(loc != 0.0 for loc, _ in meas.atoms)
        sqrt_b = math.sqrt(beta)
        region_ok = region_ok and has_zero == (beta < 1.0)
        expect_z0 = alpha != beta and (alpha < beta - sqrt_b or alpha > beta + sqrt_b)
        region_ok = region_ok and has_z0 == expect_z0
    out.append(CheckResult("laws", "atom_regions", region_ok))

    inv_ok = True
    worst = 0.0
    ladder_c = 0.0
    for family, alpha, beta, G in (
        ("gaussian", 1.0, 1.0, limit_laws.gaussian_cauchy_evaluator(1.0, 1.0)),
        ("gaussian", 2.0, 1.0, limit_laws.gaussian_cauchy_evaluator(2.0, 1.0)),
        ("poisson", 1.0, 1.0, limit_laws.poisson_cauchy_evaluator(1.0, 1.0)),
        ("poisson", 3.0, 1.0, limit_laws.poisson_cauchy_evaluator(3.0, 1.0)),
    ):
        meas = (
            limit_laws.gaussian_limit_measure(alpha, beta)
            if family == "gaussian"
            else limit_laws.poisson_limit_measure(alpha, beta)
        )
        lo, hi = meas.support
        width = hi - lo
        grid = [lo + width * (0.05 + 0.9 * i / 49) for i in range(50)]
        for t in grid:
            ref = meas.density_at(t)
            err = abs(series.stieltjes_density(G, t, 1e-4) - ref)
            worst = max(worst, err)
            inv_ok = inv_ok and err < 1e-2
            for eps, val in series.stieltjes_density_ladder(G, t):
                ladder_c = max(ladder_c, abs(val - ref) / eps)
    out.append(
        CheckResult(
            "laws",
            "stieltjes_recovery",
            inv_ok,
            "max err=%.2e at eps=1e-4; ladder C=%.2f" % (worst, ladder_c),
        )
    )

    ortho_ok = True
    worst = 0.0
    for alpha, beta in ((1, 1), (2, 1)):
        seq = limit_laws.ortho_polys(alpha, beta, 6)
        meas = limit_laws.gaussian_limit_measure(float(alpha), float(beta))
        for mdeg in range(6):
            for ndeg in range(mdeg + 1, 6):
                ip = sum(
                    w * seq.evaluate(mdeg, loc) * seq.evaluate(ndeg, loc)
                    for loc, w in meas.atoms
                )
                ip += limit_laws._integrate_against_density(
                    meas, lambda t: seq.evaluate(mdeg, t) * seq.evaluate(ndeg, t)
                )
                worst = max(worst, abs(ip))
                ortho_ok = ortho_ok and abs(ip) < 1e-7
    out.append(CheckResult("laws", "orthogonality", ortho_ok, "max |<p_m,p_n>|=%.2e" % worst))
    return out


def check_limits() -> list[CheckResult]:
    out = []

    clt_ok = True
    two_point = cumulants.MomentSequence.symmetric_two_point(1, 6)
    pair = cumulants.MeasurePair(two_point, two_point)
    errs = {}
    for N in (64, 128):
        sp = convolution.scaled_power(pair, convolution.ScalingSpec.clt(N))
        errs[N] = [
            (
                abs(float(sp.mu[n] - limit_laws.gaussian_limit_moments(1, 1, n))),
                abs(float(sp.nu[n] - limit_laws.gaussian_limit_moments(1, 1, n))),
            )
            for n in range(1, 7)
        ]
    for (e128_mu, e128_nu), (e64_mu, e64_nu) in zip(errs[128], errs[64]):
        clt_ok = clt_ok and e128_mu <= 0.6 * e64_mu and e128_nu <= 0.6 * e64_nu
    out.append(CheckResult("limits", "clt_convergence_rate", clt_ok, "N=64 vs 128, n<=6"))

    poi_ok = True
    errs = {}
    for N in (64, 128):
        mu_N = cumulants.MomentSequence([Fraction(1)] + [Fraction(1, N)] * 6)
        nu_N = cumulants.MomentSequence([Fraction(1)] + [Fraction(1, N)] * 6)
        sp = convolution.scaled_power(
            cumulants.MeasurePair(mu_N, nu_N), convolution.ScalingSpec(N)
        )
        errs[N] = [
            abs(float(sp.mu[n] - limit_laws.poisson_limit_moments(1, 1, n)))
            for n in range(1, 7)
        ]
    for e128, e64 in zip(errs[128], errs[64]):
        poi_ok = poi_ok and e128 <= 0.6 * e64
    out.append(CheckResult("limits", "poisson_convergence_rate", poi_ok, "N=64 vs 128, n<=6"))

    rn_ok = True
    beta = Fraction(2, 3)
    base = None
    for N in (100, 1000, 10000):
        nu_N = cumulants.MomentSequence([Fraction(1)] + [Fraction(beta, N)] * 6)
        r = cumulants.free_cumulants_from_moments(nu_N)
        worst = max(abs(float(N * r[n] - beta)) for n in range(1, 7))
        if base is None:
            base = worst * N  # empirical constant from the smallest N
        else:
            rn_ok = rn_ok and worst <= 1.05 * base / N
    out.append(
        CheckResult("limits", "poisson_cumulant_rate", rn_ok, "|N r_n - beta| <= C/N, C=%.2f" % base)
    )

    rep = limit_laws.cauchy_tail_limit_check(1.0, [2.0, 4.0, 8.0])
    out.append(
        CheckResult(
            "limits",
            "cauchy_tail_limit",
            rep["monotone_decreasing"],
            "sup distances " + ", ".join("%.3e" % d for d in rep["sup_distances"]),
        )
    )
    return out


GROUPS = {
    "partitions": check_partitions,
    "cumulants": check_cumulants,
    "oracle": check_oracle,
    "series": check_series,
    "laws": check_laws,
    "limits": check_limits,
}


def run(selector: str = "all") -> list[CheckResult]:
    if selector == "all":
        names = list(GROUPS)
    elif selector in GROUPS:
        names = [selector]
    else:
        raise ValueError("unknown verify group %r" % selector)
    results = []
    for name in names:
        results.extend(GROUPS[name]())
    return results
