"""Closed-form limit laws: moments, masses, atoms, transforms, polynomials."""

import math
from fractions import Fraction as F

import pytest

from cfreeprob import limit_laws as L
from cfreeprob import partitions as P
from cfreeprob import series as S

GAUSSIAN_PARAMS = [
    (1.0, 1.0, F(1)),
    (2.0, 1.0, F(4)),
    (math.sqrt(2.0), 1.0, F(2)),
    (1.0, 2.0, F(1)),
]
POISSON_PARAMS = [(F(1), F(1)), (F(1, 2), F(1, 2)), (F(3), F(1)), (F(1), F(3))]


class TestExactMoments:
    def test_gaussian_small_cases(self):
        a, b = F(3), F(2)
        assert L.gaussian_limit_moments(a, b, 2) == a**2
        assert L.gaussian_limit_moments(a, b, 4) == a**4 + a**2 * b**2
        assert L.gaussian_limit_moments(a, b, 3) == 0
        assert L.gaussian_limit_moments(a, b, 0) == 1

    def test_gaussian_nu_side_is_catalan(self):
        b = F(2)
        for n in range(1, 6):
            assert L.gaussian_limit_moments(b, b, 2 * n) == P.catalan(n) * b ** (2 * n)

    def test_poisson_small_cases(self):
        a, b = F(2), F(3)
        assert L.poisson_limit_moments(a, b, 1) == a
        assert L.poisson_limit_moments(a, b, 2) == a + a**2

    def test_poisson_unit_parameters_give_catalan(self):
        for n in range(1, 7):
            assert L.poisson_limit_moments(1, 1, n) == P.catalan(n)

    def test_poisson_nu_side_from_block_counts(self):
        b = F(2, 3)
        for n in range(1, 7):
            expected = sum(P.count_t(n, k) * b**k for k in range(1, n + 1))
            assert L.poisson_limit_moments(b, b, n) == expected


class TestGaussianMeasure:
    def test_semicircle(self):
        meas = L.gaussian_limit_measure(1.0, 1.0)
        assert meas.atoms == ()
        assert meas.support == (-2.0, 2.0)
        assert abs(meas.density_at(0.0) - 1.0 / math.pi) < 1e-15
        assert meas.density_at(2.5) == 0.0

    def test_atom_boundary_is_atom_free(self):
        meas = L.gaussian_limit_measure(math.sqrt(2.0), 1.0)
        assert meas.atoms == ()

    def test_atom_case(self):
        meas = L.gaussian_limit_measure(2.0, 1.0)
        locs = sorted(loc for loc, _ in meas.atoms)
        assert locs == pytest.approx([-4.0 / math.sqrt(3.0), 4.0 / math.sqrt(3.0)])
        # each atom carries the residue of G at its pole
        for _, w in meas.atoms:
            assert w == pytest.approx((4.0 - 2.0) / (2.0 * (4.0 - 1.0)))
        assert abs(L.total_mass(meas) - 1.0) < 1e-8

    def test_atoms_exactly_when_beta2_below_half_alpha2(self):
        for alpha in (0.6, 1.0, 1.4, 1.42, 1.5, 2.0, 3.0):
            meas = L.gaussian_limit_measure(alpha, 1.0)
            assert bool(meas.atoms) == (1.0 < 0.5 * alpha * alpha)

    def test_beta_zero_two_point(self):
        meas = L.gaussian_limit_measure(1.5, 0.0)
        assert meas.atoms == ((-1.5, 0.5), (1.5, 0.5))
        assert meas.density is None
        assert L.quadrature_moment(meas, 2) == pytest.approx(1.5**2)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            L.gaussian_limit_measure(0.0, 1.0)
        with pytest.raises(ValueError):
            L.gaussian_limit_measure(1.0, -1.0)

    @pytest.mark.parametrize("alpha,beta,alpha_sq", GAUSSIAN_PARAMS)
    def test_moment_matching(self, alpha, beta, alpha_sq):
        meas = L.gaussian_limit_measure(alpha, beta)
        beta_sq = F(beta).limit_denominator() ** 2
        for n in range(0, 9):
            exact = float(L.gaussian_limit_moments_from_squares(alpha_sq, beta_sq, n))
            assert L.quadrature_moment(meas, n) == pytest.approx(exact, abs=1e-7)
        assert abs(L.total_mass(meas) - 1.0) < 1e-8


class TestPoissonMeasure:
    def test_free_poisson(self):
        meas = L.poisson_limit_measure(1.0, 1.0)
        assert meas.atoms == ()
        assert meas.support == (0.0, 4.0)
        target = math.sqrt(4.0 - 1.0) / (2.0 * math.pi * 1.0)
        assert abs(meas.density_at(1.0) - target) < 1e-15

    def test_half_half_atom(self):
        meas = L.poisson_limit_measure(0.5, 0.5)
        assert meas.atoms == ((0.0, 0.5),)

    def test_right_atom(self):
        meas = L.poisson_limit_measure(3.0, 1.0)
        assert len(meas.atoms) == 1
        loc, w = meas.atoms[0]
        assert loc == pytest.approx(4.5)
        assert w == pytest.approx(0.5, abs=1e-12)
        assert loc > meas.support[1]

    def test_left_atom(self):
        meas = L.poisson_limit_measure(1.0, 3.0)
        assert len(meas.atoms) == 1
        loc, w = meas.atoms[0]
        assert loc == pytest.approx(0.5)
        assert loc < meas.support[0]
        assert w == pytest.approx(0.5)

    def test_both_atoms(self):
        meas = L.poisson_limit_measure(1.0, 0.25)
        assert [loc for loc, _ in meas.atoms] == pytest.approx([0.0, 7.0 / 3.0])
        assert [w for _, w in meas.atoms] == pytest.approx([3.0 / 7.0, 5.0 / 21.0])

    def test_atom_regions(self):
        for alpha, beta in ((0.5, 0.5), (1.0, 0.25), (3.0, 1.0), (1.0, 3.0), (1.5, 1.0), (2.0, 1.5), (0.9, 1.0)):
            meas = L.poisson_limit_measure(alpha, beta)
            has_zero_atom = any(loc == 0.0 for loc, _ in meas.atoms)
            has_z0_atom = any(loc != 0.0 for loc, _ in meas.atoms)
            assert has_zero_atom == (beta < 1.0)
            sqrt_b = math.sqrt(beta)
            expected = alpha != beta and (alpha < beta - sqrt_b or alpha > beta + sqrt_b)
            assert has_z0_atom == expected

    @pytest.mark.parametrize("alpha,beta", POISSON_PARAMS)
    def test_moment_matching(self, alpha, beta):
        meas = L.poisson_limit_measure(float(alpha), float(beta))
        for n in range(0, 7):
            exact = float(L.poisson_limit_moments(alpha, beta, n))
            assert L.quadrature_moment(meas, n) == pytest.approx(exact, abs=1e-7)
        assert abs(L.total_mass(meas) - 1.0) < 1e-8

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            L.poisson_limit_measure(1.0, 0.0)


class TestCauchyTransforms:
    def test_gaussian_reduces_to_semicircle(self):
        for z in (1j, 2 + 1j, -1 + 0.5j):
            g = L.gaussian_cauchy_G(1.0, 1.0, z)
            import cmath

            semi = (z - cmath.sqrt(z - 2.0) * cmath.sqrt(z + 2.0)) / 2.0
            assert abs(g - semi) < 1e-12

    def test_poisson_reduces_to_free_poisson(self):
        import cmath

        for z in (2 + 1j, 1 + 2j, 4 + 0.5j):
            g = L.poisson_cauchy_G(1.0, 1.0, z)
            w = z - 2.0
            root = cmath.sqrt(w - 2.0) * cmath.sqrt(w + 2.0)
            free = (z - root) / (2.0 * z)
            assert abs(g - free) < 1e-12

    def test_normalization_at_infinity(self):
        for G in (
            lambda z: L.gaussian_cauchy_G(2.0, 1.0, z),
            lambda z: L.poisson_cauchy_G(3.0, 1.0, z),
            lambda z: L.poisson_cauchy_G(1.0, 3.0, z),
        ):
            for z in (1e6j, 1e6 + 1e6j):
                assert abs(z * G(z) - 1.0) < 1e-5

    def test_upper_half_plane_required(self):
        with pytest.raises(ValueError):
            L.gaussian_cauchy_G(1.0, 1.0, 1.0 - 1j)
        with pytest.raises(ValueError):
            L.poisson_cauchy_G(1.0, 1.0, 1.0 + 0j)

    def test_inversion_recovers_densities(self):
        for family, alpha, beta in (
            ("gaussian", 1.0, 1.0),
            ("gaussian", 2.0, 1.0),
            ("poisson", 3.0, 1.0),
        ):
            if family == "gaussian":
                meas = L.gaussian_limit_measure(alpha, beta)
                G = L.gaussian_cauchy_evaluator(alpha, beta)
            else:
                meas = L.poisson_limit_measure(alpha, beta)
                G = L.poisson_cauchy_evaluator(alpha, beta)
            lo, hi = meas.support
            width = hi - lo
            for i in range(50):
                t = lo + width * (0.05 + 0.9 * i / 49)
                assert abs(S.stieltjes_density(G, t, 1e-4) - meas.density_at(t)) < 1e-2


class TestOrthogonalPolynomials:
    def test_first_rows(self):
        seq = L.ortho_polys(F(3), F(2), 4)
        assert seq.rows[0] == (F(1),)
        assert seq.rows[1] == (F(0), F(1))
        assert seq.rows[2] == (F(-9), F(0), F(1))
        # p_3 = x p_2 - beta^2 p_1
        assert seq.rows[3] == (F(0), F(-13), F(0), F(1))

    def test_requires_degree_two(self):
        with pytest.raises(ValueError):
            L.ortho_polys(1, 1, 1)

    def test_orthogonality(self):
        for alpha, beta in ((1, 1), (2, 1)):
            seq = L.ortho_polys(alpha, beta, 6)
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

    def test_chebyshev_second_kind_rows(self):
        # frozen monic rows on [-2, 2], independently certified by the
        # trig identity q_n(2 cos h) = sin((n+1)h)/sin(h)
        frozen = [
            (F(1),),
            (F(0), F(1)),
            (F(-1), F(0), F(1)),
            (F(0), F(-2), F(0), F(1)),
            (F(1), F(0), F(-3), F(0), F(1)),
            (F(0), F(3), F(0), F(-4), F(0), F(1)),
        ]
        for n, row in enumerate(frozen):
            for j in range(n + 3):
                theta = 0.3 + 2.5 * (j + 1) / (n + 4)
                val = sum(float(c) * (2 * math.cos(theta)) ** k for k, c in enumerate(row))
                assert abs(val - math.sin((n + 1) * theta) / math.sin(theta)) < 1e-12
        seq = L.ortho_polys(1, 1, 5)
        assert list(seq.rows) == frozen

    def test_chebyshev_first_kind_rows(self):
        # alpha = 1, beta^2 = 1/2: monic Chebyshev-T rescaled to [-sqrt(2), sqrt(2)],
        # certified by p_n(2 b cos h) = 2 b^n cos(n h)
        frozen = [
            (F(1),),
            (F(0), F(1)),
            (F(-1), F(0), F(1)),
            (F(0), F(-3, 2), F(0), F(1)),
            (F(1, 2), F(0), F(-2), F(0), F(1)),
            (F(0), F(5, 4), F(0), F(-5, 2), F(0), F(1)),
        ]
        b = math.sqrt(0.5)
        for n, row in enumerate(frozen[1:], start=1):
            for j in range(n + 3):
                theta = 0.21 + 2.6 * (j + 1) / (n + 4)
                val = sum(float(c) * (2 * b * math.cos(theta)) ** k for k, c in enumerate(row))
                assert abs(val - 2 * b**n * math.cos(n * theta)) < 1e-12
        seq = L.ortho_polys_from_squares(F(1), F(1, 2), 5)
        assert list(seq.rows) == frozen


class TestQuadrature:
    def test_mass(self):
        meas = L.poisson_limit_measure(1.0, 1.0)
        assert L.quadrature_moment(meas, 0) == pytest.approx(1.0, abs=1e-8)

    def test_examples(self):
        assert L.quadrature_moment(L.gaussian_limit_measure(2.0, 1.0), 2) == pytest.approx(4.0, abs=1e-8)
        assert L.quadrature_moment(L.poisson_limit_measure(3.0, 1.0), 1) == pytest.approx(3.0, abs=1e-8)

    def test_cap(self):
        with pytest.raises(ValueError):
            L.quadrature_moment(L.gaussian_limit_measure(1.0, 1.0), 13)


class TestCauchyTailLimit:
    def test_monotone_decrease(self):
        report = L.cauchy_tail_limit_check(1.0, [2.0, 4.0, 8.0])
        assert report["monotone_decreasing"]
        assert report["sup_distances"][0] > report["sup_distances"][-1]

    def test_density_symmetry_and_center(self):
        meas = L.gaussian_limit_measure(4.0, 16.0)
        for t in (0.5, 1.0, 2.5):
            assert meas.density_at(t) == pytest.approx(meas.density_at(-t))
        assert L.cauchy_density(1.0, 0.0) == pytest.approx(1.0 / math.pi)

    def test_input_validation(self):
        with pytest.raises(ValueError):
            L.cauchy_tail_limit_check(1.0, [4.0, 2.0])
        with pytest.raises(ValueError):
            L.cauchy_tail_limit_check(-1.0, [2.0])
