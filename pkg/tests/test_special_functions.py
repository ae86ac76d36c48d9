"""
Tests for the gamma family, Hurwitz zeta, Barnes G, multiple gamma and the incomplete functions
"""

import cmath
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import special_functions as sf
from errors import CutError, DomainError, PoleError
from numerics_core import integrate


class TestLogGamma:
    """Holomorphic log Gamma on the cut plane"""

    def test_gamma_half(self):
        assert sf.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-12)

    @pytest.mark.parametrize("n", range(1, 21))
    def test_factorials(self, n):
        assert sf.gamma(n + 1.0) == pytest.approx(math.factorial(n), rel=1e-13)

    @pytest.mark.parametrize("x", [-0.5, -1.5, -2.25, -7.3])
    def test_negative_arguments(self, x):
        assert sf.gamma(x) == pytest.approx(math.gamma(x), rel=1e-11)

    @pytest.mark.parametrize("x", [0.0, -1.0, -4.0])
    def test_poles(self, x):
        with pytest.raises(PoleError):
            sf.gamma(x)

    def test_reciprocal_vanishes_at_poles(self):
        assert sf.reciprocal_gamma(-3.0) == 0.0

    def test_cut_rejected(self):
        with pytest.raises(CutError):
            sf.log_gamma_principal(-2.0 + 0j)

    def test_matches_mpmath_loggamma(self, upper_half_plane_points):
        for z in upper_half_plane_points:
            expected = complex(mpmath.loggamma(mpmath.mpc(z.real, z.imag)))
            assert abs(sf.log_gamma_principal(z) - expected) < 1e-11

    def test_conjugate_symmetry(self, upper_half_plane_points):
        for z in upper_half_plane_points:
            assert sf.log_gamma_principal(z.conjugate()) == pytest.approx(sf.log_gamma_principal(z).conjugate())

    def test_array_input_keeps_shape(self):
        values = sf.log_gamma_principal(np.array([[1.0, 2.0], [3.0, 4.0]], dtype=complex))
        assert values.shape == (2, 2)
        assert values[1, 1].real == pytest.approx(math.log(6.0))

    @given(st.floats(min_value=-50, max_value=50), st.floats(min_value=0.05, max_value=50))
    @settings(max_examples=100, deadline=None)
    def test_exponential_is_gamma(self, re, im):
        z = complex(re, im)
        ours = cmath.exp(sf.log_gamma_principal(z))
        oracle = complex(mpmath.gamma(mpmath.mpc(re, im)))
        assert abs(ours - oracle) <= 1e-9 * abs(oracle)


class TestPolygamma:
    """psi and its derivatives"""

    def test_digamma_at_one(self):
        assert sf.digamma(1.0) == pytest.approx(-sf.CONSTANTS.euler_gamma, abs=1e-14)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_values_at_one(self, m):
        # psi^(m)(1) = (-1)^{m+1} m! zeta(m+1)
        expected = (-1) ** (m + 1) * math.factorial(m) * float(mpmath.zeta(m + 1))
        assert sf.polygamma_real(m, 1.0) == pytest.approx(expected, rel=1e-12)

    def test_negative_non_integer(self):
        assert sf.polygamma_real(0, -0.5) == pytest.approx(float(mpmath.digamma(-0.5)), rel=1e-11)

    def test_complex_against_mpmath(self):
        z = 0.3 + 2.0j
        assert abs(sf.polygamma(0, z) - complex(mpmath.digamma(mpmath.mpc(0.3, 2.0)))) < 1e-12

    @pytest.mark.parametrize("x", [0.5, 1.0, 2.5, 10.0])
    def test_integral_representation(self, x):
        assert sf.psi_integral_representation(x) == pytest.approx(sf.digamma(x), abs=1e-9)


class TestHurwitzZeta:
    """Euler-Maclaurin Hurwitz zeta and Lerch's theorem"""

    def test_riemann_zeta_two(self):
        assert sf.hurwitz_zeta(2.0, 1.0) == pytest.approx(math.pi ** 2 / 6, rel=1e-13)

    def test_continuation_to_negative_s(self):
        assert sf.hurwitz_zeta(-1.0, 1.0) == pytest.approx(-1.0 / 12.0, rel=1e-12)

    def test_pole(self):
        with pytest.raises(PoleError):
            sf.hurwitz_zeta(1.0, 2.0)

    @pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 5.0])
    def test_lerch_theorem(self, x):
        assert sf.lerch_theorem_residual(x) < 1e-6


class TestBarnesG:
    """Barnes G by product and asymptotic routes"""

    @pytest.mark.parametrize("n, expected", [(1, 1.0), (2, 1.0), (3, 1.0), (4, 2.0), (5, 12.0), (6, 288.0)])
    def test_superfactorials(self, n, expected):
        assert sf.barnes_g(float(n)) == pytest.approx(expected, rel=1e-9)

    def test_zeros_at_non_positive_integers(self):
        assert sf.barnes_g(0.0) == 0.0

    def test_routes_agree(self):
        for z in (0.7 + 0.2j, 2.5 + 0j, 4.0 + 3.0j):
            product = sf.log_barnes_g(z, method="product")
            asymptotic = sf.log_barnes_g(z)
            assert abs(product - asymptotic) < 1e-8

    def test_against_mpmath(self):
        assert sf.barnes_g(2.5) == pytest.approx(float(mpmath.barnesg(2.5)), rel=1e-9)

    def test_domain(self):
        with pytest.raises(DomainError):
            sf.barnes_g(-1.5)


class TestMultipleGamma:
    """Multiple zeta and log Gamma_N"""

    def test_multiple_zeta_routes_agree(self):
        assert sf.multiple_zeta(2, 3.5, 1.5) == pytest.approx(sf.multiple_zeta_sum(2, 3.5, 1.5), rel=1e-6)

    def test_multiple_zeta_domain(self):
        with pytest.raises(DomainError):
            sf.multiple_zeta(2, 2.0, 1.0)

    @pytest.mark.parametrize("w", [1.0, 2.0, 3.0, 4.0])
    def test_gamma_one(self, w):
        expected = sf.log_gamma(w) - sf.CONSTANTS.log_sqrt_two_pi
        assert sf.log_multiple_gamma(1, w, 2) == pytest.approx(expected, abs=1e-9)

    @pytest.mark.parametrize("w", [1.0, 2.0, 3.0, 4.0])
    def test_gamma_two_against_barnes(self, w):
        c = sf.CONSTANTS
        expected = (0.5 * w * math.log(2 * math.pi) - sf.log_barnes_g(w, method="product").real
                    + c.zeta_prime_minus_one - c.log_sqrt_two_pi)
        assert sf.log_multiple_gamma(2, w, 2) == pytest.approx(expected, abs=1e-6)

    @pytest.mark.parametrize("N", [1, 2, 3])
    def test_truncation_independence(self, N):
        values = [sf.log_multiple_gamma(N, 2.5, m) for m in range(N, N + 7)]
        assert max(values) - min(values) < 1e-9

    def test_unsupported_order(self):
        with pytest.raises(DomainError):
            sf.log_multiple_gamma(4, 1.0, 4)


class TestIncompleteFunctions:
    """Incomplete gamma and beta, Lerch Phi and the 2F1 special case"""

    def test_incomplete_gamma_order_one(self):
        for x in (0.1, 1.0, 5.0, 30.0):
            assert sf.incomplete_gamma(1.0, x) == pytest.approx(-math.expm1(-x), rel=1e-13)

    @pytest.mark.parametrize("lam, x", [(0.5, 0.3), (2.0, 1.0), (3.5, 10.0)])
    def test_incomplete_gamma_against_mpmath(self, lam, x):
        assert sf.incomplete_gamma(lam, x) == pytest.approx(float(mpmath.gammainc(lam, 0, x)), rel=1e-11)

    def test_incomplete_gamma_limit(self):
        assert sf.incomplete_gamma(2.5, math.inf) == pytest.approx(sf.gamma(2.5))

    @pytest.mark.parametrize("lam, x", [(0.5, 0.3), (2.0, 1.0), (3.5, 10.0)])
    def test_lower_and_upper_sum_to_gamma(self, lam, x):
        total = sf.incomplete_gamma(lam, x) + sf.upper_incomplete_gamma(lam, x)
        assert total == pytest.approx(sf.gamma(lam), rel=1e-13)

    def test_incomplete_beta_complete_value(self):
        # B(2, 3) = 1/12
        assert sf.incomplete_beta(2.0, 3.0, 1.0) == pytest.approx(1.0 / 12.0, rel=1e-10)

    def test_incomplete_beta_negative_b(self):
        expected = float(mpmath.quad(lambda t: t * (1 - t) ** -1.5, [0, 0.5]))
        assert sf.incomplete_beta(2.0, -0.5, 0.5) == pytest.approx(expected, rel=1e-9)

    def test_incomplete_beta_divergent(self):
        with pytest.raises(DomainError):
            sf.incomplete_beta(1.0, -0.5, 1.0)

    def test_lerch_phi_log(self):
        # Phi(z, 1, 1) = -log(1 - z)/z
        assert sf.lerch_phi(0.5, 1.0) == pytest.approx(2 * math.log(2.0), rel=1e-13)

    def test_lerch_bernstein_routes_agree(self):
        below = sf.lerch_phi_bernstein(0.49, 0.5)
        integral = integrate(lambda u: u ** -0.5 / (1 + u) if u > 0 else 0.0, 0.0, 0.49)
        assert below == pytest.approx(integral, rel=1e-9)

    def test_hyp2f1_closed_form(self):
        # x^1 2F1(1, 1; 2; -x) = log(1 + x)
        assert sf.hyp2f1_special(1.0, 1.0, 3.0) == pytest.approx(math.log(4.0), rel=1e-11)

    def test_hyp2f1_against_mpmath(self):
        expected = float(mpmath.hyp2f1(1.5, 0.5, 1.5, -2.0))
        assert sf.hyp2f1_value(1.5, 0.5, 2.0) == pytest.approx(expected, rel=1e-9)
