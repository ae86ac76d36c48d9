"""
Tests for multiple Bernoulli numbers, the log Gamma_N expansion and its remainders
"""

import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import asymptotics
from class_report import Verdict
from errors import DomainError, EvaluationError, NonConvergence, OrderOverflow
from numerics_core import Grid


class TestMultipleBernoulli:
    """Exact B_{N,k} and B_{N,k}(x)"""

    def test_classical_numbers(self):
        values = [asymptotics.multiple_bernoulli(1, k) for k in range(7)]
        assert values == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30), 0, Fraction(1, 42)]

    def test_order_two_numbers(self):
        # (t/(e^t-1))^2 = 1 - t + 5t^2/12 - t^3/12 + ...
        values = [asymptotics.multiple_bernoulli(2, k) for k in range(4)]
        assert values == [1, -1, Fraction(5, 6), Fraction(-1, 2)]

    def test_polynomial_at_one(self):
        # B_{1,k}(1) = (-1)^k B_k
        for k in range(1, 8):
            assert asymptotics.multiple_bernoulli(1, k, 1) == (-1) ** k * asymptotics.multiple_bernoulli(1, k)

    def test_polynomial_float_matches_exact(self):
        exact = asymptotics.multiple_bernoulli(2, 4, Fraction(1, 3))
        assert asymptotics.multiple_bernoulli(2, 4, 1 / 3) == pytest.approx(float(exact), rel=1e-12)

    def test_order_overflow(self):
        with pytest.raises(OrderOverflow):
            asymptotics.multiple_bernoulli(1, 10_000)

    def test_table_rejects_non_positive_N(self):
        with pytest.raises(DomainError):
            asymptotics.BernoulliTable.build(0)


class TestExpansion:
    """expansion_terms + remainder_RNm reproduce log Gamma_N"""

    @pytest.mark.parametrize("w", [0.5, 1.0, 3.0, 10.0])
    def test_stirling_for_N1(self, w):
        # log Gamma_1 = log Gamma - log sqrt(2 pi)
        total = asymptotics.expansion_terms(1, 3, w) + asymptotics.remainder_RNm(1, 3, w)
        assert total == pytest.approx(math.lgamma(w) - 0.5 * math.log(2 * math.pi), abs=1e-9)

    def test_remainder_shrinks_with_w(self):
        values = [abs(asymptotics.remainder_RNm(2, 4, w)) for w in (1.0, 2.0, 4.0, 8.0)]
        assert all(b < a for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("N, m, w", [(0, 1, 1.0), (2, 1, 1.0), (1, 1, 0.0), (4, 4, 1.0)])
    def test_invalid_arguments(self, N, m, w):
        with pytest.raises(DomainError):
            asymptotics.expansion_terms(N, m, w)


class TestBinet:
    """Binet's function by two routes"""

    @pytest.mark.parametrize("x", [1.0, 2.0, 5.0, 10.0, 100.0])
    def test_bounds(self, x):
        mu = asymptotics.binet_mu(x)
        assert 0.0 < mu < 1.0 / (12.0 * x)

    def test_domain(self):
        with pytest.raises(DomainError):
            asymptotics.binet_mu(0.0)

    @pytest.mark.parametrize("x", [1.0, 5.0, 100.0])
    def test_routes_agree(self, x):
        direct, integral = asymptotics.binet_routes(x)
        assert abs(direct - integral) <= 1e-9

    def test_disagreeing_routes_raise(self, monkeypatch):
        monkeypatch.setattr(asymptotics, "remainder_RNm", lambda N, m, w: 1.0)
        with pytest.raises(EvaluationError) as info:
            asymptotics.binet_mu(2.0)
        assert isinstance(info.value.cause, NonConvergence)


class TestClosedFormRemainder:
    """Partial-fraction form of t/(1-e^{-t}) minus its Taylor polynomial"""

    @pytest.mark.parametrize("n", range(1, 9))
    @pytest.mark.parametrize("w", [0.25, 1.0, 3.0, 5.0])
    def test_matches_direct_gap(self, n, w):
        closed = asymptotics.remainder_closed_form_N1(n, w)
        assert closed == pytest.approx(asymptotics.taylor_gap(1, n, w), abs=1e-10)

    def test_sign_alternates_with_J(self):
        assert asymptotics.remainder_closed_form_N1(1, 1.0) > 0
        assert asymptotics.remainder_closed_form_N1(2, 1.0) < 0
        assert asymptotics.remainder_closed_form_N1(4, 1.0) > 0

    def test_radius(self):
        with pytest.raises(DomainError):
            asymptotics.remainder_closed_form_N1(2, 7.0)


class TestNuSeries:
    """nu_m and its Laplace transform"""

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_non_negative(self, m):
        assert all(asymptotics.nu_m(m, t) >= 0 for t in np.geomspace(1e-3, 50.0, 30))

    @pytest.mark.parametrize("m, w", [(1, 2.0), (2, 1.0), (3, 3.0)])
    def test_laplace_cross_check(self, m, w):
        sign = (-1) ** (m - 1)
        expected = sign * asymptotics.remainder_RNm(2, 2 * m, w)
        assert asymptotics.nu_laplace(m, w) == pytest.approx(expected, abs=1e-7)

    @pytest.mark.parametrize("w", [0.05, 0.02])
    def test_laplace_small_w(self, w):
        assert asymptotics.nu_laplace(1, w) == pytest.approx(asymptotics.remainder_RNm(2, 2, w), rel=1e-6)

    def test_series_head_grows_with_t(self):
        assert asymptotics.nu_series_terms(10.0) == 2000
        terms = asymptotics.nu_series_terms(1400.0)
        assert terms > 2000
        assert asymptotics.nu_m(1, 1400.0, terms) > 0

    @pytest.mark.parametrize("m", [1, 2])
    def test_derivative_signs_alternate(self, m):
        sign = asymptotics.even_remainder_sign(2, m)
        for k in range(5):
            assert (-1) ** k * sign * asymptotics.remainder_moment(2, 2 * m, 1.5, k) > 0

    def test_even_remainder_sign_domain(self):
        with pytest.raises(DomainError):
            asymptotics.even_remainder_sign(1, 2)


class TestPositivityScan:
    """Sign scans of the remainder integrands"""

    @pytest.mark.slow
    @pytest.mark.parametrize("m", [6, 7])
    def test_N3_positive(self, m):
        assert asymptotics.integrand_positivity_scan(3, m).verified

    def test_N2_even_truncation_positive(self):
        report = asymptotics.integrand_positivity_scan(2, 2, Grid(1e-3, 50.0, 200, "logarithmic"))
        assert report.verdict is Verdict.VERIFIED
        assert report.details['sign'] == -1

    def test_N2_odd_truncation_changes_sign(self):
        report = asymptotics.integrand_positivity_scan(2, 2, Grid(1e-3, 50.0, 200, "logarithmic"), truncation=3)
        assert report.refuted
        assert report.witness.order == 3

    def test_unsupported_N(self):
        with pytest.raises(DomainError):
            asymptotics.integrand_positivity_scan(1, 2)

    @given(st.floats(min_value=0.05, max_value=0.95), st.integers(min_value=1, max_value=6))
    @settings(max_examples=40, deadline=None)
    def test_gap_series_and_direct_routes_meet(self, t, m):
        # crossover at 1: below uses the tail series, above the direct difference
        series = asymptotics.taylor_gap(1, m, t)
        direct = t / -math.expm1(-t) - sum(float(c) * t ** k for k, c in
                                            enumerate(asymptotics._taylor_coefficients(1, m)))
        assert series == pytest.approx(direct, abs=1e-12)
