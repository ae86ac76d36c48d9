"""
Tests for the worked examples: unit-ball volumes, the h_a family, g_lambda and the gamma ratio
"""

import math

import pytest

import case_studies as cs
import function_registry as registry
from class_report import Verdict
from errors import BracketError, DomainError
from monotone_classes import check_stieltjes_order


@pytest.fixture(scope="module")
def unit_ball():
    return cs.unit_ball_sequence(60)


class TestUnitBall:
    """Omega_n^{1/(n log n)}"""

    def test_first_volumes(self, unit_ball):
        assert unit_ball.rows[1].omega == pytest.approx(math.pi)
        assert unit_ball.rows[2].omega == pytest.approx(4 * math.pi / 3)
        assert unit_ball.rows[0].root is None

    def test_gating_reports_verified(self, unit_ball):
        gating = {r.function_id: r for r in unit_ball.reports[:3]}
        assert set(gating) == {"unit_ball_decreasing", "unit_ball_log_convex", "unit_ball_limit_exp(-1/2)"}
        assert all(r.verified for r in gating.values())

    def test_informational_reports(self, unit_ball):
        ids = [r.function_id for r in unit_ball.reports[3:]]
        assert ids == ["unit_ball_recursion", "unit_ball_log_identity", "unit_ball_hausdorff"]
        assert unit_ball.reports[3].verified

    def test_roots_approach_limit_from_above(self, unit_ball):
        roots = [root for _, root in unit_ball.roots()]
        assert len(roots) == 59
        assert all(root > cs.UNIT_BALL_LIMIT for root in roots)

    def test_large_n_stays_finite(self):
        table = cs.unit_ball_sequence(400)
        assert abs(table.rows[-1].root - cs.UNIT_BALL_LIMIT) < abs(table.rows[58].root - cs.UNIT_BALL_LIMIT)

    def test_n_max_too_small(self):
        with pytest.raises(DomainError):
            cs.unit_ball_sequence(2)


class TestTauDensity:
    """The Stieltjes density of g = -rho'/rho"""

    def test_total_mass(self):
        assert cs.tau_integral(lambda s: 1.0) == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("s", [0.1, 0.3, 0.7])
    def test_boundary_extraction_matches_closed_form(self, s):
        extracted, _ = cs.tau_extracted(s)
        assert extracted == pytest.approx(cs.tau_density(s), rel=1e-4)

    def test_support(self):
        with pytest.raises(DomainError):
            cs.tau_density(1.0)

    def test_moments(self):
        moments = cs.h_moment_sequence(12)
        assert moments[0] == pytest.approx(1.0, abs=1e-9)
        assert all(b < a for a, b in zip(moments, moments[1:]))
        assert cs.hausdorff_check(moments).verified

    def test_hausdorff_refutes_non_moment_sequence(self):
        report = cs.hausdorff_check([1.0, 0.2, 0.19, 0.0], k_max=2)
        assert report.refuted
        assert report.witness.order == 2


class TestHFamily:
    """h_a, F_a and the thresholds"""

    def test_components(self):
        parts = cs.h_family_components(2.0, 1.0, 1.0)
        assert parts.h == pytest.approx(4.0)
        assert parts.rho == pytest.approx(math.log(2.0) - 0.5)
        assert parts.F == pytest.approx(cs.f_a(2.0, 1.0))

    def test_components_domain(self):
        with pytest.raises(DomainError):
            cs.h_family_components(0.0, 1.0, 1.0)

    def test_components_record_laplace_agreement(self):
        parts = cs.h_family_components(1.0, 2.0, 1.0)
        assert parts.rho_consistent
        assert parts.to_dict()['rho_laplace_error'] < 1e-9

    def test_laplace_mismatch_visible(self, monkeypatch):
        monkeypatch.setattr(cs, "rho_laplace", lambda x: 1.0)
        parts = cs.h_family_components(1.0, 2.0, 1.0)
        assert not parts.rho_consistent
        assert parts.to_dict()['rho_consistent'] is False
        assert parts.rho_laplace_error == pytest.approx(1.0 - parts.rho)

    def test_rho_laplace_form(self):
        assert cs.rho_laplace(1.0) == pytest.approx(math.log(2.0) - 0.5, rel=1e-9)

    def test_series_criterion(self):
        assert cs.h_series_criterion(2.0, 1.0) == pytest.approx(math.e * cs.f_a(2.0, 1.0), rel=1e-8)

    def test_positivity_below_threshold(self):
        assert cs.f_positivity_report(2.0, 1e-6).verified

    def test_negativity_above_threshold(self):
        report = cs.f_positivity_report(2.3, 1e-6)
        assert report.refuted
        assert report.witness.value < -1e-4

    def test_bisected_threshold(self):
        threshold = cs.h_threshold_bisect((2.0, 2.3))
        assert 2.15 < threshold.value < 2.22
        assert threshold.closed_form == pytest.approx(threshold.value, abs=1e-5)
        assert threshold.witness.value < 0

    def test_bracket_without_sign_change(self):
        with pytest.raises(BracketError):
            cs.h_threshold_bisect((2.3, 2.4))

    def test_family_state(self):
        state = cs.h_family_state(1.0, n_moments=6, samples=5)
        assert state.tau_nonnegative
        assert state.moments_decreasing
        assert state.max_tau_deviation < 1e-4

    @pytest.mark.slow
    def test_cm_threshold(self):
        assert cs.h_cm_threshold_check().verified

    @pytest.mark.parametrize("a", [1.0, 1.5])
    def test_derivative_not_order_one_stieltjes(self, a):
        # h_a' ~ a e^a/(2x^2) decays faster than any nonzero order-1 Stieltjes function
        report = check_stieltjes_order(registry.h_prime(a), 1.0)
        assert report.refuted
        assert report.witness.value < 0

    @pytest.mark.slow
    def test_cm_threshold_records_stieltjes_verdicts(self):
        report = cs.h_cm_threshold_check()
        assert report.details['stieltjes']['S1[a=1]'] == Verdict.REFUTED.value
        assert report.details['stieltjes']['S1[a=1.5]'] == Verdict.REFUTED.value
        assert report.details['expected'] == {'S1[a=1]': "refuted", 'S1[a=1.5]': "refuted"}
        assert set(report.details['stieltjes_witnesses']) == {'S1[a=1]', 'S1[a=1.5]'}


class TestGLambda:
    """x^lambda Gamma(x)/Gamma(x+lambda)"""

    def test_xi_for_lambda_two(self):
        for t in (0.01, 1.0, 10.0):
            assert cs.xi(2.0, t) == pytest.approx(-math.expm1(-t), rel=1e-12)

    def test_xi_domain(self):
        with pytest.raises(DomainError):
            cs.xi(2.0, 0.0)

    @pytest.mark.parametrize("lam", [0.5, 1.0, 2.0, 3.0])
    def test_suite(self, lam):
        assert cs.g_lambda_suite(lam).verified

    def test_suite_domain(self):
        with pytest.raises(DomainError):
            cs.g_lambda_suite(0.0)


class TestGammaRatio:
    """log(Gamma(x)Gamma(x+a+b)/(Gamma(x+a)Gamma(x+b)))"""

    @pytest.mark.parametrize("x", [0.5, 1.0, 4.0])
    def test_integral_identity(self, x):
        expected = math.log((x + 1.0) / x)
        assert cs.gamma_ratio_integral(1.0, 1.0, x) == pytest.approx(expected, rel=1e-10)
        assert registry.gamma_ratio(1.0, 1.0)(x) == pytest.approx(expected, rel=1e-10)

    def test_integrand_limit_at_zero(self):
        assert cs.gamma_ratio_integrand(2.0, 3.0, 1.0, 0.0) == 6.0

    def test_representation(self):
        assert cs.gamma_ratio_representation(1.0, 0.5).verified

    def test_parameters_positive(self):
        with pytest.raises(DomainError):
            cs.gamma_ratio_representation(-1.0, 1.0)
