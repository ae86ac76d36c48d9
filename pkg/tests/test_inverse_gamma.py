"""
Tests for the extremal points of Gamma, log Gamma inversion and the branch inverses g_k
"""

import cmath
import math

import numpy as np
import pytest

import inverse_gamma as ig
from errors import DomainError, DomainEscape
from special_functions import log_gamma_principal, polygamma_real


@pytest.fixture(scope="module")
def table():
    return ig.extremal_points(3)


@pytest.fixture(scope="module")
def random_upper_points():
    rng = np.random.default_rng(7)
    return [r * cmath.exp(1j * theta)
            for r, theta in zip(rng.uniform(0.5, 5.0, 20), rng.uniform(0.2, math.pi - 0.2, 20))]


class TestExtremalPoints:
    """Stationary points of log|Gamma|"""

    def test_minimum_on_positive_axis(self, table):
        x0 = table[0]
        assert 1.46163 < x0.x < 1.46164
        assert x0.residual < 1e-12
        assert math.exp(x0.log_abs_gamma) == pytest.approx(0.8856032, rel=1e-7)

    def test_first_negative_point(self, table):
        assert table[1].x == pytest.approx(-0.5040830, abs=1e-7)

    def test_points_inside_their_intervals(self, table):
        assert len(table) == 4
        for entry in table.entries[1:]:
            assert -entry.k < entry.x < -entry.k + 1
            assert abs(polygamma_real(0, entry.x)) < 1e-9

    def test_rows(self, table):
        assert set(table.rows()[0]) == {'k', 'x', 'log_abs_gamma', 'psi_residual'}

    def test_negative_k_max(self):
        with pytest.raises(DomainError):
            ig.extremal_points(-1)

    def test_table_validation(self):
        with pytest.raises(ValueError):
            ig.ExtremalTable((ig.ExtremalPoint(1, 0.5, 0.0, 0.0),))

    def test_log_abs_gamma(self):
        assert ig.log_abs_gamma(-0.5) == pytest.approx(math.log(2 * math.sqrt(math.pi)), rel=1e-12)
        with pytest.raises(DomainError):
            ig.log_abs_gamma(-2.0)


class TestInvertLogGamma:
    """Damped Newton inversion"""

    def test_real_target_on_large_branch(self):
        assert ig.invert_log_gamma(math.log(24.0)) == pytest.approx(5.0, abs=1e-10)

    def test_real_target_near_seed(self):
        w = ig.invert_log_gamma(0.5 * math.log(math.pi), 0.4)
        assert w == pytest.approx(0.5, abs=1e-12)

    @pytest.mark.parametrize("w", [2.0 + 3.0j, 0.3 + 0.1j, 10.0 + 20.0j])
    def test_round_trip_in_upper_half_plane(self, w):
        target = complex(log_gamma_principal(w))
        assert abs(ig.invert_log_gamma(target) - w) < 1e-9 * max(1.0, abs(w))

    def test_seed_outside_half_plane(self):
        with pytest.raises(DomainEscape):
            ig.invert_log_gamma(1.0 + 1.0j, seed=1.0 - 1.0j)

    def test_small_targets_use_fixed_seed(self):
        assert ig.default_seed(1.0 + 0.5j) == 2 + 1j


class TestBranchInverses:
    """g_k(z) with Gamma(g_k(z)) = (-1)^{k+1} z"""

    def test_g0_at_i(self):
        w = ig.branch_inverse_g_k(0, 1j)
        assert w.imag > 0
        assert abs(cmath.exp(complex(log_gamma_principal(w))) + 1j) < 1e-10

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_round_trips(self, k, random_upper_points):
        worst, lowest = ig.branch_round_trip(k, random_upper_points)
        assert worst <= 1e-10
        assert lowest > 0

    def test_invalid_arguments(self):
        with pytest.raises(DomainError):
            ig.branch_inverse_g_k(-1, 1j)
        with pytest.raises(DomainError):
            ig.branch_inverse_g_k(0, 2.0)
