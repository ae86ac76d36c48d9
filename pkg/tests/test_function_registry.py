"""
Tests for the built-in function registry
"""

import math

import numpy as np
import pytest

import asymptotics
import function_registry as registry
from errors import DomainError


class TestRegistry:
    """Lookup, parameters and listing"""

    def test_unknown_id(self):
        with pytest.raises(DomainError):
            registry.get_function("no_such_function")

    def test_unknown_parameter(self):
        with pytest.raises(DomainError):
            registry.get_function("power", q=2.0)

    def test_parameters_override_defaults(self):
        assert registry.get_function("power", p=2.0)(3.0) == pytest.approx(9.0)

    def test_slow_entries_listed_separately(self):
        fast = registry.list_functions(include_slow=False)
        assert "remainder_even" not in fast and "binet_mu" not in fast
        assert set(registry.list_functions()) == set(registry.REGISTRY)

    def test_parse_params(self):
        assert registry.parse_params(["a=2", "m=3", " b = 0.5"]) == {'a': 2.0, 'm': 3, 'b': 0.5}
        assert registry.parse_params(None) == {}

    @pytest.mark.parametrize("pair", ["a", "=2"])
    def test_parse_params_rejects_malformed(self, pair):
        with pytest.raises(DomainError):
            registry.parse_params([pair])


class TestBuiltinFunctions:
    """Values, jets and extensions of the registered functions"""

    @pytest.mark.parametrize("function_id", registry.list_functions(include_slow=False))
    def test_jet_value_matches_value(self, function_id):
        f = registry.get_function(function_id)
        jet = f.jet(2.0, 3)
        assert np.isfinite(f(2.0))
        assert float(np.real(jet.value)) == pytest.approx(f(2.0), rel=1e-12)

    @pytest.mark.parametrize("function_id", registry.list_functions(include_slow=False))
    def test_complex_extension_on_real_axis(self, function_id):
        f = registry.get_function(function_id)
        if f.complex_value is None:
            pytest.skip(f"{function_id} has no complex extension")
        assert complex(f.complex_value(complex(2.5))).real == pytest.approx(f(2.5), rel=1e-9)

    @pytest.mark.parametrize("function_id, x, expected", [
        ("log_gamma_ratio", 2.0, 0.5),
        ("g_lambda", 2.0, 2.0 / 3.0),
        ("sigma_lambda", 1.0, 0.5),
        ("h_a", 1.0, 2.0),
        ("hyp2f1_thorin", 3.0, math.log(4.0)),
        ("lower_gamma", 1.0, 1.0 - 2.0 / math.e),
        ("g_rho", 1.0, 0.25 / (math.log(2.0) - 0.5)),
        ("rho", 1.0, math.log(2.0) - 0.5),
        ("gamma_ratio", 1.0, math.log(2.0)),
    ])
    def test_known_values(self, function_id, x, expected):
        assert registry.get_function(function_id)(x) == pytest.approx(expected, rel=1e-10)

    def test_digamma_jet_carries_trigamma(self):
        jet = registry.get_function("digamma").jet(1.0, 1)
        assert float(np.real(jet.coeffs[1])) == pytest.approx(math.pi ** 2 / 6, rel=1e-12)

    def test_h_prime_is_derivative_of_h(self):
        h = registry.h_a(1.5)
        assert registry.h_prime(1.5)(2.0) == pytest.approx(float(np.real(h.jet(2.0, 1).coeffs[1])), rel=1e-12)

    def test_gamma_ratio_parameters(self):
        with pytest.raises(DomainError):
            registry.gamma_ratio(0.0, 1.0)

    @pytest.mark.slow
    def test_binet_jet_matches_integral(self):
        f = registry.get_function("binet_mu")
        assert float(np.real(f.jet(3.0, 0).value)) == pytest.approx(f(3.0), abs=1e-12)

    @pytest.mark.slow
    def test_remainder_even_sign(self):
        f = registry.get_function("remainder_even", m=2)
        assert f(2.0) == pytest.approx(-asymptotics.remainder_RNm(2, 4, 2.0))
        assert f(2.0) > 0
