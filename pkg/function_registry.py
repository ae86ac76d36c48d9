"""
Function Registry
Built-in functions addressable by id from the command line and the check suites

Every entry builds an AnalyticFunction carrying an exact Taylor-jet derivative
chain; entries with a holomorphic extension also carry complex and mpmath
evaluators (the latter feed Talbot inversion).
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import mpmath
import numpy as np

from asymptotics import binet_mu, remainder_jet
from errors import DomainError
from halfplane_analysis import log_gamma_ratio
from numerics_core import AnalyticFunction, TaylorJet
from special_functions import (digamma_jet, hyp2f1_special, incomplete_gamma, lerch_phi_bernstein,
                               log_gamma_jet, log_gamma_principal, polygamma)

logger = logging.getLogger(__name__)


def _var(x: float, n: int) -> TaylorJet:
    return TaylorJet.variable(x, n)


def _antiderivative_jet(value: Callable[[float], float],
                        derivative: Callable[[float, int], TaylorJet]) -> Callable[[float, int], TaylorJet]:
    """Jet of F from F(x) and the jet of F'"""
    def jet(x: float, n: int) -> TaylorJet:
        coeffs = np.zeros(n + 1)
        coeffs[0] = value(x)
        if n:
            inner = np.real(derivative(x, n - 1).coeffs)
            coeffs[1:] = inner / np.arange(1, n + 1)
        return TaylorJet(coeffs)
    return jet


# ========== Elementary ==========

def exp_neg() -> AnalyticFunction:
    return AnalyticFunction.from_jet("exp_neg", lambda x, n: (-_var(x, n)).exp(),
                                     lambda z: np.exp(-z), lambda s: mpmath.exp(-s))


def inv_x() -> AnalyticFunction:
    return AnalyticFunction.from_jet("inv_x", lambda x, n: 1.0 / _var(x, n), lambda z: 1 / z, lambda s: 1 / s)


def inv_one_plus() -> AnalyticFunction:
    """1/(1+x) with closed-form coefficients (-1)^k (1+x)^{-k-1}"""
    def jet(x: float, n: int) -> TaylorJet:
        k = np.arange(n + 1)
        return TaylorJet((-1.0) ** k * (1.0 + x) ** (-k - 1.0))
    return AnalyticFunction.from_jet("inv_one_plus", jet, lambda z: 1 / (1 + z), lambda s: 1 / (1 + s))


def identity() -> AnalyticFunction:
    return AnalyticFunction.from_jet("identity", _var, lambda z: z, lambda s: s)


def square() -> AnalyticFunction:
    return AnalyticFunction.from_jet("square", lambda x, n: _var(x, n) * _var(x, n), lambda z: z * z)


def log() -> AnalyticFunction:
    return AnalyticFunction.from_jet("log", lambda x, n: _var(x, n).log(), np.log)


def log_one_plus_inv() -> AnalyticFunction:
    """log(1 + 1/x), the Laplace transform of (1 - e^{-t})/t"""
    return AnalyticFunction.from_jet("log_one_plus_inv", lambda x, n: (1.0 + 1.0 / _var(x, n)).log(),
                                     lambda z: np.log(1 + 1 / z), lambda s: mpmath.log(1 + 1 / s))


def one_minus_exp() -> AnalyticFunction:
    return AnalyticFunction.from_jet("one_minus_exp", lambda x, n: 1.0 - (-_var(x, n)).exp(),
                                     lambda z: -np.expm1(-z))


def power(p: float = 0.5) -> AnalyticFunction:
    return AnalyticFunction.from_jet(f"power[{p:g}]", lambda x, n: _var(x, n) ** p,
                                     lambda z: z ** p, lambda s: s ** p)


def power_plus_one(lam: float = 3.0) -> AnalyticFunction:
    """x^{-lambda} + 1: CM but not LCM (it has zeros in the right half-plane)"""
    return AnalyticFunction.from_jet(f"power_plus_one[{lam:g}]", lambda x, n: _var(x, n) ** (-lam) + 1.0,
                                     lambda z: z ** (-lam) + 1, lambda s: s ** (-lam) + 1)


# ========== Gamma Family ==========

def log_gamma_ratio_fn() -> AnalyticFunction:
    """log Gamma(x+1)/(x log x)"""
    def jet(x: float, n: int) -> TaylorJet:
        u = _var(x, n)
        return log_gamma_jet(u + 1.0) / (u * u.log())
    return AnalyticFunction.from_jet("log_gamma_ratio", jet, log_gamma_ratio)


def digamma_fn() -> AnalyticFunction:
    return AnalyticFunction.from_jet("digamma", lambda x, n: digamma_jet(_var(x, n)),
                                     lambda z: polygamma(0, z), mpmath.digamma)


def gamma_ratio(a: float = 1.0, b: float = 1.0) -> AnalyticFunction:
    """log(Gamma(x) Gamma(x+a+b) / (Gamma(x+a) Gamma(x+b)))"""
    if a <= 0 or b <= 0:
        raise DomainError(f"a and b must be positive, got a={a}, b={b}")

    def jet(x: float, n: int) -> TaylorJet:
        u = _var(x, n)
        return (log_gamma_jet(u) + log_gamma_jet(u + (a + b))) - (log_gamma_jet(u + a) + log_gamma_jet(u + b))

    def complex_value(z):
        return (log_gamma_principal(z) + log_gamma_principal(z + a + b)
                - log_gamma_principal(z + a) - log_gamma_principal(z + b))

    def mp_value(s):
        return mpmath.loggamma(s) + mpmath.loggamma(s + a + b) - mpmath.loggamma(s + a) - mpmath.loggamma(s + b)

    return AnalyticFunction.from_jet(f"gamma_ratio[{a:g},{b:g}]", jet, complex_value, mp_value)


def g_lambda(lam: float = 2.0) -> AnalyticFunction:
    """x^lambda Gamma(x)/Gamma(x+lambda)"""
    def jet(x: float, n: int) -> TaylorJet:
        return log_g_lambda_jet(lam)(x, n).exp()
    return AnalyticFunction.from_jet(f"g_lambda[{lam:g}]", jet)


def log_g_lambda_jet(lam: float) -> Callable[[float, int], TaylorJet]:
    def jet(x: float, n: int) -> TaylorJet:
        u = _var(x, n)
        return lam * u.log() + log_gamma_jet(u) - log_gamma_jet(u + lam)
    return jet


def log_g_lambda(lam: float = 0.5) -> AnalyticFunction:
    return AnalyticFunction.from_jet(f"log_g_lambda[{lam:g}]", log_g_lambda_jet(lam))


def sigma_lambda(lam: float = 2.0) -> AnalyticFunction:
    """lambda/x + psi(x) - psi(x+lambda), the logarithmic derivative of g_lambda"""
    def jet(x: float, n: int) -> TaylorJet:
        u = _var(x, n)
        return lam / u + digamma_jet(u) - digamma_jet(u + lam)

    def mp_value(s):
        return lam / s + mpmath.digamma(s) - mpmath.digamma(s + lam)

    return AnalyticFunction.from_jet(f"sigma_lambda[{lam:g}]", jet, mp_value=mp_value)


# ========== Incomplete Functions ==========

def lower_gamma(lam: float = 2.0) -> AnalyticFunction:
    """gamma(lambda, x), with derivative x^{lambda-1} e^{-x}"""
    def derivative(x: float, n: int) -> TaylorJet:
        u = _var(x, n)
        return u ** (lam - 1.0) * (-u).exp()
    return AnalyticFunction.from_jet(f"lower_gamma[{lam:g}]",
                                     _antiderivative_jet(lambda x: incomplete_gamma(lam, x), derivative))


def lerch_bernstein(lam: float = 0.5) -> AnalyticFunction:
    """x^lambda Phi(-x, 1, lambda), with derivative x^{lambda-1}/(1+x)"""
    def derivative(x: float, n: int) -> TaylorJet:
        u = _var(x, n)
        return u ** (lam - 1.0) / (1.0 + u)
    return AnalyticFunction.from_jet(f"lerch_bernstein[{lam:g}]",
                                     _antiderivative_jet(lambda x: lerch_phi_bernstein(x, lam), derivative))


def hyp2f1_thorin(nu: float = 1.0, lam: float = 1.0) -> AnalyticFunction:
    """x^lambda 2F1(nu, lambda; 1+lambda; -x), with derivative lambda x^{lambda-1}(1+x)^{-nu}"""
    def derivative(x: float, n: int) -> TaylorJet:
        u = _var(x, n)
        return lam * u ** (lam - 1.0) * (1.0 + u) ** (-nu)
    return AnalyticFunction.from_jet(f"hyp2f1_thorin[{nu:g},{lam:g}]",
                                     _antiderivative_jet(lambda x: hyp2f1_special(nu, lam, x), derivative))


# ========== h Family ==========

def rho_jet(x: float, n: int) -> TaylorJet:
    """log(1 + 1/x) - 1/(1+x)"""
    u = _var(x, n)
    return (1.0 + 1.0 / u).log() - 1.0 / (1.0 + u)


def rho_complex(z):
    return np.log(1 + 1 / z) - 1 / (1 + z)


def rho() -> AnalyticFunction:
    return AnalyticFunction.from_jet("rho", rho_jet, rho_complex,
                                     lambda s: mpmath.log(1 + 1 / s) - 1 / (1 + s))


def g_rho() -> AnalyticFunction:
    """-rho'/rho, a Stieltjes function with total mass 2"""
    def jet(x: float, n: int) -> TaylorJet:
        full = rho_jet(x, n + 1)
        return -(full.derivative() / full.truncate(n))

    def complex_value(z):
        # rho'(z) = -1/(z (1+z)^2)
        return 1 / (z * (1 + z) ** 2 * rho_complex(z))

    return AnalyticFunction.from_jet("g_rho", jet, complex_value)


def h_a(a: float = 1.0) -> AnalyticFunction:
    """(1 + 1/x)^{a x}"""
    def jet(x: float, n: int) -> TaylorJet:
        u = _var(x, n)
        return (a * u * (1.0 + 1.0 / u).log()).exp()
    return AnalyticFunction.from_jet(f"h_a[{a:g}]", jet,
                                     lambda z: np.exp(a * z * np.log(1 + 1 / z)),
                                     lambda s: mpmath.exp(a * s * mpmath.log(1 + 1 / s)))


def h_prime(a: float = 1.0) -> AnalyticFunction:
    """h_a' = a h_a rho"""
    if a <= 0:
        raise DomainError(f"a must be positive, got {a}")

    def jet(x: float, n: int) -> TaylorJet:
        u = _var(x, n)
        log_term = (1.0 + 1.0 / u).log()
        return a * (a * u * log_term).exp() * (log_term - 1.0 / (1.0 + u))

    def mp_value(s):
        log_term = mpmath.log(1 + 1 / s)
        return a * mpmath.exp(a * s * log_term) * (log_term - 1 / (1 + s))

    return AnalyticFunction.from_jet(f"h_prime[{a:g}]", jet,
                                     lambda z: a * np.exp(a * z * np.log(1 + 1 / z)) * rho_complex(z), mp_value)


# ========== Remainders ==========

def remainder_even(m: int = 2) -> AnalyticFunction:
    """(-1)^{m-1} R_{2,2m}, the sign-corrected even remainder of log Gamma_2"""
    sign = (-1) ** (m - 1)
    return AnalyticFunction.from_jet(f"remainder_even[{m}]", lambda x, n: remainder_jet(2, 2 * m, x, n, sign))


def binet() -> AnalyticFunction:
    """Binet's mu(x); jet through log Gamma minus its Stirling part"""
    def jet(x: float, n: int) -> TaylorJet:
        u = _var(x, n)
        return log_gamma_jet(u) - (u - 0.5) * u.log() + u - 0.5 * math.log(2 * math.pi)

    def value(x: float) -> float:
        return binet_mu(x)

    return AnalyticFunction(name="binet_mu", value=value, jet=jet)


# ========== Registry ==========

@dataclass(frozen=True)
class RegistryEntry:
    """A registered function family with default parameters"""
    function_id: str
    factory: Callable[..., AnalyticFunction]
    defaults: Dict[str, float] = field(default_factory=dict)
    description: str = ""
    slow: bool = False

    def build(self, **params: float) -> AnalyticFunction:
        unknown = set(params) - set(self.defaults)
        if unknown:
            raise DomainError(f"{self.function_id} has no parameters {sorted(unknown)}")
        merged = {**self.defaults, **params}
        return self.factory(**merged)


REGISTRY: Dict[str, RegistryEntry] = {entry.function_id: entry for entry in (
    RegistryEntry("exp_neg", exp_neg, description="e^{-x}"),
    RegistryEntry("inv_x", inv_x, description="1/x"),
    RegistryEntry("inv_one_plus", inv_one_plus, description="1/(1+x)"),
    RegistryEntry("identity", identity, description="x"),
    RegistryEntry("square", square, description="x^2"),
    RegistryEntry("log", log, description="log x"),
    RegistryEntry("log_one_plus_inv", log_one_plus_inv, description="log(1 + 1/x)"),
    RegistryEntry("one_minus_exp", one_minus_exp, description="1 - e^{-x}"),
    RegistryEntry("power", power, {'p': 0.5}, "x^p"),
    RegistryEntry("power_plus_one", power_plus_one, {'lam': 3.0}, "x^{-lambda} + 1"),
    RegistryEntry("log_gamma_ratio", log_gamma_ratio_fn, description="log Gamma(x+1)/(x log x)"),
    RegistryEntry("digamma", digamma_fn, description="psi(x)"),
    RegistryEntry("gamma_ratio", gamma_ratio, {'a': 1.0, 'b': 1.0},
                  "log(Gamma(x)Gamma(x+a+b)/(Gamma(x+a)Gamma(x+b)))"),
    RegistryEntry("g_lambda", g_lambda, {'lam': 2.0}, "x^lambda Gamma(x)/Gamma(x+lambda)"),
    RegistryEntry("log_g_lambda", log_g_lambda, {'lam': 0.5}, "log g_lambda"),
    RegistryEntry("sigma_lambda", sigma_lambda, {'lam': 2.0}, "lambda/x + psi(x) - psi(x+lambda)"),
    RegistryEntry("lower_gamma", lower_gamma, {'lam': 2.0}, "gamma(lambda, x)"),
    RegistryEntry("lerch_bernstein", lerch_bernstein, {'lam': 0.5}, "x^lambda Phi(-x, 1, lambda)"),
    RegistryEntry("hyp2f1_thorin", hyp2f1_thorin, {'nu': 1.0, 'lam': 1.0}, "x^lambda 2F1(nu, lambda; 1+lambda; -x)"),
    RegistryEntry("rho", rho, description="log(1+1/x) - 1/(1+x)"),
    RegistryEntry("g_rho", g_rho, description="-rho'/rho"),
    RegistryEntry("h_a", h_a, {'a': 1.0}, "(1+1/x)^{ax}"),
    RegistryEntry("h_prime", h_prime, {'a': 1.0}, "derivative of (1+1/x)^{ax}"),
    RegistryEntry("remainder_even", remainder_even, {'m': 2}, "(-1)^{m-1} R_{2,2m}", slow=True),
    RegistryEntry("binet_mu", binet, description="Binet's function", slow=True),
)}


def get_function(function_id: str, **params: float) -> AnalyticFunction:
    """
    Build a registered function

    Raises:
        DomainError: For an unknown id or parameter name
    """
    entry = REGISTRY.get(function_id)
    if entry is None:
        raise DomainError(f"Unknown function id '{function_id}'. Known: {', '.join(sorted(REGISTRY))}")
    return entry.build(**params)


def list_functions(include_slow: bool = True) -> List[str]:
    return [name for name, entry in REGISTRY.items() if include_slow or not entry.slow]


def suite_functions(include_slow: bool = False) -> Dict[str, AnalyticFunction]:
    """Default instances of every registered function"""
    return {name: REGISTRY[name].build() for name in list_functions(include_slow)}


def parse_params(pairs: Optional[List[str]]) -> Dict[str, float]:
    """['a=2', 'b=0.5'] -> {'a': 2.0, 'b': 0.5}"""
    params: Dict[str, float] = {}
    for pair in pairs or []:
        key, sep, value = pair.partition('=')
        if not sep or not key:
            raise DomainError(f"Parameters are written key=value, got '{pair}'")
        params[key.strip()] = int(value) if key.strip() == 'm' else float(value)
    return params


if __name__ == "__main__":
    import sys
    logging.basicConfig(level=logging.DEBUG, stream=sys.stdout)

    print("Function Registry\n")
    print("=" * 60)
    for name in list_functions(include_slow=False):
        f = get_function(name)
        print(f"{name:20s} f(2) = {f(2.0): .12f}")
