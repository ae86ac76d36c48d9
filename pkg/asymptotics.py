"""
Asymptotics
Multiple Bernoulli polynomials and the expansion of log Gamma_N with its
convergent remainder

- BernoulliTable: exact B_{N,k} and the polynomial rows of B_{N,k}(x)
- expansion_terms / remainder_RNm: the two halves of log Gamma_N(w)
- binet_mu: the N = 1 remainder, computed two ways
- remainder_closed_form_N1 and nu_m: series forms of the remainder integrands
- integrand_positivity_scan: sign checks of the remainder integrands
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Optional, Tuple, Union

import numpy as np

import config
from class_report import ClassLabel, ClassReport, Verdict, Witness
from errors import CancellationError, DomainError, EvaluationError, NonConvergence, OrderOverflow
from numerics_core import (Grid, PowerSeries, QuadratureConfig, TaylorJet, integrate,
                           series_divide)
from special_functions import CONSTANTS, hurwitz_zeta, log_gamma

logger = logging.getLogger(__name__)


# ========== Multiple Bernoulli Polynomials ==========

@dataclass(frozen=True)
class BernoulliTable:
    """
    B_{N,k} = k! [t^k] (t/(e^t - 1))^N and the rows of B_{N,k}(x)

    rows[k][i] is the coefficient of x^i in B_{N,k}(x).
    """
    N: int
    max_order: int
    values: Tuple[Fraction, ...] = field(repr=False)
    rows: Tuple[Tuple[Fraction, ...], ...] = field(repr=False)

    def __post_init__(self):
        if self.values[0] != 1:
            raise ValueError(f"B_{{{self.N},0}} must be 1, got {self.values[0]}")

    @classmethod
    def build(cls, N: int, max_order: int = config.BERNOULLI_MAX_ORDER) -> 'BernoulliTable':
        if N < 1:
            raise DomainError(f"N must be >= 1, got {N}")
        base = series_divide(PowerSeries.monomial(1, max_order + 1), PowerSeries.exp_minus_one(max_order + 1))
        values = tuple(base.power(N).truncate(max_order).factorial_scaled())
        rows = tuple(tuple(math.comb(k, i) * values[k - i] for i in range(k + 1))
                     for k in range(max_order + 1))
        logger.debug(f"Built Bernoulli table N={N} up to order {max_order}")
        return cls(N, max_order, values, rows)

    def number(self, k: int) -> Fraction:
        self._check(k)
        return self.values[k]

    def polynomial(self, k: int, x: Union[Fraction, float]) -> Union[Fraction, float]:
        self._check(k)
        exact = isinstance(x, (int, Fraction))
        total = Fraction(0) if exact else 0.0
        for c in reversed(self.rows[k]):
            total = total * x + (c if exact else float(c))
        return total

    def _check(self, k: int) -> None:
        if k < 0:
            raise DomainError(f"Order must be >= 0, got {k}")
        if k > self.max_order:
            raise OrderOverflow(f"Order {k} exceeds the table size {self.max_order}")


@lru_cache(maxsize=None)
def bernoulli_table(N: int, max_order: int = config.BERNOULLI_MAX_ORDER) -> BernoulliTable:
    return BernoulliTable.build(N, max_order)


def multiple_bernoulli(N: int, k: int, x: Union[Fraction, float] = 0) -> Union[Fraction, float]:
    """
    B_{N,k}(x): k! [t^k] t^N e^{xt}/(e^t - 1)^N

    Exact for rational x, float otherwise.

    Raises:
        OrderOverflow: If k exceeds the configured table size
    """
    return bernoulli_table(N).polynomial(k, x)


# ========== Expansion ==========

def _harmonic(n: int) -> Fraction:
    return sum((Fraction(1, j) for j in range(1, n + 1)), Fraction(0))


def _check_expansion_args(N: int, m: int, w: float) -> None:
    if not 1 <= N <= 3:
        raise DomainError(f"N must be in 1..3, got {N}")
    if m < N:
        raise DomainError(f"m must be >= N, got m={m}, N={N}")
    if w <= 0:
        raise DomainError(f"w must be positive, got {w}")


@dataclass(frozen=True)
class SeriesExpansion:
    """
    Non-remainder part of log Gamma_N(w) at truncation m

    log_term_coefficient holds the coefficients (constant first) of the
    polynomial multiplying log w; power_terms are (exponent, coefficient) pairs.
    """
    N: int
    m: int
    log_term_coefficient: Tuple[Fraction, ...]
    power_terms: Tuple[Tuple[int, Fraction], ...]
    remainder: Callable[[float], float] = field(repr=False, compare=False)

    @classmethod
    def build(cls, N: int, m: int) -> 'SeriesExpansion':
        table = bernoulli_table(N, max(config.BERNOULLI_MAX_ORDER, m))
        sign = (-1) ** (N + 1)
        log_coeffs = tuple(sign * c / math.factorial(N) for c in table.rows[N])

        power_terms: List[Tuple[int, Fraction]] = []
        for k in range(N):
            coeff = (-1) ** N * table.values[k] / (math.factorial(k) * math.factorial(N - k)) * _harmonic(N - k)
            power_terms.append((N - k, coeff))
        for k in range(N + 1, m + 1):
            coeff = (-1) ** k * table.values[k] * Fraction(math.factorial(k - N - 1), math.factorial(k))
            power_terms.append((N - k, coeff))
        return cls(N, m, log_coeffs, tuple(power_terms), lambda w: remainder_RNm(N, m, w))

    def main_terms(self, w: float) -> float:
        log_poly = 0.0
        for c in reversed(self.log_term_coefficient):
            log_poly = log_poly * w + float(c)
        return log_poly * math.log(w) + sum(float(c) * w ** e for e, c in self.power_terms)

    def value(self, w: float) -> float:
        return self.main_terms(w) + self.remainder(w)

    def __str__(self):
        return f"SeriesExpansion(N={self.N}, m={self.m}, {len(self.power_terms)} power terms)"


@lru_cache(maxsize=None)
def series_expansion(N: int, m: int) -> SeriesExpansion:
    return SeriesExpansion.build(N, m)


def expansion_terms(N: int, m: int, w: float) -> float:
    """All non-remainder terms of the expansion of log Gamma_N at w"""
    _check_expansion_args(N, m, w)
    return series_expansion(N, m).main_terms(w)


# ========== Remainder Integrals ==========

@lru_cache(maxsize=None)
def _taylor_coefficients(N: int, order: int) -> Tuple[Fraction, ...]:
    """Coefficients c_k of f(t) = (t/(1 - e^{-t}))^N = sum (-1)^k B_{N,k} t^k / k!"""
    table = bernoulli_table(N, max(config.BERNOULLI_MAX_ORDER, order))
    return tuple((-1) ** k * table.values[k] / math.factorial(k) for k in range(order + 1))


def _f_power(N: int, t: float) -> float:
    return (t / -math.expm1(-t)) ** N


def taylor_gap(N: int, m: int, t: float) -> float:
    """
    f(t) - T_m(t) with f(t) = (t/(1 - e^{-t}))^N and T_m its order-m Taylor polynomial

    Below the crossover the explicit tail series is summed to avoid cancellation.

    Raises:
        CancellationError: If the crossover lies outside the tail series' safe range
    """
    crossover = config.REMAINDER_SMALL_T_CROSSOVER
    if crossover > math.pi:
        raise CancellationError(f"Crossover {crossover} too close to the radius 2*pi of the tail series")
    extra = config.REMAINDER_TAIL_EXTRA_TERMS
    coeffs = _taylor_coefficients(N, m + extra)
    if t < crossover:
        total = 0.0
        for c in reversed(coeffs[m + 1:]):
            total = total * t + float(c)
        return total * t ** (m + 1)
    poly = 0.0
    for c in reversed(coeffs[:m + 1]):
        poly = poly * t + float(c)
    return _f_power(N, t) - poly


def remainder_moment(N: int, m: int, w: float, k: int = 0) -> float:
    """int_0^inf (-t)^k e^{-wt} t^{-(N+1)} (f - T_m)(t) dt, the k-th derivative of R_{N,m} at w"""
    _check_expansion_args(N, m, w)

    def integrand(t: float) -> float:
        if t == 0.0:
            return 0.0
        return (-t) ** k * math.exp(-w * t) * taylor_gap(N, m, t) / t ** (N + 1)

    return integrate(integrand, 0.0, math.inf, QuadratureConfig(breakpoints=(config.REMAINDER_SMALL_T_CROSSOVER,)))


def remainder_RNm(N: int, m: int, w: float) -> float:
    """
    R_{N,m}(w) = int_0^inf e^{-wt} t^{-(N+1)} (f(t) - T_m(t)) dt
    """
    return remainder_moment(N, m, w, 0)


def remainder_jet(N: int, m: int, w: float, order: int, sign: int = 1) -> TaylorJet:
    """Jet of sign * R_{N,m} at w, by differentiating under the integral"""
    return TaylorJet([sign * remainder_moment(N, m, w, k) / math.factorial(k) for k in range(order + 1)])


def binet_routes(x: float) -> Tuple[float, float]:
    """
    Binet's function mu(x) = log Gamma(x) - (x - 1/2) log x + x - log sqrt(2 pi), by two routes

    Returns:
        (direct value from log Gamma, the m = 1 remainder integral R_{1,1}(x))
    """
    if x <= 0:
        raise DomainError(f"x must be positive, got {x}")
    direct = log_gamma(x) - (x - 0.5) * math.log(x) + x - CONSTANTS.log_sqrt_two_pi
    return direct, remainder_RNm(1, 1, x)


def binet_mu(x: float) -> float:
    """
    Binet's function, the direct value once both routes agree

    Raises:
        DomainError: If x <= 0
        EvaluationError: If the routes differ by more than config.BINET_ROUTE_TOL
    """
    direct, via_integral = binet_routes(x)
    difference = abs(direct - via_integral)
    if difference > config.BINET_ROUTE_TOL:
        raise EvaluationError(x, NonConvergence(
            f"Binet routes disagree: direct={direct}, integral={via_integral}", direct, difference))
    return direct


# ========== Series Forms of the Remainder ==========

def _zeta_tail(terms: int, start: float, exponent_base: int, w: float) -> float:
    """sum_{p >= start} a_p^{-exponent_base} / (a_p^2 + w^2), a_p = 2 pi p, by expanding in w^2/a_p^2"""
    two_pi = 2.0 * math.pi
    total, i = 0.0, 0
    while True:
        term = (-w * w) ** i * two_pi ** (-exponent_base - 2 - 2 * i) * hurwitz_zeta(exponent_base + 2 + 2 * i, start)
        total += term
        i += 1
        if abs(term) <= 1e-17 * max(abs(total), 1e-300):
            return total
        if i >= terms:
            raise NonConvergence(f"Tail expansion did not settle (w={w})", total, abs(term))


def remainder_closed_form_N1(n: int, w: float, terms: int = 1000) -> float:
    """
    f(w) - T_n(w) for f(t) = t/(1 - e^{-t}) from the partial-fraction series

    With J = floor(n/2) and a_p = 2 pi p,
        f(w) - T_n(w) = 2 (-1)^J w^{2J+2} sum_p a_p^{-2J} / (a_p^2 + w^2)
    The first `terms` summands are added directly and the rest by a zeta expansion.

    Raises:
        DomainError: Unless 0 < w < 2 pi and n >= 1
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not 0 < w < 2 * math.pi:
        raise DomainError(f"Closed form is used only for 0 < w < 2*pi, got {w}")
    J = n // 2
    a = 2.0 * math.pi * np.arange(1, terms + 1, dtype=float)
    head = float(np.sum(a ** (-2 * J) / (a * a + w * w)))
    tail = _zeta_tail(40, terms + 1.0, 2 * J, w)
    return 2.0 * (-1) ** J * w ** (2 * J + 2) * (head + tail)


def nu_m(m: int, t: float, terms: int = 2000) -> float:
    """
    nu_m(t) = sum_k a^{1-2m} (2a/(t^2+a^2) + 4at/(t^2+a^2)^2 + (2m-1)/a * 2t/(t^2+a^2)), a = 2 pi k

    t^{2m-2} nu_m(t) is the Laplace density of (-1)^{m-1} R_{2,2m}.
    """
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if t < 0:
        raise DomainError(f"t must be non-negative, got {t}")
    a = 2.0 * math.pi * np.arange(1, terms + 1, dtype=float)
    d = t * t + a * a
    summand = a ** (1 - 2 * m) * (2 * a / d + 4 * a * t / (d * d) + (2 * m - 1) / a * 2 * t / d)
    head = float(np.sum(summand))
    two_pi = 2.0 * math.pi
    if t * t > 1e-2 * (two_pi * terms) ** 2:
        raise NonConvergence(f"nu_{m}({t}): t too large for a {terms}-term head", head, None)
    # Beyond `terms` the summand is 2 a^{-2m} + ((4m+2) t - 2 t^2) a^{-2m-2} + O(t^4 a^{-2m-4})
    tail = (2 * two_pi ** (-2 * m) * hurwitz_zeta(2 * m, terms + 1.0)
            + ((4 * m + 2) * t - 2 * t * t) * two_pi ** (-2 * m - 2) * hurwitz_zeta(2 * m + 2, terms + 1.0))
    return head + tail


def nu_series_terms(t: float, terms: int = 2000) -> int:
    """Smallest head length, at least `terms`, for which nu_m accepts t"""
    return max(terms, int(math.ceil(10.0 * t / (2.0 * math.pi))) + 1)


def nu_laplace(m: int, w: float) -> float:
    """
    int_0^inf e^{-wt} t^{2m-2} nu_m(t) dt

    The series head grows with t so small w can reach the far end of the panel.
    """
    if w <= 0:
        raise DomainError(f"w must be positive, got {w}")
    # nu_m grows at most linearly, so the integrand is below 1e-20 past this cutoff
    cutoff = (50.0 + 20.0 * m) / w
    return integrate(lambda t: math.exp(-w * t) * t ** (2 * m - 2) * nu_m(m, t, nu_series_terms(t)),
                     0.0, cutoff, QuadratureConfig(breakpoints=(1.0 / w,)))


def even_remainder_sign(N: int, m: int) -> int:
    """Sign making the order-2m remainder integrand non-negative: (-1)^{m-1} for N=2, (-1)^m for N=3"""
    if N == 2:
        return (-1) ** (m - 1)
    if N == 3:
        return (-1) ** m
    raise DomainError(f"Sign convention defined for N = 2, 3 only, got {N}")


def integrand_positivity_scan(N: int, m: int, grid: Optional[Grid] = None,
                              truncation: Optional[int] = None) -> ClassReport:
    """
    Sign scan of the remainder integrand on a t-grid

    Without `truncation`, checks sign * (f(t) - T_{2m}(t)) >= 0 with the sign of
    even_remainder_sign. With an explicit truncation order, reports whether
    f - T_truncation keeps one sign; a sign change is returned as a refutation
    with the first sample where the sign flips.
    """
    if N not in (2, 3):
        raise DomainError(f"Positivity scan is defined for N = 2, 3, got {N}")
    if grid is None:
        grid = Grid(1e-4, 1e2, 4000, "logarithmic") if N == 3 else Grid(1e-3, 50.0, 2000, "logarithmic")
    ts = grid.points()
    function_id = f"remainder_integrand_N{N}"

    if truncation is None:
        sign = even_remainder_sign(N, m)
        order = 2 * m
        values = np.array([sign * taylor_gap(N, order, t) for t in ts])
        worst = int(np.argmin(values))
        if values[worst] >= 0.0:
            return ClassReport(ClassLabel.POSITIVITY, Verdict.VERIFIED, function_id, float(m), None, grid, order, 0.0,
                               {'sign': sign, 'min_value': float(values[worst])})
        logger.info(f"N={N}, m={m}: integrand negative at t={ts[worst]:.4g}")
        return ClassReport(ClassLabel.POSITIVITY, Verdict.REFUTED, function_id, float(m),
                           Witness(float(ts[worst]), order, float(values[worst])), grid, order, 0.0)

    values = np.array([taylor_gap(N, truncation, t) for t in ts])
    signs = np.sign(values)
    nonzero = signs[signs != 0]
    flips = np.nonzero(signs[1:] * signs[:-1] < 0)[0]
    if len(nonzero) == 0 or len(flips) == 0:
        return ClassReport(ClassLabel.POSITIVITY, Verdict.VERIFIED, function_id, float(truncation), None, grid,
                           truncation, 0.0, {'sign': int(nonzero[0]) if len(nonzero) else 0})
    k = int(flips[0]) + 1
    logger.info(f"N={N}, truncation {truncation}: sign change near t={ts[k]:.4g}")
    return ClassReport(ClassLabel.POSITIVITY, Verdict.REFUTED, function_id, float(truncation),
                       Witness(float(ts[k]), truncation, float(values[k])), grid, truncation, 0.0,
                       {'sign_changes': len(flips)})


if __name__ == "__main__":
    import sys
    logging.basicConfig(level=logging.DEBUG, stream=sys.stdout)

    print("Asymptotics Test\n")
    print("=" * 60)
    print(f"B_2,k: {[str(multiple_bernoulli(2, k)) for k in range(5)]}")
    for x in (1.0, 10.0, 1000.0):
        print(f"mu({x}) = {binet_mu(x):.12g}  (1/12x = {1 / (12 * x):.12g})")
    print(f"closed form n=2, w=1: {remainder_closed_form_N1(2, 1.0):.15g}  direct: {taylor_gap(1, 2, 1.0):.15g}")
    print(integrand_positivity_scan(2, 2))
