"""
Numerics Core
Shared numeric engine for the evaluators and class checks

Provides:
- Adaptive Gauss-Kronrod quadrature (QUADPACK via scipy) on finite,
  semi-infinite and singular-endpoint intervals with declared breakpoints
- Exact rational power-series arithmetic (multiply, divide, exponentials)
- Float Taylor jets for exact derivative chains of built-in functions
- High-order central differences with Ridders extrapolation
- Polynomial extrapolation of h -> 0 limits
- Bromwich inversion of Laplace transforms (Talbot contour, mpmath)
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import mpmath
import numpy as np
import numpy.typing as npt
from scipy import integrate as sp_integrate

import config
from errors import (DegenerateDivisor, DomainError, InsufficientSamples,
                    NonConvergence, StepUnderflow)

logger = logging.getLogger(__name__)

RealFunction = Callable[[float], float]
Number = Union[int, float, Fraction]


# ========== Configuration Types ==========

@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances, subdivision budget and breakpoints for integrate()"""
    abs_tol: float = config.QUAD_ABS_TOL
    rel_tol: float = config.QUAD_REL_TOL
    max_subdivisions: int = config.QUAD_MAX_SUBDIVISIONS
    breakpoints: Tuple[float, ...] = ()

    def __post_init__(self):
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise ValueError(f"Tolerances must be non-negative: abs={self.abs_tol}, rel={self.rel_tol}")
        if self.abs_tol + self.rel_tol <= 0:
            raise ValueError("abs_tol + rel_tol must be positive")
        if self.max_subdivisions < 1:
            raise ValueError(f"max_subdivisions must be positive, got {self.max_subdivisions}")
        points = tuple(float(p) for p in self.breakpoints)
        if any(b <= a for a, b in zip(points, points[1:])):
            raise ValueError(f"Breakpoints must be strictly increasing: {points}")
        object.__setattr__(self, 'breakpoints', points)

    def with_breakpoints(self, breakpoints: Sequence[float]) -> 'QuadratureConfig':
        return QuadratureConfig(self.abs_tol, self.rel_tol, self.max_subdivisions, tuple(breakpoints))


DEFAULT_QUADRATURE = QuadratureConfig()


class Spacing(Enum):
    LINEAR = "linear"
    LOGARITHMIC = "logarithmic"

    @classmethod
    def parse(cls, text: str) -> 'Spacing':
        text = text.strip().lower()
        if text in ("lin", "linear"):
            return cls.LINEAR
        if text in ("log", "logarithmic"):
            return cls.LOGARITHMIC
        raise ValueError(f"Unknown grid spacing '{text}' (expected lin or log)")


@dataclass(frozen=True)
class Grid:
    """Sampling grid on an interval of the real line"""
    min: float
    max: float
    count: int
    spacing: Spacing = Spacing.LOGARITHMIC

    def __post_init__(self):
        if isinstance(self.spacing, str):
            object.__setattr__(self, 'spacing', Spacing.parse(self.spacing))
        if not self.min < self.max:
            raise ValueError(f"Grid requires min < max, got [{self.min}, {self.max}]")
        if self.count < 1:
            raise ValueError(f"Grid count must be positive, got {self.count}")
        if self.spacing is Spacing.LOGARITHMIC and self.min <= 0:
            raise ValueError(f"Logarithmic grid requires min > 0, got {self.min}")

    def points(self) -> npt.NDArray[np.float64]:
        if self.count == 1:
            return np.array([self.min])
        if self.spacing is Spacing.LOGARITHMIC:
            return np.geomspace(self.min, self.max, self.count)
        return np.linspace(self.min, self.max, self.count)

    @classmethod
    def parse(cls, spec: str) -> 'Grid':
        """Parse 'min:max:count:spacing', e.g. '0.5:10:20:log'"""
        parts = spec.split(":")
        if len(parts) not in (3, 4):
            raise ValueError(f"Grid spec must be min:max:count[:spacing], got '{spec}'")
        spacing = Spacing.parse(parts[3]) if len(parts) == 4 else Spacing.LINEAR
        return cls(float(parts[0]), float(parts[1]), int(parts[2]), spacing)

    @classmethod
    def from_tuple(cls, values: Tuple[float, float, int, str]) -> 'Grid':
        return cls(values[0], values[1], values[2], Spacing.parse(values[3]))

    def to_spec(self) -> str:
        short = "log" if self.spacing is Spacing.LOGARITHMIC else "lin"
        return f"{self.min:g}:{self.max:g}:{self.count}:{short}"

    def to_dict(self) -> Dict:
        return {'min': self.min, 'max': self.max, 'count': self.count, 'spacing': self.spacing.value}

    def __str__(self):
        return f"Grid[{self.to_spec()}]"


# ========== Quadrature ==========

def _quad_panel(f: RealFunction, lower: float, upper: float, cfg: QuadratureConfig,
                points: Sequence[float]) -> Tuple[float, float, int]:
    inner = [p for p in points if lower < p < upper]
    limit = max(cfg.max_subdivisions, 2 * len(inner) + 50)
    kwargs = dict(epsabs=cfg.abs_tol, epsrel=cfg.rel_tol, limit=limit, full_output=1)
    if inner and math.isfinite(lower) and math.isfinite(upper):
        kwargs['points'] = inner
    out = sp_integrate.quad(f, lower, upper, **kwargs)
    value, error = out[0], out[1]
    ier = 0 if len(out) == 3 else (1 if 'subdivisions' in str(out[3]).lower() else 2)
    return value, error, ier


def integrate_with_error(f: RealFunction, lower: float, upper: float,
                         cfg: Optional[QuadratureConfig] = None) -> Tuple[float, float]:
    """
    Integrate a real function, returning value and error estimate

    Infinite upper limits are handled by QUADPACK's QAGI transformation; when
    breakpoints are declared on a semi-infinite interval, the finite part up to
    the last breakpoint is integrated first and the tail separately.

    Raises:
        DomainError: If lower >= upper
        NonConvergence: If the subdivision budget is exhausted far from the target
    """
    cfg = cfg or DEFAULT_QUADRATURE
    if not lower < upper:
        raise DomainError(f"Integration requires lower < upper, got [{lower}, {upper}]")

    points = [p for p in cfg.breakpoints if lower < p < upper]
    if math.isfinite(upper) or not points:
        panels = [(lower, upper, points)]
    else:
        panels = [(lower, points[-1], points[:-1]), (points[-1], upper, [])]

    total, total_error, worst = 0.0, 0.0, 0
    for a, b, pts in panels:
        value, error, ier = _quad_panel(f, a, b, cfg, pts)
        total += value
        total_error += error
        worst = max(worst, ier)

    target = max(cfg.abs_tol, cfg.rel_tol * abs(total))
    if worst == 1 and total_error > config.QUAD_FAILURE_SLACK * target:
        raise NonConvergence(f"Quadrature on [{lower}, {upper}] exhausted {cfg.max_subdivisions} subdivisions "
                             f"(error estimate {total_error:.3e})", total, total_error)
    if worst:
        logger.debug(f"Quadrature on [{lower}, {upper}] flagged (ier={worst}), error estimate {total_error:.3e}")
    return total, total_error


def integrate(f: RealFunction, lower: float, upper: float,
              cfg: Optional[QuadratureConfig] = None) -> float:
    """Integrate f over (lower, upper); upper may be +inf. See integrate_with_error."""
    return integrate_with_error(f, lower, upper, cfg)[0]


def integrate_complex(f: Callable[[float], complex], lower: float, upper: float,
                      cfg: Optional[QuadratureConfig] = None) -> complex:
    """Integrate a complex-valued function of a real variable, componentwise"""
    re = integrate(lambda t: complex(f(t)).real, lower, upper, cfg)
    im = integrate(lambda t: complex(f(t)).imag, lower, upper, cfg)
    return complex(re, im)


# ========== Exact Power Series ==========

@dataclass(frozen=True)
class PowerSeries:
    """Truncated power series with exact rational coefficients (index k is the t^k coefficient)"""
    coefficients: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coefficients) == 0:
            raise ValueError("PowerSeries needs at least one coefficient")
        object.__setattr__(self, 'coefficients', tuple(Fraction(c) for c in self.coefficients))

    @property
    def truncation_order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def from_coefficients(cls, values: Sequence[Number], order: Optional[int] = None) -> 'PowerSeries':
        values = list(values)
        if order is not None:
            values = (values + [0] * (order + 1))[:order + 1]
        return cls(tuple(values))

    @classmethod
    def exponential(cls, x: Number, order: int) -> 'PowerSeries':
        """e^{xt} = sum x^k t^k / k!"""
        x = Fraction(x)
        coeffs, term = [], Fraction(1)
        for k in range(order + 1):
            coeffs.append(term)
            term = term * x / (k + 1)
        return cls(tuple(coeffs))

    @classmethod
    def exp_minus_one(cls, order: int) -> 'PowerSeries':
        """e^t - 1 (zero constant term)"""
        return cls(tuple([Fraction(0)] + [Fraction(1, math.factorial(k)) for k in range(1, order + 1)]))

    @classmethod
    def monomial(cls, power: int, order: int) -> 'PowerSeries':
        coeffs = [Fraction(0)] * (order + 1)
        if power <= order:
            coeffs[power] = Fraction(1)
        return cls(tuple(coeffs))

    def truncate(self, order: int) -> 'PowerSeries':
        return PowerSeries.from_coefficients(self.coefficients, order)

    def __add__(self, other: 'PowerSeries') -> 'PowerSeries':
        order = min(self.truncation_order, other.truncation_order)
        return PowerSeries(tuple(a + b for a, b in zip(self.coefficients[:order + 1], other.coefficients[:order + 1])))

    def __mul__(self, other: Union['PowerSeries', Number]) -> 'PowerSeries':
        if isinstance(other, PowerSeries):
            return series_multiply(self, other)
        return PowerSeries(tuple(c * Fraction(other) for c in self.coefficients))

    __rmul__ = __mul__

    def power(self, n: int) -> 'PowerSeries':
        result = PowerSeries.from_coefficients([1], self.truncation_order)
        for _ in range(n):
            result = series_multiply(result, self)
        return result

    def factorial_scaled(self) -> List[Fraction]:
        """k! times each coefficient (the exponential generating function values)"""
        return [c * math.factorial(k) for k, c in enumerate(self.coefficients)]

    def evaluate(self, t: float) -> float:
        value = 0.0
        for c in reversed(self.coefficients):
            value = value * t + float(c)
        return value

    def to_dict(self) -> Dict:
        return {'truncation_order': self.truncation_order,
                'coefficients': [str(c) for c in self.coefficients]}

    def __str__(self):
        head = ", ".join(str(c) for c in self.coefficients[:6])
        more = ", ..." if self.truncation_order > 5 else ""
        return f"PowerSeries(order={self.truncation_order}: {head}{more})"


def series_multiply(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the smaller order"""
    order = min(a.truncation_order, b.truncation_order)
    ca, cb = a.coefficients, b.coefficients
    return PowerSeries(tuple(sum((ca[j] * cb[k - j] for j in range(k + 1)), Fraction(0))
                             for k in range(order + 1)))


def series_divide(numerator: PowerSeries, denominator: PowerSeries) -> PowerSeries:
    """
    Exact quotient of two power series

    A common power of t is cancelled first: if the denominator starts at t^v,
    the numerator must vanish to the same order and both are shifted down by v
    (the quotient order drops by v).

    Raises:
        DegenerateDivisor: If the reduced denominator has no nonzero constant term
    """
    den = list(denominator.coefficients)
    num = list(numerator.coefficients)
    shift = next((k for k, c in enumerate(den) if c != 0), None)
    if shift is None:
        raise DegenerateDivisor("Denominator series is identically zero")
    if any(c != 0 for c in num[:shift]):
        raise DegenerateDivisor(f"Numerator does not vanish to order t^{shift} of the denominator")
    den, num = den[shift:], num[shift:]
    order = min(len(den), len(num)) - 1
    if order < 0:
        raise DegenerateDivisor("Nothing left after cancelling the common power of t")

    quotient: List[Fraction] = []
    for k in range(order + 1):
        acc = num[k] - sum((den[j] * quotient[k - j] for j in range(1, k + 1)), Fraction(0))
        quotient.append(acc / den[0])
    return PowerSeries(tuple(quotient))


# ========== Taylor Jets ==========

class TaylorJet:
    """
    Truncated Taylor expansion of a function at a point: coeffs[k] = f^(k)(x0)/k!

    Arithmetic propagates the expansion exactly (up to rounding), giving
    derivative chains without finite differences.
    """

    def __init__(self, coeffs: Sequence[complex]):
        self.coeffs = np.array(coeffs, dtype=np.result_type(np.asarray(coeffs).dtype, np.float64))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def variable(cls, x0: float, order: int) -> 'TaylorJet':
        coeffs = np.zeros(order + 1)
        coeffs[0] = x0
        if order >= 1:
            coeffs[1] = 1.0
        return cls(coeffs)

    @classmethod
    def constant(cls, value: complex, order: int) -> 'TaylorJet':
        coeffs = np.zeros(order + 1, dtype=np.result_type(type(value), np.float64))
        coeffs[0] = value
        return cls(coeffs)

    @classmethod
    def from_derivatives(cls, derivatives: Sequence[float]) -> 'TaylorJet':
        return cls([d / math.factorial(k) for k, d in enumerate(derivatives)])

    def _lift(self, other) -> 'TaylorJet':
        if isinstance(other, TaylorJet):
            return other
        return TaylorJet.constant(other, self.order)

    def truncate(self, order: int) -> 'TaylorJet':
        return TaylorJet(self.coeffs[:order + 1])

    def derivatives(self) -> np.ndarray:
        """f^(k)(x0) for k = 0..order"""
        return self.coeffs * np.array([math.factorial(k) for k in range(self.order + 1)], dtype=float)

    def derivative(self) -> 'TaylorJet':
        """Jet of f' (one order lower)"""
        if self.order == 0:
            return TaylorJet(np.zeros(1))
        return TaylorJet(self.coeffs[1:] * np.arange(1, self.order + 1))

    @property
    def value(self):
        return self.coeffs[0]

    def __add__(self, other):
        other = self._lift(other)
        n = min(self.order, other.order) + 1
        return TaylorJet(self.coeffs[:n] + other.coeffs[:n])

    __radd__ = __add__

    def __neg__(self):
        return TaylorJet(-self.coeffs)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TaylorJet):
            return TaylorJet(self.coeffs * other)
        n = min(self.order, other.order) + 1
        return TaylorJet(np.convolve(self.coeffs[:n], other.coeffs[:n])[:n])

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, TaylorJet):
            return TaylorJet(self.coeffs / other)
        n = min(self.order, other.order) + 1
        a, b = self.coeffs[:n], other.coeffs[:n]
        if b[0] == 0:
            raise ZeroDivisionError("Jet division by a function vanishing at the expansion point")
        q = np.zeros(n, dtype=np.result_type(a, b))
        for k in range(n):
            q[k] = (a[k] - np.dot(b[1:k + 1], q[k - 1::-1][:k])) / b[0] if k else a[0] / b[0]
        return TaylorJet(q)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def exp(self) -> 'TaylorJet':
        u, n = self.coeffs, self.order + 1
        a = np.zeros(n, dtype=u.dtype)
        a[0] = np.exp(u[0])
        j = np.arange(n)
        for k in range(1, n):
            a[k] = np.dot(j[1:k + 1] * u[1:k + 1], a[k - 1::-1][:k]) / k
        return TaylorJet(a)

    def log(self) -> 'TaylorJet':
        u, n = self.coeffs, self.order + 1
        if u[0] == 0:
            raise ZeroDivisionError("log of a jet vanishing at the expansion point")
        out = np.zeros(n, dtype=np.result_type(u.dtype, np.complex128 if np.iscomplexobj(u) else np.float64))
        out[0] = np.log(u[0])
        j = np.arange(n)
        for k in range(1, n):
            s = np.dot(j[1:k] * out[1:k], u[k - 1:0:-1][:k - 1]) if k > 1 else 0.0
            out[k] = (u[k] - s / k) / u[0]
        return TaylorJet(out)

    def __pow__(self, p: float) -> 'TaylorJet':
        u, n = self.coeffs, self.order + 1
        r = np.zeros(n, dtype=u.dtype)
        r[0] = u[0] ** p
        for k in range(1, n):
            j = np.arange(1, k + 1)
            r[k] = np.dot(((p + 1) * j - k) * u[1:k + 1], r[k - 1::-1][:k]) / (k * u[0])
        return TaylorJet(r)

    def compose(self, outer: Sequence[complex]) -> 'TaylorJet':
        """g(self) where outer[k] = g^(k)(self.value)/k!"""
        du = TaylorJet(np.concatenate([[0.0], self.coeffs[1:]]))
        n = min(len(outer) - 1, self.order)
        result = TaylorJet.constant(outer[n], self.order)
        for k in range(n - 1, -1, -1):
            result = result * du + outer[k]
        return result

    def __repr__(self):
        return f"TaylorJet({self.coeffs!r})"


# ========== Analytic Function Handles ==========

@dataclass(frozen=True)
class AnalyticFunction:
    """
    A real function on (0, inf) with optional exact derivative chain and
    holomorphic extension

    jet(x, n) must return the order-n TaylorJet at x; complex_value evaluates
    the extension to the cut plane; mp_laplace evaluates the extension with
    mpmath numbers (used for Laplace inversion).
    """
    name: str
    value: RealFunction
    jet: Optional[Callable[[float, int], TaylorJet]] = field(default=None, compare=False)
    complex_value: Optional[Callable[[complex], complex]] = field(default=None, compare=False)
    mp_value: Optional[Callable] = field(default=None, compare=False)

    def __call__(self, x: float) -> float:
        return self.value(x)

    @property
    def has_jet(self) -> bool:
        return self.jet is not None

    @classmethod
    def from_jet(cls, name: str, jet: Callable[[float, int], TaylorJet],
                 complex_value: Optional[Callable[[complex], complex]] = None,
                 mp_value: Optional[Callable] = None) -> 'AnalyticFunction':
        return cls(name, lambda x: float(np.real(jet(x, 0).value)), jet, complex_value, mp_value)

    def derivative(self) -> 'AnalyticFunction':
        if self.jet is None:
            return AnalyticFunction(f"{self.name}'", lambda x: derivative_n(self.value, x, 1, lower_bound=0.0).value)
        jet = self.jet
        return AnalyticFunction.from_jet(f"{self.name}'", lambda x, n: jet(x, n + 1).derivative())

    def times_power(self, p: float) -> 'AnalyticFunction':
        """x^p f(x)"""
        if p == 0:
            return self
        if self.jet is None:
            return AnalyticFunction(f"x^{p:g}*{self.name}", lambda x: x ** p * self.value(x))
        jet = self.jet
        return AnalyticFunction.from_jet(f"x^{p:g}*{self.name}",
                                         lambda x, n: TaylorJet.variable(x, n) ** p * jet(x, n))

    def neg_log_derivative(self) -> 'AnalyticFunction':
        """-f'/f"""
        if self.jet is None:
            return AnalyticFunction(f"-dlog({self.name})",
                                    lambda x: -derivative_n(self.value, x, 1, lower_bound=0.0).value / self.value(x))
        jet = self.jet

        def _jet(x, n):
            full = jet(x, n + 1)
            return -(full.derivative() / full.truncate(n))
        return AnalyticFunction.from_jet(f"-dlog({self.name})", _jet)

    def __mul__(self, other: 'AnalyticFunction') -> 'AnalyticFunction':
        name = f"{self.name}*{other.name}"
        if self.jet is None or other.jet is None:
            return AnalyticFunction(name, lambda x: self.value(x) * other.value(x))
        a, b = self.jet, other.jet
        cv = None
        if self.complex_value is not None and other.complex_value is not None:
            fa, fb = self.complex_value, other.complex_value
            cv = lambda z: fa(z) * fb(z)  # noqa: E731
        return AnalyticFunction.from_jet(name, lambda x, n: a(x, n) * b(x, n), cv)


# ========== Differentiation ==========

@dataclass(frozen=True)
class DerivativeEstimate:
    value: float
    error: float


def _central_difference(f: RealFunction, x: float, n: int, h: float) -> float:
    total = 0.0
    for k in range(n + 1):
        total += (-1) ** k * math.comb(n, k) * f(x + (n / 2.0 - k) * h)
    return total / h ** n


def derivative_n(f: RealFunction, x: float, n: int, step_hint: Optional[float] = None,
                 analytic: Optional[Callable[[float, int], float]] = None,
                 lower_bound: Optional[float] = None) -> DerivativeEstimate:
    """
    n-th derivative by central differences with Ridders extrapolation

    Args:
        f: Function to differentiate
        x: Evaluation point
        n: Derivative order (0..8)
        step_hint: Initial step; defaults to 0.2*max(1,|x|)
        analytic: Exact derivative chain analytic(x, n); used directly when given
        lower_bound: Sample points are kept strictly above this value

    Returns:
        DerivativeEstimate with value and error estimate

    Raises:
        StepUnderflow: If the step ladder collapses below machine precision
    """
    if n < 0 or n > config.DERIVATIVE_MAX_ORDER:
        raise ValueError(f"Derivative order must be in 0..{config.DERIVATIVE_MAX_ORDER}, got {n}")
    if n == 0:
        return DerivativeEstimate(float(f(x)), 0.0)
    if analytic is not None:
        return DerivativeEstimate(float(analytic(x, n)), 0.0)

    h = step_hint if step_hint is not None else 0.2 * max(1.0, abs(x))
    if lower_bound is not None and x > lower_bound:
        h = min(h, 0.9 * 2.0 * (x - lower_bound) / n)
    if h <= 64 * np.finfo(float).eps * max(1.0, abs(x)):
        raise StepUnderflow(f"Initial step {h:.3e} too small at x={x} for order {n}")

    con = config.DERIVATIVE_LADDER_RATIO
    con2 = con * con
    ntab = config.DERIVATIVE_LADDER_LENGTH
    table = np.zeros((ntab, ntab))
    table[0, 0] = _central_difference(f, x, n, h)
    best, err = table[0, 0], np.inf
    for i in range(1, ntab):
        h /= con
        table[0, i] = _central_difference(f, x, n, h)
        fac = con2
        for j in range(1, i + 1):
            table[j, i] = (table[j - 1, i] * fac - table[j - 1, i - 1]) / (fac - 1.0)
            fac *= con2
            errt = max(abs(table[j, i] - table[j - 1, i]), abs(table[j, i] - table[j - 1, i - 1]))
            if errt <= err:
                err, best = errt, table[j, i]
        if abs(table[i, i] - table[i - 1, i - 1]) >= 2.0 * err:
            break

    if not np.isfinite(best):
        raise StepUnderflow(f"Difference ladder produced a non-finite value at x={x}, n={n}")
    return DerivativeEstimate(float(best), float(err))


# ========== Limit Extrapolation ==========

@dataclass(frozen=True)
class LimitEstimate:
    value: float
    error: float


def extrapolate_limit(samples: Sequence[Tuple[float, float]]) -> LimitEstimate:
    """
    Extrapolate value(h) to h -> 0 by polynomial (Neville) extrapolation

    Args:
        samples: (h, value) pairs with h > 0 strictly decreasing

    Returns:
        LimitEstimate; error is the change from dropping the coarsest sample

    Raises:
        InsufficientSamples: If fewer than 3 samples are given
    """
    if len(samples) < config.EXTRAPOLATION_MIN_SAMPLES:
        raise InsufficientSamples(f"Need at least {config.EXTRAPOLATION_MIN_SAMPLES} samples, got {len(samples)}")
    hs = [float(h) for h, _ in samples]
    if any(h <= 0 for h in hs) or any(b >= a for a, b in zip(hs, hs[1:])):
        raise ValueError(f"Sample steps must be positive and strictly decreasing: {hs}")

    def neville(points: Sequence[Tuple[float, float]]) -> float:
        xs = [p[0] for p in points]
        p = [p[1] for p in points]
        m = len(points)
        for level in range(1, m):
            for i in range(m - level):
                p[i] = (xs[i] * p[i + 1] - xs[i + level] * p[i]) / (xs[i] - xs[i + level])
        return p[0]

    full = neville(samples)
    reduced = neville(samples[1:])
    return LimitEstimate(float(full), float(abs(full - reduced)))


# ========== Laplace Inversion ==========

def laplace_density(transform_mp: Callable, t: float, dps: int = 30) -> float:
    """
    Representing density phi(t) of F = L(phi) by Talbot contour inversion

    transform_mp must accept and return mpmath numbers; its singularities must
    lie on (-inf, 0].
    """
    with mpmath.workdps(dps):
        value = mpmath.invertlaplace(transform_mp, t, method='talbot')
    return float(mpmath.re(value))


if __name__ == "__main__":
    import sys
    logging.basicConfig(level=logging.DEBUG, stream=sys.stdout)

    print("Numerics Core Test\n")
    print("=" * 60)
    print(f"int_0^inf e^-t dt = {integrate(lambda t: math.exp(-t), 0.0, math.inf):.15f}")
    print(f"int_0^1 log t dt  = {integrate(math.log, 0.0, 1.0):.15f}")
    bern = series_divide(PowerSeries.monomial(1, 12), PowerSeries.exp_minus_one(12))
    print(f"t/(e^t-1) = {bern}")
    print(f"d^2/dx^2 1/x at 2 = {derivative_n(lambda x: 1 / x, 2.0, 2).value:.12f}")
    print(f"lim cos h = {extrapolate_limit([(0.1, math.cos(0.1)), (0.05, math.cos(0.05)), (0.025, math.cos(0.025))])}")
