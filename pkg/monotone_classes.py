"""
Monotone Classes
Sample-based certification of completely monotonic functions and their relatives

- check_cm: CM and CM(alpha) by derivative sign scans (exact jets when available)
- check_lcm: logarithmic complete monotonicity with Horn cross-checks
- check_stieltjes_order: generalized Stieltjes classes via the c_k operators
- check_bernstein_order / thorin_check / exp_bernstein_check: Bernstein-type classes
- evaluate_bernstein_rep / thorin_approximant / xl_transform / post_widder_density:
  representation evaluators

Every verdict is about the sampled points only.
"""

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import optimize

import config
from class_report import ClassLabel, ClassReport, Verdict, Witness, combine
from errors import DomainError, NonConvergence, NonPositive, StepUnderflow
from halfplane_analysis import DensityPiece, MeasureSpec
from numerics_core import (AnalyticFunction, Grid, QuadratureConfig, TaylorJet, derivative_n,
                           integrate, laplace_density)
from special_functions import gamma, incomplete_beta, incomplete_gamma

logger = logging.getLogger(__name__)

FunctionLike = Union[AnalyticFunction, Callable[[float], float]]

DEFAULT_GRID = Grid.from_tuple(config.CM_GRID)

__all__ = ['ClassReport', 'BernsteinRep', 'check_cm', 'check_cm_density', 'check_lcm',
           'check_stieltjes_order', 'check_bernstein_order', 'evaluate_bernstein_rep', 'xl_transform', 'xl_image',
           'post_widder_density', 'thorin_check', 'thorin_approximant', 'exp_bernstein_check',
           'class_inclusion_suite']


def as_analytic(f: FunctionLike, name: str = "") -> AnalyticFunction:
    if isinstance(f, AnalyticFunction):
        return f
    return AnalyticFunction(name or getattr(f, '__name__', 'f'), f)


@dataclass(frozen=True)
class BernsteinRep:
    """
    a + b x^lambda + int gamma(lambda, x t) dmu(t)/t^lambda

    a is the constant term and b the coefficient of x^lambda.
    """
    a: float
    b: float
    order: float
    measure: MeasureSpec = field(default_factory=MeasureSpec)

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError(f"Bernstein representation needs a, b >= 0, got a={self.a}, b={self.b}")
        if self.order <= 0:
            raise ValueError(f"Order must be positive, got {self.order}")
        if any(loc <= 0 for loc, _ in self.measure.point_masses) or \
                any(p.lower < 0 for p in self.measure.density_pieces):
            raise ValueError("Bernstein measures live on (0, inf)")


# ========== Sign Scans ==========

@dataclass
class _ScanState:
    """Smallest relative margin seen during a scan, and the first failing sample"""
    margin: float = math.inf
    witness: Optional[Witness] = None
    failures: int = 0

    def refute(self, x: float, order: int, value: float) -> None:
        self.witness = Witness(float(x), order, float(value))


def _finish(state: _ScanState, label: ClassLabel, function_id: str, grid: Grid, orders: int, tol: float,
            parameter: Optional[float], start: float, details: Optional[Dict] = None) -> ClassReport:
    details = dict(details or {})
    if state.witness is not None:
        verdict = Verdict.REFUTED
    elif state.failures:
        verdict = Verdict.INCONCLUSIVE
        details['failed_points'] = state.failures
    else:
        verdict = Verdict.VERIFIED
        details['min_margin'] = state.margin
    report = ClassReport(label, verdict, function_id, parameter, state.witness, grid, orders, tol, details,
                         time.perf_counter() - start)
    if report.refuted:
        logger.debug(f"{function_id} not in {report.label}: {state.witness}")
    return report


def _signed_derivative(coefficient: float, n: int) -> float:
    """(-1)^n f^(n) from the n-th Taylor coefficient"""
    if n > 170:
        return math.copysign(math.inf, (-1) ** n * coefficient)
    return (-1) ** n * coefficient * math.factorial(n)


def _jet_scan(jets: Callable[[float, int], Tuple[np.ndarray, Optional[np.ndarray]]], xs: Iterable[float],
              max_order: int, tol: float, state: _ScanState) -> None:
    """
    Sign scan of normalized Taylor coefficients q_n = (-1)^n c_n x^n

    magnitudes (same normalization) bound the rounding noise of cancelling sums;
    the threshold is tol * max(1 + |q_0|, magnitude_n).
    """
    for x in xs:
        coeffs, magnitudes = jets(x, max_order)
        coeffs = np.real(np.asarray(coeffs))
        scale = 1.0 + abs(coeffs[0])
        for n in range(max_order + 1):
            normalizer = x ** n
            q = (-1) ** n * coeffs[n] * normalizer
            reference = scale if magnitudes is None else max(scale, abs(magnitudes[n]) * normalizer)
            if not np.isfinite(q):
                state.failures += 1
                continue
            if q < -tol * reference:
                state.refute(x, n, _signed_derivative(coeffs[n], n))
                return
            state.margin = min(state.margin, q / reference)


def _numeric_scan(f: Callable[[float], float], xs: Iterable[float], max_order: int, tol: float,
                  state: _ScanState) -> None:
    for x in xs:
        value = f(x)
        threshold_base = tol * (abs(value) + 1.0)
        for n in range(min(max_order, config.DERIVATIVE_MAX_ORDER) + 1):
            try:
                estimate = derivative_n(f, x, n, lower_bound=0.0)
            except StepUnderflow as exc:
                logger.debug(f"Derivative {n} at x={x} failed: {exc}")
                state.failures += 1
                continue
            signed = (-1) ** n * estimate.value
            threshold = threshold_base + 3.0 * estimate.error
            if signed < -threshold:
                state.refute(x, n, signed)
                return
            state.margin = min(state.margin, (signed + threshold) / (abs(value) + 1.0))


def check_cm(f: FunctionLike, alpha: float = 0.0, grid: Optional[Grid] = None,
             max_order: int = config.CM_MAX_ORDER, tol: float = config.CM_TOL,
             function_id: str = "", density_grid: Optional[Grid] = None) -> ClassReport:
    """
    Check (-1)^n d^n/dx^n [x^alpha f(x)] >= -tol at the grid points for n = 0..max_order

    Functions with a jet are scanned through their exact Taylor coefficients (any
    order); others through finite differences (order <= 8). With density_grid and
    an mpmath extension, the Laplace density is also scanned for negativity.

    Returns:
        ClassReport labelled CM or CM(alpha)
    """
    if max_order > config.JET_MAX_ORDER:
        raise DomainError(f"Scans are limited to order {config.JET_MAX_ORDER}, got {max_order}")
    start = time.perf_counter()
    grid = grid or DEFAULT_GRID
    f = as_analytic(f)
    function_id = function_id or f.name
    g = f.times_power(alpha) if alpha else f
    label = ClassLabel.CM_ALPHA if alpha else ClassLabel.CM
    parameter = alpha if alpha else None
    state = _ScanState()

    if g.has_jet:
        _jet_scan(lambda x, n: (g.jet(x, n).coeffs, None), grid.points(), max_order, tol, state)
    else:
        if max_order > config.DERIVATIVE_MAX_ORDER:
            logger.warning(f"Numeric scan of {function_id} capped at order {config.DERIVATIVE_MAX_ORDER}")
        _numeric_scan(g.value, grid.points(), max_order, tol, state)
    orders = max_order if g.has_jet else min(max_order, config.DERIVATIVE_MAX_ORDER)
    report = _finish(state, label, function_id, grid, orders, tol, parameter, start,
                     {'method': 'jet' if g.has_jet else 'finite-difference'})

    if density_grid is not None and not report.refuted:
        density = check_cm_density(g, density_grid, tol, function_id)
        merged = combine([report, density], label, function_id, parameter)
        merged.grid = grid
        return merged
    return report


def check_cm_density(f: AnalyticFunction, grid: Grid, tol: float = config.CM_TOL,
                     function_id: str = "") -> ClassReport:
    """
    Sign scan of the Laplace density of f, recovered by Talbot inversion

    By Bernstein's theorem f is CM exactly when this density is a positive measure.
    Negativity is judged relative to the largest sampled |density|.
    """
    if f.mp_value is None:
        raise DomainError(f"{f.name} has no mpmath extension for Laplace inversion")
    start = time.perf_counter()
    ts = grid.points()
    values = np.array([laplace_density(f.mp_value, t) for t in ts])
    scale = float(np.max(np.abs(values))) or 1.0
    worst = int(np.argmin(values))
    details = {'method': 'talbot', 'min_density': float(values[worst]), 'scale': scale}
    if values[worst] >= -tol * scale:
        return ClassReport(ClassLabel.CM, Verdict.VERIFIED, function_id or f.name, None, None, grid, 0, tol,
                           details, time.perf_counter() - start)
    return ClassReport(ClassLabel.CM, Verdict.REFUTED, function_id or f.name, None,
                       Witness(float(ts[worst]), None, float(values[worst])), grid, 0, tol, details,
                       time.perf_counter() - start)


# ========== LCM ==========

def check_lcm(f: FunctionLike, grid: Optional[Grid] = None, max_order: int = config.CM_MAX_ORDER,
              tol: float = config.CM_TOL, function_id: str = "") -> ClassReport:
    """
    -f'/f CM, cross-checked against Horn's criterion f^{1/n} CM for n = 1, 2, 3

    Raises:
        NonPositive: If f <= 0 at a sample
    """
    start = time.perf_counter()
    grid = grid or DEFAULT_GRID
    f = as_analytic(f)
    function_id = function_id or f.name
    for x in grid.points():
        value = f(x)
        if not value > 0:
            raise NonPositive(f"{function_id}({x:g}) = {value:g} is not positive")

    main = check_cm(f.neg_log_derivative(), 0.0, grid, max_order, tol, f"-dlog({function_id})")
    horn = []
    for n in (1, 2, 3):
        root = _power(f, 1.0 / n)
        horn.append(check_cm(root, 0.0, grid, max_order, tol, f"{function_id}^(1/{n})"))

    details = {'derivative_scan': main.to_dict(), 'horn': [r.to_dict() for r in horn]}
    if main.verified and any(r.refuted for r in horn):
        # LCM implies every f^c is CM; a refuted root means the scan is not trustworthy here
        logger.warning(f"{function_id}: -f'/f scan verified but a Horn root check refuted")
        return ClassReport(ClassLabel.LCM, Verdict.INCONCLUSIVE, function_id, None, None, grid, main.orders_checked,
                           tol, details, time.perf_counter() - start)
    return ClassReport(ClassLabel.LCM, main.verdict, function_id, None, main.witness, grid, main.orders_checked,
                       tol, details, time.perf_counter() - start)


def _power(f: AnalyticFunction, p: float) -> AnalyticFunction:
    name = f"{f.name}^{p:g}"
    if f.jet is None:
        return AnalyticFunction(name, lambda x: f(x) ** p)
    jet = f.jet
    return AnalyticFunction.from_jet(name, lambda x, n: jet(x, n) ** p)


# ========== Generalized Stieltjes ==========

def _ck_jets(f: AnalyticFunction, lam: float, k: int) -> Callable[[float, int], Tuple[np.ndarray, np.ndarray]]:
    """Jets of c_k(f) = x^{1-lambda} (x^{lambda-1+k} f)^(k) with matching magnitude jets"""
    def jets(x: float, order: int) -> Tuple[np.ndarray, np.ndarray]:
        total = order + k
        base = f.jet(x, total)
        weight = TaylorJet.variable(x, total) ** (lam - 1 + k)
        product = weight * base
        magnitude = TaylorJet(np.abs(weight.coeffs)) * TaylorJet(np.abs(np.real(base.coeffs)))
        for _ in range(k):
            product = product.derivative()
            magnitude = magnitude.derivative()
        outer = TaylorJet.variable(x, order) ** (1 - lam)
        return (outer * product).coeffs, (TaylorJet(np.abs(outer.coeffs)) * magnitude).coeffs
    return jets


def _ck_numeric(f: AnalyticFunction, lam: float, k: int) -> Callable[[float], float]:
    """c_k(f) by the product rule with binomial weights and finite-difference derivatives of f"""
    p = lam - 1 + k

    def c_k(x: float) -> float:
        total, falling = 0.0, 1.0
        for j in range(k + 1):
            derivative = derivative_n(f.value, x, k - j, lower_bound=0.0).value
            total += math.comb(k, j) * falling * x ** (p - j) * derivative
            falling *= (p - j)
        return x ** (1 - lam) * total
    return c_k


def check_stieltjes_order(f: FunctionLike, lam: float, k_max: int = config.STIELTJES_K_MAX,
                          grid: Optional[Grid] = None, tol: float = config.CM_TOL,
                          max_order: int = config.CM_MAX_ORDER, function_id: str = "") -> ClassReport:
    """
    Widder-Sokal scan: c_k(f)(x) = x^{1-lambda} (x^{lambda-1+k} f(x))^(k) CM for k = 0..k_max

    Returns:
        ClassReport labelled S_lambda; a refutation witness carries the failing k in details
    """
    if lam <= 0:
        raise DomainError(f"Stieltjes order must be positive, got {lam}")
    start = time.perf_counter()
    grid = grid or DEFAULT_GRID
    f = as_analytic(f)
    function_id = function_id or f.name
    parts = []
    for k in range(k_max + 1):
        state = _ScanState()
        if f.has_jet:
            _jet_scan(_ck_jets(f, lam, k), grid.points(), max_order, tol, state)
        else:
            _numeric_scan(_ck_numeric(f, lam, k), grid.points(), max(0, min(max_order, 8 - k)), tol, state)
        part = _finish(state, ClassLabel.CM, f"c_{k}({function_id})", grid, max_order, tol, None, start, {'k': k})
        parts.append(part)
        if part.refuted:
            logger.debug(f"{function_id} not in S_{lam:g}: c_{k} fails at {part.witness}")
            break
    report = combine(parts, ClassLabel.STIELTJES, function_id, lam)
    report.grid = grid
    report.tol = tol
    report.details['k_max'] = k_max
    report.elapsed = time.perf_counter() - start
    return report


# ========== Bernstein & Thorin ==========

def check_bernstein_order(g: FunctionLike, lam: float, grid: Optional[Grid] = None,
                          max_order: int = config.CM_MAX_ORDER, tol: float = config.CM_TOL,
                          function_id: str = "") -> ClassReport:
    """x^{1-lambda} g'(x) CM, plus the companion scan of g(x)/x^lambda"""
    if lam <= 0:
        raise DomainError(f"Bernstein order must be positive, got {lam}")
    g = as_analytic(g)
    function_id = function_id or g.name
    primary = check_cm(g.derivative().times_power(1.0 - lam), 0.0, grid, max_order, tol,
                       f"x^(1-{lam:g})*{function_id}'")
    companion = check_cm(g.times_power(-lam), 0.0, grid, max_order, tol, f"{function_id}/x^{lam:g}")
    report = combine([primary, companion], ClassLabel.BERNSTEIN, function_id, lam)
    report.grid = primary.grid
    return report


def thorin_check(f: FunctionLike, lam: float, alpha: float, grid: Optional[Grid] = None,
                 tol: float = config.CM_TOL, max_order: int = config.CM_MAX_ORDER,
                 function_id: str = "") -> ClassReport:
    """f in T_{lambda,alpha} iff x^{1-lambda} f'(x) is in S_{lambda+1-alpha}"""
    if not alpha < lam + 1:
        raise DomainError(f"Thorin class needs alpha < lambda + 1, got alpha={alpha}, lambda={lam}")
    f = as_analytic(f)
    function_id = function_id or f.name
    inner = check_stieltjes_order(f.derivative().times_power(1.0 - lam), lam + 1.0 - alpha,
                                  grid=grid, tol=tol, max_order=max_order,
                                  function_id=f"x^(1-{lam:g})*{function_id}'")
    inner.class_label = ClassLabel.THORIN
    inner.function_id = function_id
    inner.parameter = lam
    inner.details['alpha'] = alpha
    return inner


def exp_bernstein_check(g: FunctionLike, x_list: Sequence[float], grid: Optional[Grid] = None,
                        tol: float = config.CM_TOL, max_order: int = config.CM_MAX_ORDER,
                        function_id: str = "") -> ClassReport:
    """g is Bernstein iff t -> exp(-x g(t)) is CM for every x > 0; scanned for x in x_list"""
    g = as_analytic(g)
    function_id = function_id or g.name
    parts = []
    for x in x_list:
        if x <= 0:
            raise DomainError(f"Exponent parameters must be positive, got {x}")
        if g.jet is not None:
            jet = g.jet
            composed = AnalyticFunction.from_jet(f"exp(-{x:g}*{function_id})",
                                                 lambda t, n, x=x: (jet(t, n) * (-x)).exp())
        else:
            composed = AnalyticFunction(f"exp(-{x:g}*{function_id})", lambda t, x=x: math.exp(-x * g(t)))
        parts.append(check_cm(composed, 0.0, grid, max_order, tol))
    report = combine(parts, ClassLabel.BERNSTEIN, function_id, 1.0)
    report.grid = parts[0].grid if parts else grid
    return report


def evaluate_bernstein_rep(rep: BernsteinRep, x: float) -> float:
    """a + b x^lambda + int gamma(lambda, x t) dmu(t)/t^lambda"""
    if x <= 0:
        raise DomainError(f"x must be positive, got {x}")
    lam = rep.order
    integral = rep.measure.integrate(lambda t: incomplete_gamma(lam, x * t) / t ** lam).real
    return rep.a + rep.b * x ** lam + integral


def _truncate_measure(measure: MeasureSpec, lam: float) -> MeasureSpec:
    """Cut infinite density pieces at the configured quantile of dmu(t)/(1+t)^lambda"""
    pieces = []
    for piece in measure.density_pieces:
        if math.isfinite(piece.upper):
            pieces.append(piece)
            continue
        weight = lambda t, d=piece.density: d(t) / (1.0 + t) ** lam  # noqa: E731
        total = integrate(weight, piece.lower, math.inf)
        target = config.THORIN_QUANTILE * total
        upper = max(piece.lower + 1.0, 1.0)
        while integrate(weight, piece.lower, upper) < target:
            upper *= 2.0
        cut = optimize.brentq(lambda u: integrate(weight, piece.lower, u) - target, piece.lower, upper,
                              xtol=1e-10 * upper)
        pieces.append(DensityPiece(piece.lower, cut, piece.density, piece.singular_lower, False,
                                   tuple(p for p in piece.breakpoints if p < cut)))
    return MeasureSpec(measure.point_masses, tuple(pieces))


def thorin_approximant(rep: BernsteinRep, n: int, x: float) -> float:
    """
    a + b x^lambda + (Gamma(lambda+n)/Gamma(n)) int B(lambda, n, x/(x + n/t)) dmu(t)/t^lambda

    B is the incomplete beta function; the approximants converge pointwise to
    evaluate_bernstein_rep as n grows.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if x <= 0:
        raise DomainError(f"x must be positive, got {x}")
    lam = rep.order
    factor = math.exp(math.lgamma(lam + n) - math.lgamma(n)) if lam + n > 171 else gamma(lam + n) / gamma(n)
    measure = _truncate_measure(rep.measure, lam)
    integral = measure.integrate(lambda t: incomplete_beta(lam, n, x / (x + n / t)) / t ** lam).real
    return rep.a + rep.b * x ** lam + factor * integral


def xl_transform(g: Callable[[float], float], x: float,
                 cfg: Optional[QuadratureConfig] = None) -> float:
    """
    XL(g)(x) = x int_0^inf e^{-xt} g(t) dt

    Raises:
        NonConvergence: If e^{-xt} g(t) does not decay (super-exponential g)
    """
    if x <= 0:
        raise DomainError(f"x must be positive, got {x}")
    probe = 1e3 / x
    try:
        tail = abs(math.exp(-x * probe) * g(probe))
    except OverflowError as exc:
        raise NonConvergence(f"Laplace integrand overflows at t={probe:g}") from exc
    if not math.isfinite(tail) or tail > 1.0:
        raise NonConvergence(f"e^(-xt) g(t) does not decay (|value|={tail:g} at t={probe:g})")
    value = x * integrate(lambda t: math.exp(-x * t) * g(t), 0.0, math.inf, cfg)
    if not math.isfinite(value):
        raise NonConvergence(f"XL transform is not finite at x={x}", value)
    return value


def xl_image(g: Callable[[float], float], name: str = "g") -> AnalyticFunction:
    """
    XL(g) as an AnalyticFunction

    The jet of the Laplace transform comes from the moments
    int (-t)^k e^{-xt} g(t) dt / k!, then is multiplied by the jet of x.
    """
    def laplace_jet(x: float, n: int) -> TaylorJet:
        coeffs = [integrate(lambda t, k=k: (-t) ** k * math.exp(-x * t) * g(t), 0.0, math.inf) / math.factorial(k)
                  for k in range(n + 1)]
        return TaylorJet(coeffs)

    return AnalyticFunction(f"XL({name})", lambda x: xl_transform(g, x),
                            lambda x, n: TaylorJet.variable(x, n) * laplace_jet(x, n))


def post_widder_density(f: FunctionLike, t: float, n: int) -> float:
    """
    n-th Post-Widder approximant ((-1)^n f^(n)(n/t)/n!) (n/t)^{n+1}

    Uses the Taylor jet of f when present (any n); otherwise finite differences (n <= 8).
    """
    if t <= 0:
        raise DomainError(f"t must be positive, got {t}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    f = as_analytic(f)
    x = n / t
    if f.has_jet:
        coefficient = float(np.real(f.jet(x, n).coeffs[n]))
    else:
        coefficient = derivative_n(f.value, x, n, lower_bound=0.0).value / math.factorial(n)
    return (-1) ** n * coefficient * x ** (n + 1)


# ========== Class Inclusions ==========

def class_inclusion_suite(functions: Dict[str, AnalyticFunction], grid: Optional[Grid] = None,
                          tol: float = config.CM_TOL, max_order: int = 6) -> ClassReport:
    """
    Verdict consistency over the inclusions S_lambda in CM, LCM in CM,
    B_1 in B_2 and S_1 in S_2, for every function given
    """
    start = time.perf_counter()
    grid = grid or DEFAULT_GRID
    table: Dict[str, Dict[str, str]] = {}
    inconsistent: List[str] = []
    for name, f in functions.items():
        verdicts = {
            'CM': check_cm(f, grid=grid, max_order=max_order, tol=tol).verdict,
            'S1': check_stieltjes_order(f, 1.0, 2, grid, tol, max_order).verdict,
            'S2': check_stieltjes_order(f, 2.0, 2, grid, tol, max_order).verdict,
            'B1': check_bernstein_order(f, 1.0, grid, max_order, tol).verdict,
            'B2': check_bernstein_order(f, 2.0, grid, max_order, tol).verdict,
        }
        try:
            verdicts['LCM'] = check_lcm(f, grid, max_order, tol).verdict
        except NonPositive:
            verdicts['LCM'] = Verdict.REFUTED
        table[name] = {k: v.value for k, v in verdicts.items()}
        for smaller, larger in (('S1', 'CM'), ('S2', 'CM'), ('LCM', 'CM'), ('B1', 'B2'), ('S1', 'S2')):
            if verdicts[smaller] is Verdict.VERIFIED and verdicts[larger] is Verdict.REFUTED:
                inconsistent.append(f"{name}: {smaller} verified but {larger} refuted")
    details = {'verdicts': table, 'inconsistent': inconsistent}
    if inconsistent:
        return ClassReport(ClassLabel.PROPERTY, Verdict.REFUTED, "class_inclusions", None,
                           Witness(inconsistent[0], None, float(len(inconsistent))), grid, max_order, tol, details,
                           time.perf_counter() - start)
    return ClassReport(ClassLabel.PROPERTY, Verdict.VERIFIED, "class_inclusions", None, None, grid, max_order, tol,
                       details, time.perf_counter() - start)


if __name__ == "__main__":
    import sys
    logging.basicConfig(level=logging.DEBUG, stream=sys.stdout)

    print("Monotone Classes Test\n")
    print("=" * 60)
    exp_neg = AnalyticFunction.from_jet("exp_neg", lambda x, n: (-TaylorJet.variable(x, n)).exp())
    print(check_cm(exp_neg))
    print(check_cm(lambda x: x, function_id="identity"))
    print(check_stieltjes_order(exp_neg, 1.0))
    print(f"XL(1 - e^-t)(2) = {xl_transform(lambda t: -math.expm1(-t), 2.0):.12f}  (1/3 expected)")
