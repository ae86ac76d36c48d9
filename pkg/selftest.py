"""
Self Test
Acceptance suite covering every module, runnable from the command line

Each criterion returns a CriterionResult; `run_selftest` filters by group
and collects a summary.
"""

import cmath
import logging
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

import mpmath
import numpy as np

import asymptotics
import case_studies
import function_registry as registry
import halfplane_analysis as halfplane
import inverse_gamma
import monotone_classes as classes
import special_functions as sf
from errors import LownerError

logger = logging.getLogger(__name__)


@dataclass
class CriterionResult:
    number: int
    name: str
    group: str
    passed: bool
    details: Dict = field(default_factory=dict)
    elapsed: float = 0.0
    error: Optional[str] = None

    def to_dict(self) -> Dict:
        return {'criterion': self.number, 'name': self.name, 'group': self.group, 'passed': self.passed,
                'details': self.details, 'wall_time': round(self.elapsed, 3), 'error': self.error}


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    group: str
    check: Callable[[], Dict]


# ========== Criteria ==========

def _gamma_values() -> Dict:
    half = abs(sf.gamma(0.5) - math.sqrt(math.pi)) / math.sqrt(math.pi)
    factorial = max(abs(sf.gamma(n + 1.0) - math.factorial(n)) / math.factorial(n) for n in range(1, 21))
    return {'passed': half <= 1e-12 and factorial <= 1e-13, 'gamma_half_rel': half, 'factorial_rel': factorial}


def _branch() -> Dict:
    radii = np.geomspace(0.5, 20.0, 10)
    angles = np.linspace(-3.0, 3.0, 20)
    worst = 0.0
    for r in radii:
        for theta in angles:
            z = r * cmath.exp(1j * theta)
            ours = cmath.exp(complex(sf.log_gamma_principal(z)))
            oracle = complex(mpmath.gamma(mpmath.mpc(z.real, z.imag)))
            worst = max(worst, abs(ours - oracle) / abs(oracle))
    # d/dtheta log Gamma(r e^{i theta}) = i z psi(z): a 2 pi i jump would break the difference quotient
    jump, h = 0.0, 1e-5
    for theta in np.linspace(-3.0, 3.0, 61):
        z = 3.0 * cmath.exp(1j * theta)
        plus = complex(sf.log_gamma_principal(3.0 * cmath.exp(1j * (theta + h))))
        minus = complex(sf.log_gamma_principal(3.0 * cmath.exp(1j * (theta - h))))
        exact = 1j * z * complex(sf.polygamma(0, z))
        jump = max(jump, abs((plus - minus) / (2 * h) - exact) / max(1.0, abs(exact)))
    return {'passed': worst <= 1e-10 and jump <= 1e-6, 'max_rel_error': worst, 'max_arc_derivative_error': jump}


def _lerch() -> Dict:
    residuals = {x: sf.lerch_theorem_residual(x) for x in (0.5, 1.0, 2.0, 5.0)}
    return {'passed': max(residuals.values()) < 1e-6, 'residuals': residuals}


def _multiple_gamma() -> Dict:
    c = sf.CONSTANTS
    worst1 = worst2 = spread = 0.0
    for w in (1.0, 2.0, 3.0, 4.0):
        worst1 = max(worst1, abs(sf.log_multiple_gamma(1, w, 1) - (sf.log_gamma(w) - c.log_sqrt_two_pi)))
        expected = (0.5 * w * math.log(2 * math.pi) - sf.log_barnes_g(w, method="product").real
                    + c.zeta_prime_minus_one - c.log_sqrt_two_pi)
        worst2 = max(worst2, abs(sf.log_multiple_gamma(2, w, 2) - expected))
    for N in (1, 2, 3):
        values = [sf.log_multiple_gamma(N, 2.5, m) for m in range(N, N + 7)]
        spread = max(spread, max(values) - min(values))
    return {'passed': worst1 <= 1e-9 and worst2 <= 1e-6 and spread < 1e-9,
            'gamma1_error': worst1, 'gamma2_error': worst2, 'm_spread': spread}


def _binet() -> Dict:
    routes = {x: asymptotics.binet_routes(x) for x in (1.0, 2.0, 5.0, 10.0, 100.0)}
    bounded = all(0 < direct < 1 / (12 * x) for x, (direct, _) in routes.items())
    difference = max(abs(direct - integral) for direct, integral in routes.values())
    return {'passed': bounded and difference <= 1e-9, 'mu': {x: direct for x, (direct, _) in routes.items()},
            'route_difference': difference}


def _closed_form() -> Dict:
    worst = 0.0
    for n in range(1, 9):
        for w in (0.25, 1.0, 3.0, 5.0):
            worst = max(worst, abs(asymptotics.remainder_closed_form_N1(n, w) - asymptotics.taylor_gap(1, n, w)))
    return {'passed': worst <= 1e-10, 'max_difference': worst}


def _nu() -> Dict:
    ts = np.geomspace(1e-3, 50.0, 60)
    lowest = min(asymptotics.nu_m(m, t) for m in (1, 2, 3) for t in ts)
    laplace = 0.0
    for m, w in ((1, 2.0), (2, 1.0), (3, 3.0)):
        sign = (-1) ** (m - 1)
        laplace = max(laplace, abs(asymptotics.nu_laplace(m, w) - sign * asymptotics.remainder_RNm(2, 2 * m, w)))
    alternating = all((-1) ** k * (-1) ** (m - 1) * asymptotics.remainder_moment(2, 2 * m, w, k) > 0
                      for m in (1, 2) for w in (0.5, 2.0) for k in range(5))
    return {'passed': lowest >= 0 and laplace <= 1e-7 and alternating,
            'min_nu': lowest, 'laplace_error': laplace, 'derivative_signs_alternate': alternating}


def _positivity() -> Dict:
    n3 = [asymptotics.integrand_positivity_scan(3, m) for m in (6, 7)]
    odd = asymptotics.integrand_positivity_scan(2, 2, truncation=3)
    return {'passed': all(r.verified for r in n3) and odd.refuted,
            'N3': [r.verdict.value for r in n3], 'N2_odd': odd.to_dict()}


def _pick() -> Dict:
    pick = halfplane.verify_pick(halfplane.log_gamma_ratio, halfplane.HalfPlaneGrid(), 1e-9, "log_gamma_ratio")
    representation = halfplane.verify_logGamma_ratio_representation((0.5, 2.0, 5.0, 10.0, 100.0), 1e-6)
    density = halfplane.verify_density_recovery(np.linspace(0.15, 4.85, 20), 1e-4)
    return {'passed': pick.verified and representation.verified and density.verified,
            'pick': pick.verdict.value, 'representation': representation.verdict.value,
            'density': density.verdict.value}


def _unit_ball() -> Dict:
    table = case_studies.unit_ball_sequence(60)
    by_name = {r.function_id: r for r in table.reports}
    needed = ('unit_ball_decreasing', 'unit_ball_log_convex', 'unit_ball_limit_exp(-1/2)')
    return {'passed': all(by_name[name].verified for name in needed),
            'verdicts': {name: r.verdict.value for name, r in by_name.items()}}


def _inverse_gamma() -> Dict:
    rng = np.random.default_rng(20241017)
    zs = [r * cmath.exp(1j * theta) for r, theta in zip(rng.uniform(0.5, 5.0, 20), rng.uniform(0.2, math.pi - 0.2, 20))]
    trips = {k: inverse_gamma.branch_round_trip(k, zs) for k in (0, 1, 2)}
    x0 = inverse_gamma.extremal_points(0)[0]
    passed = (all(err <= 1e-10 and im > 0 for err, im in trips.values())
              and x0.residual < 1e-12 and 1.46163 < x0.x < 1.46164)
    return {'passed': passed, 'round_trips': {k: {'max_rel_error': e, 'min_imag': i} for k, (e, i) in trips.items()},
            'x0': x0.to_dict()}


def _h_family() -> Dict:
    below = case_studies.f_positivity_report(2.0, 1e-6)
    scan = case_studies.h_threshold_scan()
    t_min, value = scan.minimum(2.3)
    threshold = case_studies.h_threshold_bisect((2.0, 2.3))
    cm = case_studies.h_cm_threshold_check()
    passed = below.verified and value < -1e-4 and 2.15 < threshold.value < 2.22 and cm.verified
    return {'passed': passed, 'F_2.0': below.verdict.value, 'F_2.3_min': {'t': t_min, 'value': value},
            'threshold': threshold.to_dict(), 'cm_threshold': cm.verdict.value,
            'stieltjes': cm.details.get('stieltjes')}


def _g_lambda() -> Dict:
    ts = np.geomspace(1e-3, 20.0, 50)
    xi_error = max(abs(case_studies.xi(2.0, t) + math.expm1(-t)) for t in ts)
    suites = {lam: case_studies.g_lambda_suite(lam) for lam in (2.0, 3.0, 0.5)}
    return {'passed': xi_error <= 1e-12 and all(r.verified for r in suites.values()),
            'xi_error': xi_error, 'suites': {str(k): r.verdict.value for k, r in suites.items()}}


def _gamma_ratio() -> Dict:
    reports = {(a, b, x): case_studies.gamma_ratio_representation(a, b, (x,))
               for a, b, x in ((1.0, 1.0, 2.0), (0.5, 2.0, 1.0), (2.0, 3.0, 0.5))}
    return {'passed': all(r.verified for r in reports.values()),
            'verdicts': {str(k): r.verdict.value for k, r in reports.items()}}


def _post_widder() -> Dict:
    f = registry.inv_one_plus()
    exact = max(abs(classes.post_widder_density(f, 1.0, n) / (n / (n + 1.0)) ** (n + 1) - 1.0) for n in (8, 32, 128))
    errors = {n: abs(classes.post_widder_density(f, 1.0, n) - math.exp(-1.0)) for n in (8, 32, 128)}
    return {'passed': exact <= 1e-12 and all(e < 0.5 / n for n, e in errors.items()),
            'closed_form_rel_error': exact, 'errors': errors}


def _xl() -> Dict:
    xs = np.geomspace(0.1, 10.0, 10)
    worst = max(abs(classes.xl_transform(lambda t: -math.expm1(-t), x) - 1.0 / (x + 1.0)) for x in xs)
    image = classes.xl_image(lambda t: -math.expm1(-t), "one_minus_exp")
    widder = classes.check_stieltjes_order(image, 1.0, k_max=2, max_order=6)
    return {'passed': worst <= 1e-10 and widder.verified, 'max_error': worst, 'widder': widder.verdict.value}


def _inclusions() -> Dict:
    report = classes.class_inclusion_suite(registry.suite_functions())
    return {'passed': report.verified, 'inconsistent': report.details['inconsistent']}


CRITERIA: Sequence[Criterion] = (
    Criterion(1, "gamma values", "special", _gamma_values),
    Criterion(2, "log Gamma branch", "special", _branch),
    Criterion(3, "Lerch residual", "special", _lerch),
    Criterion(4, "multiple gamma", "asymptotics", _multiple_gamma),
    Criterion(5, "Binet bounds", "asymptotics", _binet),
    Criterion(6, "N=1 closed form", "asymptotics", _closed_form),
    Criterion(7, "nu_m Laplace pair", "asymptotics", _nu),
    Criterion(8, "integrand positivity", "asymptotics", _positivity),
    Criterion(9, "Pick log Gamma ratio", "pick", _pick),
    Criterion(10, "unit ball", "case-study", _unit_ball),
    Criterion(11, "inverse gamma", "inverse", _inverse_gamma),
    Criterion(12, "h family thresholds", "case-study", _h_family),
    Criterion(13, "g_lambda family", "case-study", _g_lambda),
    Criterion(14, "gamma ratio", "case-study", _gamma_ratio),
    Criterion(15, "Post-Widder", "classes", _post_widder),
    Criterion(16, "XL bijection", "classes", _xl),
    Criterion(17, "class inclusions", "classes", _inclusions),
)

GROUPS = sorted({c.group for c in CRITERIA})


def run_criterion(criterion: Criterion) -> CriterionResult:
    start = time.perf_counter()
    try:
        details = criterion.check()
        passed = bool(details.pop('passed'))
        error = None
    except (LownerError, ArithmeticError, ValueError, AssertionError) as exc:
        logger.error(f"Criterion {criterion.number} ({criterion.name}) raised {type(exc).__name__}: {exc}")
        details, passed, error = {}, False, f"{type(exc).__name__}: {exc}"
    result = CriterionResult(criterion.number, criterion.name, criterion.group, passed, details,
                             time.perf_counter() - start, error)
    logger.info(f"Criterion {criterion.number} {criterion.name}: {'pass' if passed else 'FAIL'} "
                f"({result.elapsed:.1f}s)")
    return result


def run_selftest(only: Optional[Sequence[str]] = None) -> List[CriterionResult]:
    """
    Run the acceptance criteria, optionally restricted to groups or criterion numbers

    Raises:
        ValueError: If a filter matches nothing
    """
    selected = list(CRITERIA)
    if only:
        wanted = set(only)
        selected = [c for c in CRITERIA if c.group in wanted or str(c.number) in wanted]
        if not selected:
            raise ValueError(f"No criteria match {sorted(wanted)}; groups are {', '.join(GROUPS)}")
    return [run_criterion(c) for c in selected]


if __name__ == "__main__":
    import sys
    logging.basicConfig(level=logging.INFO, stream=sys.stdout)

    for result in run_selftest(sys.argv[1:] or None):
        print(f"{result.number:2d} {result.name:24s} {'pass' if result.passed else 'FAIL'}")
