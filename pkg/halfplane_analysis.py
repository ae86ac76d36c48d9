"""
Half-Plane Analysis
Nevanlinna-Pick functions on the upper half-plane and their representations

f(z) = a z + b + int (1/(t - z) - t/(t^2 + 1)) dmu(t)

- MeasureSpec / PickTriple / StieltjesRep: representing data
- verify_pick: sign scan of Im f on a polar grid of the half-plane
- extract_pick_triple: a, b and the boundary density from samples of f
- evaluate_pick_rep / evaluate_stieltjes: evaluate representations
- log Gamma(z+1)/(z log z) and log G(z+1)/(z^2 log z) case checks
- lowner_psd: finite Lowner kernel test for operator monotonicity
"""

import logging
import math
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
import numpy.typing as npt
from scipy import linalg

import config
from class_report import ClassLabel, ClassReport, Verdict, Witness, combine, sign_scan
from errors import (DegeneratePoints, DomainError, EvaluationError, ExtrapolationError, NonConvergence,
                    SingularPoint)
from numerics_core import (Grid, QuadratureConfig, derivative_n, extrapolate_limit,
                           integrate, integrate_complex, integrate_with_error)
from special_functions import log_barnes_g, log_gamma, log_gamma_principal

logger = logging.getLogger(__name__)

ComplexFunction = Callable[[complex], complex]

# Looser than the global default: representation integrands are only as
# smooth as the extracted densities feeding them
REPRESENTATION_QUADRATURE = QuadratureConfig(abs_tol=1e-11, rel_tol=1e-9)
MASS_QUADRATURE = QuadratureConfig(abs_tol=1e-8, rel_tol=1e-6)
MASS_REL_ERROR = 1e-3   # error estimate above this fraction of int dmu/(t^2+1) means divergence


# ========== Measures ==========

@dataclass(frozen=True)
class DensityPiece:
    """Density on (lower, upper); singular endpoints are split off as panel boundaries"""
    lower: float
    upper: float
    density: Callable[[float], float] = field(compare=False)
    singular_lower: bool = False
    singular_upper: bool = False
    breakpoints: Tuple[float, ...] = ()

    def __post_init__(self):
        if not self.lower < self.upper:
            raise ValueError(f"Density piece requires lower < upper, got ({self.lower}, {self.upper})")

    def integrate(self, kernel: Callable[[float], complex],
                  cfg: QuadratureConfig = REPRESENTATION_QUADRATURE) -> complex:
        """int density(t) kernel(t) dt over the piece"""
        lo, hi = self.lower, self.upper

        def integrand(t: float) -> complex:
            return self.density(t) * kernel(t)

        if math.isinf(lo) and math.isinf(hi):
            left = DensityPiece(-math.inf, 0.0, self.density, breakpoints=tuple(p for p in self.breakpoints if p < 0))
            right = DensityPiece(0.0, math.inf, self.density, breakpoints=tuple(p for p in self.breakpoints if p > 0))
            return left.integrate(kernel, cfg) + right.integrate(kernel, cfg)
        if math.isinf(lo):
            # t = hi - s maps (-inf, hi) onto (0, inf)
            points = tuple(sorted(hi - p for p in self.breakpoints if p < hi))
            return integrate_complex(lambda s: integrand(hi - s), 0.0, math.inf, cfg.with_breakpoints(points))
        points = tuple(p for p in self.breakpoints if lo < p < hi)
        return integrate_complex(integrand, lo, hi, cfg.with_breakpoints(points))

    def weighted_mass(self, cfg: QuadratureConfig = MASS_QUADRATURE) -> Tuple[float, float]:
        """int density(t)/(t^2 + 1) dt over the piece, with error estimate"""
        lo, hi = self.lower, self.upper

        def weighted(t: float) -> float:
            return float(self.density(t)) / (t * t + 1.0)

        if math.isinf(lo) and math.isinf(hi):
            left = DensityPiece(-math.inf, 0.0, self.density, breakpoints=tuple(p for p in self.breakpoints if p < 0))
            right = DensityPiece(0.0, math.inf, self.density, breakpoints=tuple(p for p in self.breakpoints if p > 0))
            (m1, e1), (m2, e2) = left.weighted_mass(cfg), right.weighted_mass(cfg)
            return m1 + m2, e1 + e2
        if math.isinf(lo):
            points = tuple(sorted(hi - p for p in self.breakpoints if p < hi))
            return integrate_with_error(lambda s: weighted(hi - s), 0.0, math.inf, cfg.with_breakpoints(points))
        points = tuple(p for p in self.breakpoints if lo < p < hi)
        return integrate_with_error(weighted, lo, hi, cfg.with_breakpoints(points))


@dataclass(frozen=True)
class MeasureSpec:
    """Positive measure: point masses plus piecewise densities"""
    point_masses: Tuple[Tuple[float, float], ...] = ()
    density_pieces: Tuple[DensityPiece, ...] = ()

    def __post_init__(self):
        for location, weight in self.point_masses:
            if weight < 0:
                raise ValueError(f"Negative point mass {weight} at {location}")
        pieces = sorted(self.density_pieces, key=lambda p: p.lower)
        for a, b in zip(pieces, pieces[1:]):
            if b.lower < a.upper:
                raise ValueError(f"Density pieces overlap: ({a.lower}, {a.upper}) and ({b.lower}, {b.upper})")
        object.__setattr__(self, 'density_pieces', tuple(pieces))

    @classmethod
    def zero(cls) -> 'MeasureSpec':
        return cls()

    @classmethod
    def point_mass(cls, location: float, weight: float = 1.0) -> 'MeasureSpec':
        return cls(point_masses=((location, weight),))

    @classmethod
    def uniform(cls, lower: float, upper: float, height: float = 1.0) -> 'MeasureSpec':
        return cls(density_pieces=(DensityPiece(lower, upper, lambda t: height),))

    @property
    def is_zero(self) -> bool:
        return not self.point_masses and not self.density_pieces

    def integrate(self, kernel: Callable[[float], complex],
                  cfg: QuadratureConfig = REPRESENTATION_QUADRATURE) -> complex:
        total = sum((weight * complex(kernel(location)) for location, weight in self.point_masses), 0j)
        for piece in self.density_pieces:
            total += piece.integrate(kernel, cfg)
        return total

    def check_densities(self, samples_per_piece: int = 25) -> float:
        """Smallest sampled density value (0.0 when nothing is sampled)"""
        lowest = 0.0
        for piece in self.density_pieces:
            lo = piece.lower if math.isfinite(piece.lower) else min(-1.0, piece.upper - 100.0)
            hi = piece.upper if math.isfinite(piece.upper) else max(1.0, lo + 100.0)
            for t in np.linspace(lo, hi, samples_per_piece + 2)[1:-1]:
                lowest = min(lowest, float(piece.density(t)))
        return lowest


@dataclass(frozen=True)
class PickTriple:
    """a z + b + int (1/(t - z) - t/(t^2 + 1)) dmu(t), with int dmu/(t^2 + 1) finite"""
    a: float
    b: float
    measure: MeasureSpec = field(default_factory=MeasureSpec)

    def __post_init__(self):
        if self.a < 0:
            raise ValueError(f"Pick triple requires a >= 0, got {self.a}")
        for piece in self.measure.density_pieces:
            try:
                mass, error = piece.weighted_mass()
            except NonConvergence as exc:
                raise ValueError(f"int dmu/(t^2+1) diverges on ({piece.lower}, {piece.upper}): {exc}") from exc
            if not math.isfinite(mass) or error > MASS_REL_ERROR * max(1.0, abs(mass)):
                raise ValueError(f"int dmu/(t^2+1) diverges on ({piece.lower}, {piece.upper}): "
                                 f"{mass:.6g} +- {error:.3g}")

    def to_dict(self) -> dict:
        return {'a': self.a, 'b': self.b,
                'point_masses': [list(p) for p in self.measure.point_masses],
                'density_pieces': [[p.lower, p.upper] for p in self.measure.density_pieces]}


@dataclass(frozen=True)
class StieltjesRep:
    """c + int dmu(t)/(t + x)^lambda on [0, inf)"""
    order: float
    c: float = 0.0
    measure: MeasureSpec = field(default_factory=MeasureSpec)

    def __post_init__(self):
        if self.order <= 0:
            raise ValueError(f"Stieltjes order must be positive, got {self.order}")
        if self.c < 0:
            raise ValueError(f"Stieltjes constant must be non-negative, got {self.c}")
        if any(loc < 0 for loc, _ in self.measure.point_masses) or \
                any(p.lower < 0 for p in self.measure.density_pieces):
            raise ValueError("Stieltjes measures live on [0, inf)")


@dataclass(frozen=True)
class HalfPlaneGrid:
    """Polar sampling of the upper half-plane: log-spaced moduli times linear angles"""
    modulus: Grid = Grid(config.PICK_GRID_MODULUS[0], config.PICK_GRID_MODULUS[1], config.PICK_GRID_COUNT,
                         "logarithmic")
    angle: Grid = Grid(config.PICK_GRID_ANGLE[0], config.PICK_GRID_ANGLE[1], config.PICK_GRID_COUNT, "linear")

    def __post_init__(self):
        if self.angle.min <= 0 or self.angle.max >= math.pi:
            raise ValueError(f"Angles must lie in (0, pi), got [{self.angle.min}, {self.angle.max}]")

    @classmethod
    def small(cls, count: int = 20) -> 'HalfPlaneGrid':
        return cls(Grid(1e-2, 1e2, count, "logarithmic"),
                   Grid(config.PICK_GRID_ANGLE[0], config.PICK_GRID_ANGLE[1], count, "linear"))

    def points(self) -> npt.NDArray[np.complex128]:
        r, theta = np.meshgrid(self.modulus.points(), self.angle.points(), indexing='ij')
        return (r * np.exp(1j * theta)).ravel()

    def to_spec(self) -> str:
        return f"{self.modulus.to_spec()}x{self.angle.to_spec()}"


# ========== Pick Verification ==========

def _evaluate_on(f: ComplexFunction, zs: npt.NDArray[np.complex128]) -> npt.NDArray[np.complex128]:
    """Vectorized evaluation with a pointwise fallback that pins down the failing sample"""
    try:
        values = np.asarray(f(zs), dtype=np.complex128)
        if values.shape == zs.shape and np.all(np.isfinite(values)):
            return values
    except Exception as exc:
        logger.debug(f"Vectorized evaluation failed ({exc}), falling back to pointwise")
    values = np.empty_like(zs)
    for i, z in enumerate(zs):
        try:
            values[i] = complex(f(complex(z)))
        except Exception as exc:
            raise EvaluationError(complex(z), exc) from exc
        if not np.isfinite(values[i]):
            raise EvaluationError(complex(z), ArithmeticError("non-finite value"))
    return values


def verify_pick(f: ComplexFunction, grid: Optional[HalfPlaneGrid] = None,
                tol: float = config.PICK_TOL, function_id: str = "") -> ClassReport:
    """
    Check Im f(z) >= -tol on the half-plane grid

    Returns:
        ClassReport, refuted at the sample minimizing Im f

    Raises:
        EvaluationError: If f fails at a sample
    """
    start = time.perf_counter()
    grid = grid or HalfPlaneGrid()
    zs = grid.points()
    imag = _evaluate_on(f, zs).imag
    report = sign_scan(zs.tolist(), imag, tol, ClassLabel.PICK, function_id)
    report.elapsed = time.perf_counter() - start
    report.details['grid'] = grid.to_spec()
    report.details['samples'] = int(zs.size)
    if report.refuted:
        logger.info(f"Pick property fails for {function_id or f}: {report.witness}")
    return report


def negative_reciprocal(f: ComplexFunction) -> ComplexFunction:
    """-1/f, again a Pick function when f is Pick and zero-free"""
    return lambda z: -1.0 / f(z)


# ========== Representations ==========

def pick_kernel(t: float, z: complex) -> complex:
    """1/(t - z) - t/(t^2 + 1) kept as the single fraction (1 + t z)/((t - z)(t^2 + 1))"""
    return (1.0 + t * z) / ((t - z) * (t * t + 1.0))


def evaluate_pick_rep(triple: PickTriple, z: complex,
                      cfg: QuadratureConfig = REPRESENTATION_QUADRATURE) -> complex:
    """
    a z + b + int (1/(t - z) - t/(t^2 + 1)) dmu(t)

    z may lie in the upper half-plane or on the real axis away from the support of mu.
    """
    z = complex(z)
    if z.imag < 0:
        raise DomainError(f"Representation is evaluated in the closed upper half-plane, got {z}")
    if z.imag == 0:
        on_support = any(p.lower <= z.real <= p.upper for p in triple.measure.density_pieces) or \
            any(loc == z.real for loc, _ in triple.measure.point_masses)
        if on_support:
            raise DomainError(f"Real point {z.real} lies on the support of the measure")
    pieces = []
    for piece in triple.measure.density_pieces:
        extra = (z.real,) if piece.lower < z.real < piece.upper else ()
        pieces.append(DensityPiece(piece.lower, piece.upper, piece.density, piece.singular_lower,
                                   piece.singular_upper, tuple(sorted(set(piece.breakpoints + extra)))))
    measure = MeasureSpec(triple.measure.point_masses, tuple(pieces))
    return triple.a * z + triple.b + measure.integrate(lambda t: pick_kernel(t, z), cfg)


def mobius_triple(a: float, b: float, c: float, d: float) -> PickTriple:
    """
    Triple of (a z + b)/(c z + d) with ad - bc > 0

    For c != 0 the measure is a point mass (ad - bc)/c^2 at -d/c.
    """
    det = a * d - b * c
    if det <= 0:
        raise DomainError(f"Mobius map needs ad - bc > 0, got {det}")
    if c == 0:
        return PickTriple(a / d, b / d)
    t0 = -d / c
    weight = det / (c * c)
    return PickTriple(0.0, a / c + weight * t0 / (t0 * t0 + 1.0), MeasureSpec.point_mass(t0, weight))


def evaluate_stieltjes(rep: StieltjesRep, x: float) -> float:
    """c + int dmu(t)/(t + x)^lambda"""
    if x <= 0:
        raise DomainError(f"Stieltjes functions are evaluated at x > 0, got {x}")
    lam = rep.order
    return rep.c + rep.measure.integrate(lambda t: (t + x) ** (-lam)).real


# ========== Boundary Extraction ==========

def boundary_density(f: ComplexFunction, x: float, singular_points: Sequence[float] = (),
                     y_ladder: Sequence[float] = config.BOUNDARY_Y_LADDER) -> Tuple[float, float]:
    """
    (1/pi) lim_{y -> 0+} Im f(x + iy) with its extrapolation error

    The ladder is scaled by d/(1 + d), d the distance to the nearest declared
    singular point, so the steps stay small relative to local structure.
    """
    scale = 1.0
    if singular_points:
        distance = min(abs(x - p) for p in singular_points)
        if distance == 0:
            raise SingularPoint(f"Boundary density requested at the singular point {x}")
        scale = distance / (1.0 + distance)
    samples = [(y * scale, complex(f(complex(x, y * scale))).imag / math.pi) for y in y_ladder]
    estimate = extrapolate_limit(samples)
    return estimate.value, estimate.error


def _extract_a(f: ComplexFunction, ladder: Sequence[float], tol: float) -> float:
    # Im f(iy)/y = a + int dmu(t)/(t^2 + y^2), a polynomial in 1/y to leading order
    samples = [(1.0 / y, complex(f(complex(0.0, y))).imag / y) for y in ladder]
    estimate = extrapolate_limit(samples)
    if estimate.error > tol * max(1.0, abs(estimate.value)):
        raise ExtrapolationError(f"Linear coefficient did not stabilize (error {estimate.error:.3e})",
                                 estimate.value, estimate.error)
    # rounding can leave a tiny negative coefficient
    return 0.0 if -tol < estimate.value < 0.0 else estimate.value


def extract_pick_triple(f: ComplexFunction, support: Sequence[Tuple[float, float]] = (),
                        singular_points: Sequence[float] = (), y_max: float = 1.0,
                        y_ladder: Sequence[float] = config.PICK_A_LADDER,
                        tol: float = 1e-6) -> PickTriple:
    """
    Recover (a, b, mu) from values of f

    a is extrapolated from Im f(iy)/y along y_ladder * y_max, b = Re f(i), and on
    each declared support interval the density is the boundary limit of Im f / pi,
    evaluated lazily.

    Raises:
        ExtrapolationError: If the a-ladder does not stabilize
    """
    ladder = [y * y_max for y in y_ladder]
    a = _extract_a(f, ladder, tol)
    b = complex(f(1j)).real
    singular = tuple(singular_points) + tuple(p for lo, hi in support for p in (lo, hi) if math.isfinite(p))

    @lru_cache(maxsize=4096)
    def density(t: float) -> float:
        return max(0.0, boundary_density(f, t, singular)[0])

    pieces = tuple(DensityPiece(lo, hi, density, breakpoints=tuple(p for p in singular_points if lo < p < hi))
                   for lo, hi in support)
    if a < 0:
        raise ExtrapolationError(f"Extracted negative linear coefficient {a}", a, None)
    triple = PickTriple(a, b, MeasureSpec(density_pieces=pieces))
    logger.debug(f"Extracted Pick triple a={a:.6g}, b={b:.6g} with {len(pieces)} density pieces")
    return triple


# ========== log Gamma(z+1) / (z log z) ==========

def log_gamma_ratio(z):
    """log Gamma(z + 1)/(z log z) on the cut plane (arrays accepted)"""
    z = np.asarray(z, dtype=np.complex128)
    value = log_gamma_principal(z + 1.0) / (z * np.log(z))
    return complex(value) if value.ndim == 0 else value


def _ratio_density(s: float) -> float:
    """d(-s) without the integer check, for use inside quadrature"""
    k = math.ceil(s)
    if s < 1.0:
        log_abs_gamma = log_gamma(1.0 - s)
    else:
        # |Gamma(1-s)| = pi / (|sin(pi s)| Gamma(s))
        log_abs_gamma = math.log(math.pi) - math.log(abs(math.sin(math.pi * s))) - log_gamma(s)
    log_s = math.log(s)
    return (log_abs_gamma + (k - 1) * log_s) / (s * (log_s * log_s + math.pi ** 2))


def log_gamma_ratio_density(s: float) -> float:
    """
    Density d(-s) in log Gamma(z+1)/(z log z) = 1 - int_0^inf d(-s)/(s + z) ds

    With t = -s and k = ceil(s):
        d(t) = -(log|Gamma(t+1)| + (k-1) log|t|) / (t ((log|t|)^2 + pi^2))

    Raises:
        SingularPoint: At positive integers (logarithmic singularities)
    """
    if s <= 0:
        raise DomainError(f"Density is defined for s > 0, got {s}")
    if float(s).is_integer():
        raise SingularPoint(f"Density is singular at the integer {s}")
    return _ratio_density(s)


def _ratio_tail(x: float, cutoff: float) -> float:
    """
    int_cutoff^inf d(-s)/(s + x) ds using the period average of the numerator

    Over each unit interval -log|sin(pi s)| averages to log 2 and the sawtooth
    (1/2 - {s}) log s averages out up to a boundary term.
    """
    def averaged(s: float) -> float:
        log_s = math.log(s)
        numerator = s + 0.5 * math.log(2 * math.pi) - 1.0 / (12.0 * s)
        return numerator / (s * (log_s * log_s + math.pi ** 2) * (s + x))

    log_t = math.log(cutoff)
    sawtooth = log_t / (cutoff * (log_t * log_t + math.pi ** 2) * (cutoff + x)) / 12.0
    return integrate(averaged, cutoff, math.inf) + sawtooth


def log_gamma_ratio_stieltjes(x: float, cutoff: int = config.DENSITY_BREAKPOINT_CUTOFF) -> float:
    """1 - int_0^inf d(-s)/(s + x) ds with panels split at every integer up to the cutoff"""
    if x <= 0:
        raise DomainError(f"x must be positive, got {x}")
    cfg = QuadratureConfig(abs_tol=1e-12, rel_tol=1e-10)
    body = 0.0
    for k in range(cutoff):
        body += integrate(lambda s: _ratio_density(s) / (s + x), float(k), float(k + 1), cfg)
    return 1.0 - body - _ratio_tail(x, float(cutoff))


def verify_logGamma_ratio_representation(x_samples: Sequence[float], tol: float = 1e-6) -> ClassReport:
    """
    Compare log Gamma(x+1)/(x log x) with its Stieltjes-type representation

    Samples with |x - 1| <= 1e-3 are skipped (x log x vanishes at 1).
    """
    start = time.perf_counter()
    rows: List[dict] = []
    worst: Optional[Tuple[float, float]] = None
    for x in x_samples:
        if abs(x - 1.0) <= 1e-3:
            logger.info(f"Skipping x={x}: removable singularity of x log x at 1")
            continue
        direct = log_gamma_ratio(complex(x)).real
        via_integral = log_gamma_ratio_stieltjes(x)
        rel = abs(direct - via_integral) / max(abs(direct), 1e-300)
        rows.append({'x': x, 'direct': direct, 'integral': via_integral, 'relative_error': rel})
        if worst is None or rel > worst[1]:
            worst = (x, rel)
    verdict = Verdict.VERIFIED if worst is None or worst[1] <= tol else Verdict.REFUTED
    witness = Witness(worst[0], None, worst[1]) if verdict is Verdict.REFUTED else None
    return ClassReport(ClassLabel.REPRESENTATION, verdict, "log_gamma_ratio", None, witness, None, 0, tol,
                       {'samples': rows}, time.perf_counter() - start)


def verify_density_recovery(points: Sequence[float], tol: float = 1e-4) -> ClassReport:
    """Boundary-extracted density of log Gamma(z+1)/(z log z) at -s against the closed form"""
    errors, singular = [], tuple(float(k) for k in range(0, int(max(points)) + 2))
    for s in points:
        extracted, _ = boundary_density(log_gamma_ratio, -s, tuple(-p for p in singular))
        errors.append(tol - abs(extracted - log_gamma_ratio_density(s)))
    report = sign_scan(list(points), errors, 0.0, ClassLabel.REPRESENTATION, "log_gamma_ratio_density")
    report.tol = tol
    return report


# ========== log G(z+1) / (z^2 log z) ==========

def g_function_ratio(z):
    """log G(z + 1)/(z^2 log z) (arrays accepted)"""
    z = np.asarray(z, dtype=np.complex128)
    value = log_barnes_g(z + 1.0) / (z * z * np.log(z))
    return complex(value) if value.ndim == 0 else value


def g_function_ratio_check(z_grid: Optional[HalfPlaneGrid] = None,
                           x_samples: Sequence[float] = (0.5, 2.0, 5.0, 10.0, 100.0),
                           tol: float = config.PICK_TOL,
                           density_points: Sequence[float] = (0.25, 0.5, 1.5, 2.5, 3.5)) -> ClassReport:
    """
    Checks implied by log G(z+1)/(z^2 log z) = 1/2 - int_0^inf d(t)/(t+z) dt with d >= 0

    - Im of the ratio is >= -tol on the half-plane grid
    - the boundary density d(s) = (1/pi) lim Im f(-s + iy) is >= -tol at samples
    - on the positive axis the ratio increases towards 1/2
    """
    start = time.perf_counter()
    pick = verify_pick(g_function_ratio, z_grid, tol, "g_function_ratio")

    singular = tuple(-float(k) for k in range(0, int(max(density_points, default=0.0)) + 2))
    recovered = [boundary_density(g_function_ratio, -s, singular)[0] for s in density_points]
    density = sign_scan(list(density_points), recovered, tol, ClassLabel.POSITIVITY, "g_function_ratio_density")
    density.details['density'] = dict(zip(map(str, density_points), recovered))

    xs = sorted(x for x in x_samples if abs(x - 1.0) > 1e-3)
    limit = increasing_limit_scan(xs, [g_function_ratio(complex(x)).real for x in xs], 0.5, tol,
                                  "g_function_ratio_limit")

    report = combine([pick, density, limit], ClassLabel.REPRESENTATION, "g_function_ratio")
    report.elapsed = time.perf_counter() - start
    return report


def increasing_limit_scan(xs: Sequence[float], values: Sequence[float], limit: float, tol: float,
                          function_id: str = "") -> ClassReport:
    """
    Sign scan of limit - f(x) at each x and of f(x_{i+1}) - f(x_i) between neighbours

    Step samples are labelled "x_i->x_{i+1}" so a refuted step names both ends.
    """
    gaps = [limit - v for v in values]
    steps = [b - a for a, b in zip(values, values[1:])]
    points = list(xs) + [f"{a:g}->{b:g}" for a, b in zip(xs, xs[1:])]
    report = sign_scan(points, gaps + steps, tol, ClassLabel.PROPERTY, function_id)
    report.details['values'] = dict(zip(map(str, xs), values))
    report.details['limit'] = limit
    return report


# ========== Lowner Kernel ==========

def lowner_kernel(f: Callable[[float], float], points: Sequence[float],
                  derivative: Optional[Callable[[float], float]] = None) -> npt.NDArray[np.float64]:
    """K[i, j] = (f(t_i) - f(t_j))/(t_i - t_j), with f'(t_i) on the diagonal"""
    pts = [float(p) for p in points]
    if len(set(pts)) != len(pts):
        raise DegeneratePoints(f"Points must be pairwise distinct: {pts}")
    values = [f(p) for p in pts]
    n = len(pts)
    kernel = np.empty((n, n))
    for i in range(n):
        if derivative is not None:
            kernel[i, i] = derivative(pts[i])
        else:
            kernel[i, i] = derivative_n(f, pts[i], 1).value
        for j in range(i + 1, n):
            kernel[i, j] = kernel[j, i] = (values[i] - values[j]) / (pts[i] - pts[j])
    return kernel


def lowner_psd(f: Callable[[float], float], points: Sequence[float],
               derivative: Optional[Callable[[float], float]] = None,
               tol: float = config.LOWNER_PSD_TOL, function_id: str = "") -> ClassReport:
    """
    Positive semi-definiteness of the Lowner kernel on finitely many points

    Verified if the smallest eigenvalue is >= -tol * max|K|.

    Raises:
        DegeneratePoints: If two points coincide
        DomainError: If more than the configured number of points is given
    """
    if len(points) > config.LOWNER_MAX_POINTS:
        raise DomainError(f"At most {config.LOWNER_MAX_POINTS} points, got {len(points)}")
    start = time.perf_counter()
    kernel = lowner_kernel(f, points, derivative)
    eigenvalues = linalg.eigvalsh(kernel)
    scale = float(np.max(np.abs(kernel)))
    smallest = float(eigenvalues[0])
    details = {'eigenvalues': eigenvalues.tolist(), 'scale': scale}
    if smallest >= -tol * scale:
        return ClassReport(ClassLabel.LOWNER, Verdict.VERIFIED, function_id, None, None, None, 0, tol, details,
                           time.perf_counter() - start)
    return ClassReport(ClassLabel.LOWNER, Verdict.REFUTED, function_id, None,
                       Witness(list(points), None, smallest), None, 0, tol, details, time.perf_counter() - start)


if __name__ == "__main__":
    import sys
    logging.basicConfig(level=logging.DEBUG, stream=sys.stdout)

    print("Half-Plane Analysis Test\n")
    print("=" * 60)
    print(verify_pick(np.log, HalfPlaneGrid.small(), function_id="log"))
    print(verify_pick(lambda z: z * z, HalfPlaneGrid.small(), function_id="square"))
    print(f"d(-0.5) = {log_gamma_ratio_density(0.5):.6f}")
    log_triple = PickTriple(0.0, 0.0, MeasureSpec.uniform(-math.inf, 0.0))
    print(f"log rep at 2 = {evaluate_pick_rep(log_triple, 2.0)}")
    print(lowner_psd(math.log, [1.0, 2.0, 4.0, 8.0], lambda t: 1.0 / t, function_id="log"))
