"""
Inverse Gamma
Extremal points of |Gamma|, inversion of log Gamma on the upper half-plane,
and the branch inverses g_k

log Gamma maps the upper half-plane conformally, so every target in its image
has exactly one preimage there; Newton iterates are kept inside the half-plane
(or on the positive axis for real targets) by step halving.
"""

import cmath
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from scipy import optimize

import config
from errors import BracketError, DomainError, DomainEscape, NonConvergence
from special_functions import log_gamma, log_gamma_principal, polygamma, polygamma_real

logger = logging.getLogger(__name__)

# ========== Extremal Points ==========


@dataclass(frozen=True)
class ExtremalPoint:
    k: int
    x: float
    log_abs_gamma: float
    residual: float

    def to_dict(self) -> Dict:
        return {'k': self.k, 'x': self.x, 'log_abs_gamma': self.log_abs_gamma, 'psi_residual': self.residual}


@dataclass(frozen=True)
class ExtremalTable:
    """x_0 > 0 minimizes Gamma on (0, inf); x_k in (-k, -k+1) is the stationary point of log|Gamma| there"""
    entries: Tuple[ExtremalPoint, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for entry in self.entries:
            if entry.k == 0 and not entry.x > 0:
                raise ValueError(f"x_0 must be positive, got {entry.x}")
            if entry.k > 0 and not -entry.k < entry.x < -entry.k + 1:
                raise ValueError(f"x_{entry.k} = {entry.x} is outside ({-entry.k}, {-entry.k + 1})")

    def __getitem__(self, k: int) -> ExtremalPoint:
        return self.entries[k]

    def __len__(self) -> int:
        return len(self.entries)

    def rows(self) -> List[Dict]:
        return [entry.to_dict() for entry in self.entries]


def log_abs_gamma(x: float) -> float:
    """log|Gamma(x)| for real x off the poles, by reflection for x < 0"""
    if x > 0:
        return log_gamma(x)
    if float(x).is_integer():
        raise DomainError(f"Gamma has a pole at {x}")
    return math.log(math.pi) - math.log(abs(math.sin(math.pi * x))) - log_gamma(1.0 - x)


def _polish(x: float, lower: float, upper: float) -> float:
    # Newton on psi with psi' from the trigamma function
    for _ in range(5):
        step = polygamma_real(0, x) / polygamma_real(1, x)
        candidate = x - step
        if not lower < candidate < upper:
            break
        x = candidate
        if abs(step) <= 1e-16 * max(1.0, abs(x)):
            break
    return x


def extremal_points(k_max: int) -> ExtremalTable:
    """
    Stationary points of log|Gamma|: x_0 on (1, 2) and x_k on (-k, -k+1) for k = 1..k_max

    Raises:
        BracketError: If psi does not change sign on a bracket
    """
    if k_max < 0:
        raise DomainError(f"k_max must be >= 0, got {k_max}")
    entries = []
    for k in range(k_max + 1):
        if k == 0:
            lower, upper = 1.0, 2.0
        else:
            # psi runs from -inf to +inf across (-k, -k+1)
            margin = 1e-9
            lower, upper = -k + margin, -k + 1 - margin
        f_lower, f_upper = polygamma_real(0, lower), polygamma_real(0, upper)
        if f_lower * f_upper > 0:
            raise BracketError(f"psi has no sign change on ({lower}, {upper})")
        root = optimize.brentq(lambda x: polygamma_real(0, x), lower, upper, xtol=1e-15, rtol=4.5e-16)
        root = _polish(root, lower, upper)
        residual = abs(polygamma_real(0, root))
        entries.append(ExtremalPoint(k, root, log_abs_gamma(root), residual))
        logger.debug(f"x_{k} = {root:.15f}, log|Gamma| = {entries[-1].log_abs_gamma:.15f}, residual {residual:.1e}")
    return ExtremalTable(tuple(entries))


# ========== Inversion of log Gamma ==========

def _admissible(w: complex, real_target: bool) -> bool:
    if w.imag > 0:
        return True
    return real_target and w.imag == 0 and w.real > 0


def default_seed(target: complex) -> complex:
    """
    Asymptotic seed solving w log w - w = target

    Iterates w <- (target + w)/log w, a rearrangement whose fixed-point map has
    zero derivative at the solution; small targets use 2 + i.
    """
    if abs(target) < 3:
        return 2 + 1j
    w = target / cmath.log(target + 2)
    for _ in range(config.SEED_FIXED_POINT_ITERATIONS):
        denominator = cmath.log(w)
        if denominator == 0:
            break
        w = (target + w) / denominator
    if target.imag == 0 and w.real > 0:
        return complex(w.real, 0.0)
    return w


def _newton(target: complex, seed: complex) -> complex:
    real_target = target.imag == 0 and seed.imag == 0
    w = complex(seed)
    if not _admissible(w, real_target):
        raise DomainEscape(f"Seed {seed} lies outside the upper half-plane", w)
    tol = config.NEWTON_TOL * max(1.0, abs(target))
    residual = complex(log_gamma_principal(w)) - target
    for iteration in range(config.NEWTON_MAX_ITERATIONS):
        if abs(residual) <= tol:
            logger.debug(f"Newton converged to {w} after {iteration} iterations")
            return w
        step = residual / complex(polygamma(0, w))
        if real_target:
            step = complex(step.real, 0.0)
        damping = 1.0
        for _ in range(60):
            candidate = w - damping * step
            if _admissible(candidate, real_target):
                candidate_residual = complex(log_gamma_principal(candidate)) - target
                if abs(candidate_residual) < abs(residual):
                    break
            damping *= 0.5
        else:
            if not _admissible(w - step, real_target):
                raise DomainEscape(f"Newton step from {w} leaves the upper half-plane", w, abs(residual))
            raise NonConvergence(f"Damped Newton stalled at {w}", w, abs(residual))
        w, residual = candidate, candidate_residual
    raise NonConvergence(f"Newton did not converge in {config.NEWTON_MAX_ITERATIONS} iterations", w, abs(residual))


def _strip_seeds(target: complex) -> List[complex]:
    # preimages of Im target in (-(k+1) pi, -k pi) lie above (-k-1, -k+1)
    k = int(math.floor(-target.imag / math.pi))
    return [complex(-k - 0.5, y) for y in (1.0, 0.3, 3.0)] + [complex(-k + 0.5, 0.5)]


def invert_log_gamma(target: complex, seed: Optional[complex] = None) -> complex:
    """
    w with log_gamma_principal(w) = target by damped Newton (derivative psi)

    With an explicit seed only that seed is tried; real targets with real seeds
    stay on the positive axis, where the preimage depends on the seed. Without a
    seed the asymptotic seed is tried first, then strip-based seeds for targets
    with negative imaginary part.

    Raises:
        NonConvergence: If no seed converges
        DomainEscape: If iterates cannot be kept in the upper half-plane
    """
    target = complex(target)
    if seed is not None:
        return _newton(target, complex(seed))
    seeds = [default_seed(target)]
    if target.imag < 0:
        seeds = _strip_seeds(target) + seeds
    elif target.imag == 0 and abs(target) < 3:
        seeds.insert(0, 2.0 + 0j)
    if 2 + 1j not in seeds:
        seeds.append(2 + 1j)
    last_error: Optional[NonConvergence] = None
    for candidate in seeds:
        try:
            return _newton(target, candidate)
        except NonConvergence as exc:
            logger.debug(f"Seed {candidate} failed for target {target}: {exc}")
            last_error = exc
    raise last_error


def branch_inverse_g_k(k: int, z: complex) -> complex:
    """
    g_k(z) = (log Gamma)^{-1}(log z - i (k+1) pi) for z in the upper half-plane

    Gamma(g_k(z)) = (-1)^{k+1} z and g_k maps the upper half-plane into itself.
    """
    if k < 0:
        raise DomainError(f"Branch index must be >= 0, got {k}")
    z = complex(z)
    if not z.imag > 0:
        raise DomainError(f"z must lie in the upper half-plane, got {z}")
    return invert_log_gamma(cmath.log(z) - 1j * (k + 1) * math.pi)


def branch_round_trip(k: int, zs: Sequence[complex]) -> Tuple[float, float]:
    """Largest relative error of Gamma(g_k(z)) = (-1)^{k+1} z and smallest Im g_k(z) over zs"""
    worst, lowest = 0.0, math.inf
    for z in zs:
        w = branch_inverse_g_k(k, z)
        value = cmath.exp(complex(log_gamma_principal(w)))
        worst = max(worst, abs(value - (-1) ** (k + 1) * z) / abs(z))
        lowest = min(lowest, w.imag)
    return worst, lowest


if __name__ == "__main__":
    import sys
    logging.basicConfig(level=logging.DEBUG, stream=sys.stdout)

    print("Inverse Gamma Test\n")
    print("=" * 60)
    for row in extremal_points(3).rows():
        print(row)
    print(f"invert log 24 -> {invert_log_gamma(math.log(24.0))}")
    print(f"invert log sqrt(pi) from 0.4 -> {invert_log_gamma(0.5 * math.log(math.pi), 0.4)}")
    print(f"g_0(i) = {branch_inverse_g_k(0, 1j)}")
