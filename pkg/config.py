"""
Lowner Configuration
All tolerances, default grids and logging settings in one place

Numeric defaults can be overridden from the environment with variables
prefixed LOWNER_ (e.g. LOWNER_QUAD_ABS_TOL=1e-13).
"""

import os


def _env_float(name: str, default: float) -> float:
    value = os.environ.get(f"LOWNER_{name}")
    return float(value) if value is not None else default


def _env_int(name: str, default: int) -> int:
    value = os.environ.get(f"LOWNER_{name}")
    return int(value) if value is not None else default


def _env_str(name: str, default: str) -> str:
    return os.environ.get(f"LOWNER_{name}", default)


# ========== Quadrature ==========
QUAD_ABS_TOL = _env_float("QUAD_ABS_TOL", 1e-12)
QUAD_REL_TOL = _env_float("QUAD_REL_TOL", 1e-10)
QUAD_MAX_SUBDIVISIONS = _env_int("QUAD_MAX_SUBDIVISIONS", 400)
# Estimated error may exceed the target by this factor before NonConvergence is raised
QUAD_FAILURE_SLACK = _env_float("QUAD_FAILURE_SLACK", 1e4)

# ========== Differentiation & Extrapolation ==========
DERIVATIVE_MAX_ORDER = 8
DERIVATIVE_LADDER_LENGTH = 10
DERIVATIVE_LADDER_RATIO = 1.4
EXTRAPOLATION_MIN_SAMPLES = 3

# ========== Exact Series ==========
BERNOULLI_MAX_ORDER = _env_int("BERNOULLI_MAX_ORDER", 40)
REMAINDER_TAIL_EXTRA_TERMS = 20
REMAINDER_SMALL_T_CROSSOVER = 1.0
BINET_ROUTE_TOL = _env_float("BINET_ROUTE_TOL", 1e-9)   # direct vs remainder integral

# ========== Special Functions ==========
LOG_GAMMA_SHIFT_THRESHOLD = 8.0   # Re z below this is shifted by the recursion
STIRLING_TERMS = 12
HURWITZ_SHIFT_THRESHOLD = 12.0    # x + M >= this before Euler-Maclaurin
HURWITZ_CORRECTION_TERMS = 10
POLYGAMMA_SHIFT_THRESHOLD = 20.0
BARNES_PRODUCT_FACTORS = 100_000
BARNES_TAIL_TERMS = 12
SERIES_MAX_TERMS = 200_000
SERIES_TOL = 1e-15

# ========== Half-plane Analysis ==========
PICK_GRID_MODULUS = (1e-3, 1e3)
PICK_GRID_ANGLE = (0.01, 3.141592653589793 - 0.01)
PICK_GRID_COUNT = _env_int("PICK_GRID_COUNT", 100)
PICK_TOL = _env_float("PICK_TOL", 1e-9)
BOUNDARY_Y_LADDER = (1e-1, 5e-2, 2.5e-2, 1.25e-2)
PICK_A_LADDER = (1e3, 2e3, 4e3, 8e3)
DENSITY_BREAKPOINT_CUTOFF = 200
LOWNER_MAX_POINTS = 12
LOWNER_PSD_TOL = 1e-10

# ========== Monotone Classes ==========
CM_TOL = _env_float("CM_TOL", 1e-7)
CM_GRID = (0.05, 20.0, 24, "logarithmic")
CM_MAX_ORDER = 8
JET_MAX_ORDER = 64
STIELTJES_K_MAX = 4
THORIN_QUANTILE = 1.0 - 1e-8

# ========== Case Studies ==========
UNIT_BALL_N_MAX = 300
H_THRESHOLD_GRID = (1e-3, 1e3, 600, "logarithmic")
H_THRESHOLD_TOL = 1e-6
H_CM_ORDERS = 24
H_DENSITY_GRID = (1e-3, 1e3, 200, "logarithmic")

# ========== Inverse Gamma ==========
NEWTON_MAX_ITERATIONS = 100
NEWTON_TOL = 1e-13
SEED_FIXED_POINT_ITERATIONS = 20

# ========== Output ==========
CSV_FLOAT_FORMAT = "{:.17g}"

# ========== Logging ==========
LOG_LEVEL = _env_str("LOG_LEVEL", "WARNING")
LOG_FILE = _env_str("LOG_FILE", "lowner_debug.log")
LOG_FORMAT = '%(asctime)s - %(levelname)s - [%(funcName)s] %(message)s'
