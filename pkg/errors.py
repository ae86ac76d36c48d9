"""
Error Types
Exceptions raised by the evaluators and class checks

Domain problems subclass ValueError, numerical failures subclass
ArithmeticError, so callers can catch either family without importing
this module.
"""

from typing import Optional


class LownerError(Exception):
    """Base class for all toolkit errors"""


# ========== Domain ==========

class DomainError(LownerError, ValueError):
    """Argument outside the domain of the operation"""


class CutError(DomainError):
    """Point lies on the branch cut (-inf, 0]"""

    def __init__(self, z: complex):
        super().__init__(f"{z} lies on the cut (-inf, 0]")
        self.z = z


class PoleError(DomainError):
    """Evaluation at a pole"""


class OrderOverflow(DomainError):
    """Requested order beyond the configured table size"""


class SingularPoint(DomainError):
    """Closed form is singular at the requested point"""


class DegeneratePoints(DomainError):
    """Sample points are not pairwise distinct"""


class NonPositive(DomainError):
    """Function expected to be positive took a value <= 0"""


class InsufficientSamples(LownerError, ValueError):
    """Too few samples for an extrapolation"""


class BracketError(LownerError, ValueError):
    """Bracket does not straddle a sign change"""


# ========== Numerical ==========

class NonConvergence(LownerError, ArithmeticError):
    """Iteration or quadrature did not reach its target

    Carries the partial value and the error estimate at the point of failure.
    """

    def __init__(self, message: str, value: Optional[complex] = None,
                 error_estimate: Optional[float] = None):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate


class ExtrapolationError(NonConvergence):
    """Extrapolation ladder did not stabilize"""


class DomainEscape(NonConvergence):
    """Newton iterate left the admissible region"""


class StepUnderflow(LownerError, ArithmeticError):
    """Finite-difference ladder collapsed below machine precision"""


class CancellationError(LownerError, ArithmeticError):
    """Catastrophic cancellation detected"""


class DegenerateDivisor(LownerError, ZeroDivisionError):
    """Power series divisor has a zero constant term"""


class EvaluationError(LownerError, ArithmeticError):
    """Function evaluation failed at a sample point"""

    def __init__(self, z: complex, cause: Exception):
        super().__init__(f"evaluation failed at {z}: {cause}")
        self.z = z
        self.cause = cause
