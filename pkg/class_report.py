"""
Class Reports
Verdict records produced by every class check and property scan

A verdict is always about the sampled points: verified-at-samples,
refuted (with a witness) or inconclusive.
"""

import json
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional

from numerics_core import Grid

logger = logging.getLogger(__name__)


class ClassLabel(Enum):
    CM = "CM"
    CM_ALPHA = "CM(alpha)"
    LCM = "LCM"
    STIELTJES = "S_lambda"
    BERNSTEIN = "B_lambda"
    THORIN = "T_lambda_alpha"
    PICK = "Pick"
    HORN_BERNSTEIN = "HornBernstein"
    POSITIVITY = "Positivity"
    REPRESENTATION = "Representation"
    LOWNER = "LownerPSD"
    HAUSDORFF = "Hausdorff"
    PROPERTY = "Property"


class Verdict(Enum):
    VERIFIED = "verified-at-samples"
    REFUTED = "refuted"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Witness:
    """Sample that refutes a class claim"""
    point: Any
    order: Optional[int]
    value: float

    def to_dict(self) -> Dict:
        point = self.point
        if isinstance(point, complex):
            point = {'re': point.real, 'im': point.imag}
        return {'point': point, 'order': self.order, 'value': self.value}

    def __str__(self):
        order = f", order={self.order}" if self.order is not None else ""
        return f"Witness(point={self.point}{order}, value={self.value:.6g})"


@dataclass
class ClassReport:
    """Outcome of a class check"""
    class_label: ClassLabel
    verdict: Verdict
    function_id: str = ""
    parameter: Optional[float] = None
    witness: Optional[Witness] = None
    grid: Optional[Grid] = None
    orders_checked: int = 0
    tol: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)
    elapsed: float = 0.0

    def __post_init__(self):
        if self.verdict is Verdict.REFUTED and self.witness is None:
            raise ValueError("A refuted verdict requires a witness")

    @property
    def verified(self) -> bool:
        return self.verdict is Verdict.VERIFIED

    @property
    def refuted(self) -> bool:
        return self.verdict is Verdict.REFUTED

    @property
    def label(self) -> str:
        if self.parameter is None:
            return self.class_label.value
        return f"{self.class_label.value}[{self.parameter:g}]"

    def to_dict(self) -> Dict:
        return {
            'function': self.function_id,
            'class': self.label,
            'verdict': self.verdict.value,
            'witness': self.witness.to_dict() if self.witness else None,
            'grid': self.grid.to_spec() if self.grid else None,
            'orders_checked': self.orders_checked,
            'tolerance': self.tol,
            'details': self.details,
            'wall_time': round(self.elapsed, 6),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=str)

    def __str__(self):
        witness = f" {self.witness}" if self.witness else ""
        return f"ClassReport[{self.function_id or '?'} in {self.label}: {self.verdict.value}{witness}]"


def combine(reports: Iterable[ClassReport], class_label: ClassLabel, function_id: str = "",
            parameter: Optional[float] = None) -> ClassReport:
    """
    Merge sub-reports: refuted if any is refuted (first witness wins),
    inconclusive if any is inconclusive, verified otherwise
    """
    reports = list(reports)
    verdict = Verdict.VERIFIED
    witness = None
    for report in reports:
        if report.refuted:
            verdict, witness = Verdict.REFUTED, report.witness
            break
        if report.verdict is Verdict.INCONCLUSIVE:
            verdict = Verdict.INCONCLUSIVE
    merged = ClassReport(
        class_label=class_label,
        verdict=verdict,
        function_id=function_id,
        parameter=parameter,
        witness=witness,
        grid=reports[0].grid if reports else None,
        orders_checked=max((r.orders_checked for r in reports), default=0),
        tol=max((r.tol for r in reports), default=0.0),
        details={'parts': [r.to_dict() for r in reports]},
        elapsed=sum(r.elapsed for r in reports),
    )
    logger.debug(f"Combined {len(reports)} reports: {merged}")
    return merged


def sign_scan(points: Iterable[Any], values: Iterable[float], tol: float,
              class_label: ClassLabel, function_id: str = "", grid: Optional[Grid] = None,
              order: Optional[int] = None, parameter: Optional[float] = None) -> ClassReport:
    """
    Verified if every value >= -tol, else refuted at the minimizing sample

    Inconclusive when there is nothing to scan.

    Raises:
        ValueError: If points and values differ in length
    """
    pts: List[Any] = list(points)
    vals: List[float] = [float(v) for v in values]
    if len(pts) != len(vals):
        raise ValueError(f"sign_scan needs one point per value, got {len(pts)} points and {len(vals)} values")
    if not vals:
        logger.debug(f"Empty sign scan for {function_id or class_label.value}")
        return ClassReport(class_label, Verdict.INCONCLUSIVE, function_id, parameter, None, grid,
                           order or 0, tol, {'samples': 0})
    worst = min(range(len(vals)), key=vals.__getitem__)
    if vals[worst] >= -tol:
        return ClassReport(class_label, Verdict.VERIFIED, function_id, parameter, None, grid,
                           order or 0, tol, {'min_value': vals[worst]})
    return ClassReport(class_label, Verdict.REFUTED, function_id, parameter,
                       Witness(pts[worst], order, vals[worst]), grid, order or 0, tol)
