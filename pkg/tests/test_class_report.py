"""
Tests for verdict records, report merging and sign scans
"""

import json

import pytest

from class_report import ClassLabel, ClassReport, Verdict, Witness, combine, sign_scan
from numerics_core import Grid


def verified(label=ClassLabel.CM):
    return ClassReport(label, Verdict.VERIFIED, "f", orders_checked=3, tol=1e-7)


class TestClassReport:
    """Labels, validation and serialization"""

    def test_refuted_needs_witness(self):
        with pytest.raises(ValueError):
            ClassReport(ClassLabel.CM, Verdict.REFUTED, "f")

    def test_label_with_parameter(self):
        report = ClassReport(ClassLabel.STIELTJES, Verdict.VERIFIED, "f", parameter=2.0)
        assert report.label == "S_lambda[2]"
        assert verified().label == "CM"

    def test_to_dict(self):
        grid = Grid(0.5, 10.0, 20, "logarithmic")
        report = ClassReport(ClassLabel.CM, Verdict.REFUTED, "identity", witness=Witness(0.5, 1, 1.0), grid=grid)
        out = report.to_dict()
        assert out['function'] == "identity"
        assert out['verdict'] == "refuted"
        assert out['witness'] == {'point': 0.5, 'order': 1, 'value': 1.0}
        assert out['grid'] == "0.5:10:20:log"
        assert json.loads(report.to_json())['class'] == "CM"

    def test_complex_witness_serialized(self):
        assert Witness(1.0 + 2.0j, None, -1.0).to_dict()['point'] == {'re': 1.0, 'im': 2.0}


class TestCombine:
    """Merging sub-reports"""

    def test_all_verified(self):
        merged = combine([verified(), verified(ClassLabel.LCM)], ClassLabel.PROPERTY, "f")
        assert merged.verified
        assert merged.orders_checked == 3
        assert len(merged.details['parts']) == 2

    def test_refuted_wins(self):
        refuted = ClassReport(ClassLabel.CM, Verdict.REFUTED, "f", witness=Witness(2.0, 1, -0.5))
        inconclusive = ClassReport(ClassLabel.CM, Verdict.INCONCLUSIVE, "f")
        merged = combine([verified(), inconclusive, refuted], ClassLabel.PROPERTY)
        assert merged.refuted
        assert merged.witness.point == 2.0

    def test_inconclusive_beats_verified(self):
        merged = combine([verified(), ClassReport(ClassLabel.CM, Verdict.INCONCLUSIVE)], ClassLabel.PROPERTY)
        assert merged.verdict is Verdict.INCONCLUSIVE


class TestSignScan:
    """Tolerance handling of sign scans"""

    def test_within_tolerance(self):
        report = sign_scan([1.0, 2.0, 3.0], [0.5, -1e-9, 2.0], 1e-8, ClassLabel.POSITIVITY)
        assert report.verified
        assert report.details['min_value'] == pytest.approx(-1e-9)

    def test_most_negative_sample_is_witness(self):
        report = sign_scan([1.0, 2.0, 3.0], [-0.1, -0.3, 0.2], 1e-8, ClassLabel.POSITIVITY, order=2)
        assert report.refuted
        assert report.witness.point == 2.0
        assert report.witness.order == 2
        assert report.witness.value == pytest.approx(-0.3)

    def test_empty_scan_is_inconclusive(self):
        report = sign_scan([], [], 1e-8, ClassLabel.PROPERTY, "f")
        assert report.verdict is Verdict.INCONCLUSIVE
        assert report.details == {'samples': 0}

    def test_misaligned_points_rejected(self):
        with pytest.raises(ValueError):
            sign_scan([1.0, 2.0], [0.1, -0.2, -0.3], 1e-8, ClassLabel.PROPERTY)
