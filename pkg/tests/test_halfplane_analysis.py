"""
Tests for Pick verification, representations, boundary extraction and the Lowner kernel
"""

import math

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

import halfplane_analysis as hp
from class_report import ClassLabel, ClassReport, Verdict
from errors import DegeneratePoints, DomainError, EvaluationError, SingularPoint
from numerics_core import Grid


class TestVerifyPick:
    """Sign scans of Im f on the polar grid"""

    def test_log_is_pick(self):
        assert hp.verify_pick(np.log, hp.HalfPlaneGrid.small(), function_id="log").verified

    def test_square_is_not_pick(self):
        report = hp.verify_pick(lambda z: z * z, hp.HalfPlaneGrid.small(), function_id="square")
        assert report.refuted
        assert report.witness.point.real < 0
        assert report.witness.value < 0

    def test_negative_reciprocal_of_identity(self):
        assert hp.verify_pick(hp.negative_reciprocal(lambda z: z), hp.HalfPlaneGrid.small()).verified

    def test_log_gamma_ratio_is_pick(self):
        assert hp.verify_pick(hp.log_gamma_ratio, hp.HalfPlaneGrid.small(16)).verified

    def test_failing_evaluation_is_located(self):
        def broken(z):
            raise ValueError("no")

        with pytest.raises(EvaluationError):
            hp.verify_pick(broken, hp.HalfPlaneGrid.small(4))

    def test_grid_details_recorded(self):
        report = hp.verify_pick(np.log, hp.HalfPlaneGrid.small(5))
        assert report.details['samples'] == 25

    def test_angles_inside_half_plane(self):
        with pytest.raises(ValueError):
            hp.HalfPlaneGrid(angle=Grid(0.0, 1.0, 5, "linear"))


class TestRepresentations:
    """Pick triples, Mobius maps and Stieltjes sums"""

    def test_mobius_triple_reproduces_map(self):
        triple = hp.mobius_triple(2.0, 1.0, 1.0, 3.0)
        for z in (1j, 2.0 + 0.5j, -1.0 + 3.0j):
            assert hp.evaluate_pick_rep(triple, z) == pytest.approx((2 * z + 1) / (z + 3))

    def test_mobius_without_pole(self):
        triple = hp.mobius_triple(2.0, 1.0, 0.0, 4.0)
        assert (triple.a, triple.b) == (0.5, 0.25)
        assert triple.measure.is_zero

    def test_mobius_orientation(self):
        with pytest.raises(DomainError):
            hp.mobius_triple(1.0, 2.0, 3.0, 4.0)

    @pytest.mark.parametrize("z", [2.0, 1j, 0.5 + 2.0j])
    def test_log_from_half_line_density(self, z):
        triple = hp.PickTriple(0.0, 0.0, hp.MeasureSpec.uniform(-math.inf, 0.0))
        assert abs(hp.evaluate_pick_rep(triple, z) - np.log(complex(z))) < 1e-8

    def test_real_point_on_support_rejected(self):
        triple = hp.PickTriple(0.0, 0.0, hp.MeasureSpec.uniform(-math.inf, 0.0))
        with pytest.raises(DomainError):
            hp.evaluate_pick_rep(triple, -1.0)

    def test_lower_half_plane_rejected(self):
        with pytest.raises(DomainError):
            hp.evaluate_pick_rep(hp.PickTriple(1.0, 0.0), 1.0 - 1.0j)

    def test_weighted_mass_of_half_line(self):
        piece = hp.MeasureSpec.uniform(-math.inf, 0.0).density_pieces[0]
        mass, error = piece.weighted_mass()
        assert mass == pytest.approx(math.pi / 2, rel=1e-8)
        assert error < 1e-6

    def test_measure_without_finite_weighted_mass_rejected(self):
        growing = hp.MeasureSpec(density_pieces=(hp.DensityPiece(0.0, math.inf, lambda t: t * t),))
        with pytest.raises(ValueError):
            hp.PickTriple(0.0, 0.0, growing)

    def test_stieltjes_uniform_measure(self):
        rep = hp.StieltjesRep(1.0, 0.0, hp.MeasureSpec.uniform(0.0, 1.0))
        assert hp.evaluate_stieltjes(rep, 1.0) == pytest.approx(math.log(2.0), rel=1e-10)

    def test_stieltjes_point_mass_and_constant(self):
        rep = hp.StieltjesRep(2.0, 0.5, hp.MeasureSpec.point_mass(1.0, 3.0))
        assert hp.evaluate_stieltjes(rep, 2.0) == pytest.approx(0.5 + 3.0 / 9.0)

    def test_invalid_data_rejected(self):
        with pytest.raises(ValueError):
            hp.PickTriple(-1.0, 0.0)
        with pytest.raises(ValueError):
            hp.MeasureSpec(point_masses=((0.0, -1.0),))
        with pytest.raises(ValueError):
            hp.MeasureSpec(density_pieces=(hp.DensityPiece(0.0, 2.0, lambda t: 1.0),
                                           hp.DensityPiece(1.0, 3.0, lambda t: 1.0)))
        with pytest.raises(ValueError):
            hp.StieltjesRep(1.0, 0.0, hp.MeasureSpec.point_mass(-1.0))


class TestBoundaryExtraction:
    """Boundary densities and triple extraction"""

    def test_log_density_on_negative_axis(self):
        value, error = hp.boundary_density(np.log, -2.0, (0.0,))
        assert value == pytest.approx(1.0, abs=1e-6)
        assert error < 1e-4

    def test_log_density_vanishes_on_positive_axis(self):
        value, _ = hp.boundary_density(np.log, 3.0, (0.0,))
        assert value == pytest.approx(0.0, abs=1e-6)

    def test_singular_point_rejected(self):
        with pytest.raises(SingularPoint):
            hp.boundary_density(np.log, 0.0, (0.0,))

    def test_extract_triple(self):
        f = lambda z: 2.0 * z + np.log(z)
        triple = hp.extract_pick_triple(f, support=[(-math.inf, 0.0)])
        assert triple.a == pytest.approx(2.0, abs=1e-6)
        assert triple.b == pytest.approx(0.0, abs=1e-12)
        assert triple.measure.density_pieces[0].density(-2.0) == pytest.approx(1.0, abs=1e-6)

    def test_extract_triple_of_bounded_map(self):
        triple = hp.extract_pick_triple(lambda z: (2 * z + 1) / (z + 3))
        assert triple.a == pytest.approx(0.0, abs=1e-8)
        assert triple.b == pytest.approx(0.5)


class TestLogGammaRatio:
    """log Gamma(z+1)/(z log z) and its density"""

    def test_density_value(self):
        expected = 0.5 * math.log(math.pi) / (0.5 * (math.log(0.5) ** 2 + math.pi ** 2))
        assert hp.log_gamma_ratio_density(0.5) == pytest.approx(expected, rel=1e-12)

    @given(st.floats(min_value=0.01, max_value=60.0))
    @settings(max_examples=80, deadline=None)
    def test_density_positive(self, s):
        assume(abs(s - round(s)) > 1e-6)
        assert hp.log_gamma_ratio_density(s) > 0

    def test_density_singular_at_integers(self):
        with pytest.raises(SingularPoint):
            hp.log_gamma_ratio_density(3.0)

    def test_density_domain(self):
        with pytest.raises(DomainError):
            hp.log_gamma_ratio_density(-0.5)

    def test_representation_matches(self):
        report = hp.verify_logGamma_ratio_representation([0.5, 2.0, 5.0, 1.0])
        assert report.verified
        assert [row['x'] for row in report.details['samples']] == [0.5, 2.0, 5.0]

    def test_density_recovered_from_boundary(self):
        assert hp.verify_density_recovery([0.5, 1.5, 2.5]).verified


class TestGFunctionRatio:
    """log G(z+1)/(z^2 log z)"""

    def test_values_on_positive_axis(self):
        assert hp.g_function_ratio(complex(2.0)).real == pytest.approx(0.0, abs=1e-9)
        assert hp.g_function_ratio(complex(5.0)).real == pytest.approx(math.log(288.0) / (25 * math.log(5.0)))

    def test_check_passes(self):
        report = hp.g_function_ratio_check(hp.HalfPlaneGrid.small(10))
        assert report.verified
        assert len(report.details['parts']) == 3

    def test_decreasing_step_names_both_ends(self, monkeypatch):
        ratios = {2.0: 0.30, 5.0: 0.40, 10.0: 0.35}
        monkeypatch.setattr(hp, "g_function_ratio", lambda z: complex(ratios[z.real]))
        monkeypatch.setattr(hp, "verify_pick",
                            lambda f, grid, tol, fid: ClassReport(ClassLabel.PICK, Verdict.VERIFIED, fid))
        monkeypatch.setattr(hp, "boundary_density", lambda f, x, singular: (0.0, 0.0))
        report = hp.g_function_ratio_check(x_samples=(2.0, 5.0, 10.0))
        assert report.refuted
        assert report.witness.point == "5->10"
        assert report.witness.value == pytest.approx(-0.05)

    def test_ratio_above_limit_is_refuted_at_its_sample(self):
        report = hp.increasing_limit_scan([2.0, 5.0], [0.3, 0.6], 0.5, 1e-12)
        assert report.refuted
        assert report.witness.point == 5.0
        assert report.witness.value == pytest.approx(-0.1)

    def test_no_samples_off_the_singular_point(self):
        report = hp.g_function_ratio_check(hp.HalfPlaneGrid.small(4), x_samples=(1.0,), density_points=(0.5,))
        limit = report.details['parts'][2]
        assert not report.verified
        assert limit['verdict'] == Verdict.INCONCLUSIVE.value
        assert limit['details'] == {'samples': 0, 'values': {}, 'limit': 0.5}


class TestLownerKernel:
    """Finite Lowner matrices"""

    def test_log_is_operator_monotone(self):
        assert hp.lowner_psd(math.log, [1.0, 2.0, 4.0, 8.0], lambda t: 1.0 / t).verified

    def test_sqrt_is_operator_monotone(self):
        assert hp.lowner_psd(math.sqrt, [0.5, 1.0, 3.0, 7.0], lambda t: 0.5 / math.sqrt(t)).verified

    def test_square_is_not(self):
        report = hp.lowner_psd(lambda t: t * t, [1.0, 2.0, 3.0], lambda t: 2 * t)
        assert report.refuted
        assert report.witness.value < 0

    def test_kernel_entries(self):
        kernel = hp.lowner_kernel(lambda t: t * t, [1.0, 2.0], lambda t: 2 * t)
        assert np.allclose(kernel, [[2.0, 3.0], [3.0, 4.0]])

    def test_finite_difference_diagonal(self):
        kernel = hp.lowner_kernel(math.log, [1.0, 2.0])
        assert kernel[1, 1] == pytest.approx(0.5, rel=1e-6)

    def test_repeated_points(self):
        with pytest.raises(DegeneratePoints):
            hp.lowner_psd(math.log, [1.0, 1.0])

    def test_too_many_points(self):
        with pytest.raises(DomainError):
            hp.lowner_psd(math.log, list(range(1, 15)))
