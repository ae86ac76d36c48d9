"""
Tests for the acceptance runner and the lowner.py entry point
"""

import runpy
import sys
from pathlib import Path

import pytest

import selftest
from errors import NonConvergence

ENTRY_POINT = Path(__file__).parent.parent / "lowner.py"


def raising_check():
    raise NonConvergence("quadrature budget exhausted", 0.5, 1e-3)


class TestCriteriaTable:
    """Numbering and groups"""

    def test_numbers_are_consecutive(self):
        assert [c.number for c in selftest.CRITERIA] == list(range(1, len(selftest.CRITERIA) + 1))

    def test_groups(self):
        assert selftest.GROUPS == ["asymptotics", "case-study", "classes", "inverse", "pick", "special"]


class TestRunSelftest:
    """Filtering by group or criterion number"""

    def test_filter_by_group(self):
        results = selftest.run_selftest(["special"])
        assert [r.number for r in results] == [1, 2, 3]
        assert all(r.group == "special" for r in results)
        assert all(r.passed for r in results)

    def test_filter_by_number(self):
        results = selftest.run_selftest(["1", "3"])
        assert [r.number for r in results] == [1, 3]

    def test_no_match(self):
        with pytest.raises(ValueError):
            selftest.run_selftest(["no_such_group"])

    def test_binet_routes_reported(self):
        result, = selftest.run_selftest(["5"])
        assert result.passed
        assert result.details['route_difference'] <= 1e-9


class TestRunCriterion:
    """Exceptions inside a check become failed results"""

    def test_error_captured(self):
        result = selftest.run_criterion(selftest.Criterion(99, "broken", "special", raising_check))
        assert not result.passed
        assert result.details == {}
        assert result.error == "NonConvergence: quadrature budget exhausted"

    def test_failing_check(self):
        result = selftest.run_criterion(selftest.Criterion(98, "fails", "special", lambda: {'passed': False, 'x': 1}))
        assert not result.passed
        assert result.error is None
        assert result.details == {'x': 1}

    def test_to_dict(self):
        result = selftest.CriterionResult(4, "multiple gamma", "asymptotics", True, {'spread': 0.0}, 1.23456)
        assert result.to_dict() == {'criterion': 4, 'name': "multiple gamma", 'group': "asymptotics",
                                    'passed': True, 'details': {'spread': 0.0}, 'wall_time': 1.235,
                                    'error': None}


class TestEntryPoint:
    """lowner.py passes the command's exit code to the shell"""

    @pytest.mark.parametrize("argv, code", [
        (["eval", "--fn", "exp_neg", "--grid", "1:2:2:lin"], 0),
        (["classify", "--fn", "identity", "--class", "cm"], 1),
        (["eval", "--fn", "no_such_function"], 2),
    ])
    def test_exit_code(self, argv, code, tmp_path, monkeypatch, capsys):
        monkeypatch.chdir(tmp_path)
        monkeypatch.setattr(sys, "argv", [str(ENTRY_POINT)] + argv)
        with pytest.raises(SystemExit) as info:
            runpy.run_path(str(ENTRY_POINT), run_name="__main__")
        assert info.value.code == code
