"""
Tests for the command-line surface: exit codes, CSV and JSON artifacts
"""

import csv
import io
import json
import math

import pytest

import cli
from class_report import ClassReport, ClassLabel, Verdict


def rows_of(text):
    return list(csv.reader(io.StringIO(text)))


class TestEval:
    """lowner eval"""

    def test_csv_table(self, capsys):
        code = cli.main(["eval", "--fn", "log_gamma_ratio", "--grid", "0.5:10:20:log", "--format", "csv"])
        rows = rows_of(capsys.readouterr().out)
        assert code == cli.EXIT_OK
        assert rows[0] == ["x", "value"]
        assert len(rows) == 21
        assert float(rows[1][0]) == pytest.approx(0.5)
        assert float(rows[-1][0]) == pytest.approx(10.0)

    def test_parameters_forwarded(self, capsys):
        code = cli.main(["eval", "--fn", "power", "--param", "p=2", "--grid", "1:3:3:lin"])
        rows = rows_of(capsys.readouterr().out)
        assert code == cli.EXIT_OK
        assert [float(r[1]) for r in rows[1:]] == pytest.approx([1.0, 4.0, 9.0])

    def test_output_file(self, tmp_path, capsys):
        path = tmp_path / "values.csv"
        code = cli.main(["eval", "--fn", "exp_neg", "--grid", "1:2:2:lin", "--output", str(path)])
        assert code == cli.EXIT_OK
        assert capsys.readouterr().out == ""
        rows = rows_of(path.read_text(encoding="utf-8"))
        assert float(rows[1][1]) == pytest.approx(math.exp(-1.0), rel=1e-15)


class TestClassify:
    """lowner classify: JSON by default, exit 1 unless verified"""

    def test_verified_function(self, capsys):
        code = cli.main(["classify", "--fn", "exp_neg", "--class", "cm"])
        out = json.loads(capsys.readouterr().out)
        assert code == cli.EXIT_OK
        assert out['command'] == "classify"
        assert out['reports'][0]['verdict'] == Verdict.VERIFIED.value

    def test_refuted_function(self, capsys):
        code = cli.main(["classify", "--fn", "identity", "--class", "cm"])
        out = json.loads(capsys.readouterr().out)
        assert code == cli.EXIT_REFUTED
        assert out['reports'][0]['witness']['order'] == 1

    def test_report_rows_in_csv(self, capsys):
        code = cli.main(["classify", "--fn", "exp_neg", "--class", "cm", "--format", "csv"])
        rows = rows_of(capsys.readouterr().out)
        assert code == cli.EXIT_OK
        assert rows[0][:3] == ["function", "class", "verdict"]
        assert rows[1][0] == "exp_neg"
        assert rows[1][2] == Verdict.VERIFIED.value

    def test_verdict_line_on_stderr(self, capsys):
        cli.main(["classify", "--fn", "identity"])
        assert "identity" in capsys.readouterr().err


class TestExpandAndInvert:
    """lowner expand and lowner invert-gamma"""

    def test_closed_form_agrees_with_taylor_gap(self, capsys):
        code = cli.main(["expand", "--fn", "closed_form", "--param", "n=2", "--grid", "0.5:5:5:lin"])
        rows = rows_of(capsys.readouterr().out)
        assert code == cli.EXIT_OK
        assert rows[0] == ["x", "value", "error_estimate"]
        assert all(float(r[2]) < 1e-8 for r in rows[1:])

    def test_extremal_point_table(self, capsys):
        code = cli.main(["invert-gamma", "--k-max", "2"])
        rows = rows_of(capsys.readouterr().out)
        assert code == cli.EXIT_OK
        assert len(rows) == 4
        assert 1.46163 < float(rows[1][0]) < 1.46164

    def test_invert_target(self, capsys):
        code = cli.main(["invert-gamma", "--target", repr(math.log(24.0)), "--format", "json"])
        out = json.loads(capsys.readouterr().out)
        assert code == cli.EXIT_OK
        assert out['preimage']['re'] == pytest.approx(5.0, abs=1e-10)

    def test_payload_only_csv(self, capsys):
        code = cli.main(["invert-gamma", "--target", repr(math.log(24.0))])
        rows = rows_of(capsys.readouterr().out)
        assert code == cli.EXIT_OK
        assert rows[0] == ["key", "value"]
        assert {r[0] for r in rows[1:]} == {"branch", "preimage", "target"}


class TestCaseStudy:
    """lowner case-study"""

    def test_unit_ball(self, capsys):
        code = cli.main(["case-study", "unit-ball", "--n-max", "60"])
        rows = rows_of(capsys.readouterr().out)
        assert code == cli.EXIT_OK
        assert rows[0] == ["x", "value", "error_estimate"]
        assert len(rows) == 60
        assert all(float(r[1]) > math.exp(-0.5) for r in rows[1:])


class TestErrors:
    """Invalid invocations exit with code 2"""

    @pytest.mark.parametrize("argv", [
        ["eval", "--fn", "no_such_function"],
        ["eval", "--fn", "exp_neg", "--grid", "1:0:5:lin"],
        ["eval", "--fn", "exp_neg", "--grid", "nonsense"],
        ["classify", "--fn", "exp_neg", "--tol", "-1"],
        ["eval", "--fn", "power", "--param", "q=2"],
        ["eval", "--fn", "power", "--param", "broken"],
        ["invert-gamma", "--target", "nan"],
        ["invert-gamma", "--target", "1+2k"],
        ["selftest", "--only", "no_such_group"],
        [],
    ])
    def test_exit_code(self, argv, capsys):
        assert cli.main(argv) == cli.EXIT_ERROR

    def test_error_message(self, capsys):
        cli.main(["classify", "--fn", "exp_neg", "--tol", "-1"])
        assert "lowner: error:" in capsys.readouterr().err

    def test_help(self, capsys):
        assert cli.main(["--help"]) == cli.EXIT_OK
        assert "eval" in capsys.readouterr().out


class TestRunConfig:
    """Validation before anything is computed"""

    def test_unknown_function(self):
        with pytest.raises(ValueError):
            cli.RunConfig(cli.Command.EVAL, function_id="no_such_function")

    def test_order_range(self):
        with pytest.raises(ValueError):
            cli.RunConfig(cli.Command.EVAL, function_id="exp_neg", orders=-1)

    def test_unknown_case(self):
        with pytest.raises(ValueError):
            cli.RunConfig(cli.Command.CASE_STUDY, case="no-such-case")

    def test_default_grid(self):
        cfg = cli.RunConfig(cli.Command.EVAL, function_id="exp_neg")
        assert cfg.grid_or((1.0, 2.0, 3, "lin")).count == 3


class TestRendering:
    """CSV fallbacks and JSON layout"""

    def test_report_rows_without_table(self):
        report = ClassReport(ClassLabel.CM, Verdict.VERIFIED, function_id="f")
        rows = rows_of(cli.render_csv(cli.RunResult(cli.Command.CLASSIFY, reports=[report])))
        assert rows[0] == ["function", "class", "verdict", "witness_point", "witness_order", "witness_value",
                           "tolerance", "wall_time"]
        assert rows[1][:3] == ["f", report.label, "verified-at-samples"]
        assert rows[1][3] == ""

    def test_float_format(self):
        table = cli.Table(("x", "value"), [(0.1, float("nan"))])
        rows = rows_of(cli.render_csv(cli.RunResult(cli.Command.EVAL, table)))
        assert rows[1] == ["0.10000000000000001", "nan"]

    def test_json_layout(self):
        result = cli.RunResult(cli.Command.EVAL, cli.Table(("x", "value"), [(1.0, 2.0)]), payload={'n': 3})
        out = json.loads(cli.render_json(result))
        assert out == {'command': "eval", 'table': {'header': ["x", "value"], 'rows': [{'x': 1.0, 'value': 2.0}]},
                       'n': 3}


class TestSelftestCommand:
    """lowner selftest"""

    def test_single_criterion(self, capsys):
        code = cli.main(["selftest", "--only", "1"])
        rows = rows_of(capsys.readouterr().out)
        assert code == cli.EXIT_OK
        assert rows[0] == ["criterion", "name", "group", "passed", "wall_time"]
        assert rows[1][:4] == ["1", "gamma values", "special", "pass"]

    def test_json_summary(self, capsys):
        code = cli.main(["selftest", "--only", "1", "--json"])
        out = json.loads(capsys.readouterr().out)
        assert code == cli.EXIT_OK
        assert out['passed'] == 1 and out['failed'] == []
