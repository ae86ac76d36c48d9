"""
Lowner Command Line
Batch front end: evaluate functions, run class checks, representations,
expansions, inverse-gamma tables and case studies

Output is written once, as CSV (header x,value[,error_estimate]) or JSON
(sorted keys). Exit status: 0 verified/success, 1 refuted or not certified,
2 error.
"""

import argparse
import csv
import io
import json
import logging
import math
import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

import asymptotics
import case_studies
import config
import function_registry as registry
import halfplane_analysis as halfplane
import inverse_gamma
import monotone_classes as classes
from class_report import ClassReport
from errors import LownerError
from numerics_core import Grid
from special_functions import as_complex_point

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_ERROR = 2


class Command(Enum):
    EVAL = "eval"
    CLASSIFY = "classify"
    REPRESENT = "represent"
    EXPAND = "expand"
    INVERT_GAMMA = "invert-gamma"
    CASE_STUDY = "case-study"
    SELFTEST = "selftest"


class OutputFormat(Enum):
    CSV = "csv"
    JSON = "json"


CLASS_CHOICES = ("cm", "cm-alpha", "lcm", "stieltjes", "bernstein", "thorin", "exp-bernstein", "pick", "lowner",
                 "inclusions")
REPRESENT_CHOICES = ("log_gamma_ratio", "log_gamma_ratio_density", "g_function_ratio", "gamma_ratio", "tau",
                     "xl", "post_widder")
EXPAND_CHOICES = ("multiple_gamma", "binet", "nu", "closed_form")
CASE_CHOICES = ("unit-ball", "h-threshold", "h-cm", "h-moments", "h-components", "g-lambda", "gamma-ratio")
REGISTRY_COMMANDS = (Command.EVAL, Command.CLASSIFY)
UNIT_BALL_GATING = ("unit_ball_decreasing", "unit_ball_log_convex", "unit_ball_limit_exp(-1/2)")


@dataclass(frozen=True)
class RunConfig:
    """One CLI invocation, validated before anything is computed"""
    command: Command
    function_id: str = ""
    grid: Optional[Grid] = None
    tol: Optional[float] = None
    orders: int = config.CM_MAX_ORDER
    output_format: OutputFormat = OutputFormat.CSV
    output_path: Optional[str] = None
    params: Dict[str, float] = field(default_factory=dict)
    class_name: str = "cm"
    lam: float = 1.0
    alpha: float = 0.0
    target_fn: str = "inv_one_plus"
    case: str = "unit-ball"
    n_max: int = 60
    target: Optional[complex] = None
    seed: Optional[complex] = None
    branch: Optional[int] = None
    k_max: int = 3
    only: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.tol is not None and not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol}")
        if not 0 <= self.orders <= config.JET_MAX_ORDER:
            raise ValueError(f"orders must lie in 0..{config.JET_MAX_ORDER}, got {self.orders}")
        if self.command in REGISTRY_COMMANDS and self.function_id not in registry.REGISTRY:
            raise ValueError(f"Unknown function id '{self.function_id}'. Known: {', '.join(sorted(registry.REGISTRY))}")
        if self.command is Command.CLASSIFY and self.class_name not in CLASS_CHOICES:
            raise ValueError(f"Unknown class '{self.class_name}'")
        if self.command is Command.REPRESENT and self.function_id not in REPRESENT_CHOICES:
            raise ValueError(f"represent supports {', '.join(REPRESENT_CHOICES)}, got '{self.function_id}'")
        if self.command is Command.EXPAND and self.function_id not in EXPAND_CHOICES:
            raise ValueError(f"expand supports {', '.join(EXPAND_CHOICES)}, got '{self.function_id}'")
        if self.command is Command.CASE_STUDY and self.case not in CASE_CHOICES:
            raise ValueError(f"Unknown case study '{self.case}'")
        if self.n_max < 1 or self.k_max < 0:
            raise ValueError(f"n_max must be >= 1 and k_max >= 0, got {self.n_max}, {self.k_max}")

    @property
    def tolerance(self) -> float:
        return self.tol if self.tol is not None else config.CM_TOL

    def grid_or(self, default: Tuple[float, float, int, str]) -> Grid:
        return self.grid or Grid.from_tuple(default)


@dataclass
class Table:
    header: Tuple[str, ...]
    rows: List[Tuple[Any, ...]] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {'header': list(self.header), 'rows': [dict(zip(self.header, row)) for row in self.rows]}


@dataclass
class RunResult:
    command: Command
    table: Optional[Table] = None
    reports: List[ClassReport] = field(default_factory=list)
    payload: Dict[str, Any] = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        if any(not report.verified for report in self.reports):
            return EXIT_REFUTED
        return EXIT_OK

    def to_dict(self) -> Dict:
        out: Dict[str, Any] = {'command': self.command.value}
        if self.table is not None:
            out['table'] = self.table.to_dict()
        if self.reports:
            out['reports'] = [report.to_dict() for report in self.reports]
        out.update(self.payload)
        return out


def _value_table(xs: Sequence[float], values: Sequence[float],
                 errors: Optional[Sequence[float]] = None) -> Table:
    if errors is None:
        return Table(("x", "value"), [(float(x), float(v)) for x, v in zip(xs, values)])
    return Table(("x", "value", "error_estimate"),
                 [(float(x), float(v), float(e)) for x, v, e in zip(xs, values, errors)])


# ========== Commands ==========

def run_eval(cfg: RunConfig) -> RunResult:
    f = registry.get_function(cfg.function_id, **cfg.params)
    xs = cfg.grid_or(config.CM_GRID).points()
    return RunResult(cfg.command, _value_table(xs, [f(x) for x in xs]))


def run_classify(cfg: RunConfig) -> RunResult:
    f = registry.get_function(cfg.function_id, **cfg.params)
    fid, tol, grid, orders = cfg.function_id, cfg.tolerance, cfg.grid, cfg.orders
    name = cfg.class_name
    if name == "cm":
        report = classes.check_cm(f, 0.0, grid, orders, tol, fid)
    elif name == "cm-alpha":
        report = classes.check_cm(f, cfg.alpha, grid, orders, tol, fid)
    elif name == "lcm":
        report = classes.check_lcm(f, grid, orders, tol, fid)
    elif name == "stieltjes":
        report = classes.check_stieltjes_order(f, cfg.lam, config.STIELTJES_K_MAX, grid, tol, orders, fid)
    elif name == "bernstein":
        report = classes.check_bernstein_order(f, cfg.lam, grid, orders, tol, fid)
    elif name == "thorin":
        report = classes.thorin_check(f, cfg.lam, cfg.alpha, grid, tol, orders, fid)
    elif name == "exp-bernstein":
        report = classes.exp_bernstein_check(f, (0.5, 1.0, 2.0), grid, tol, orders, fid)
    elif name == "pick":
        if f.complex_value is None:
            raise LownerError(f"{fid} has no holomorphic extension registered")
        report = halfplane.verify_pick(f.complex_value, None, cfg.tol or config.PICK_TOL, fid)
    elif name == "lowner":
        points = cfg.grid_or((0.5, 10.0, 8, "logarithmic")).points()
        derivative = f.derivative()
        report = halfplane.lowner_psd(f.value, points, derivative.value, cfg.tol or config.LOWNER_PSD_TOL, fid)
    else:
        report = classes.class_inclusion_suite({fid: f}, grid, tol, min(orders, 6))
    return RunResult(cfg.command, reports=[report])


def run_represent(cfg: RunConfig) -> RunResult:
    name = cfg.function_id
    if name == "log_gamma_ratio":
        xs = cfg.grid_or((0.5, 100.0, 12, "logarithmic")).points()
        values = [halfplane.log_gamma_ratio_stieltjes(x) for x in xs]
        errors = [abs(v - halfplane.log_gamma_ratio(complex(x)).real) for x, v in zip(xs, values)]
        report = halfplane.verify_logGamma_ratio_representation(xs, cfg.tol or 1e-6)
        return RunResult(cfg.command, _value_table(xs, values, errors), [report])
    if name == "log_gamma_ratio_density":
        ss = cfg.grid_or((0.15, 4.85, 20, "linear")).points()
        extracted = [halfplane.boundary_density(halfplane.log_gamma_ratio, -s,
                                                tuple(-float(k) for k in range(int(max(ss)) + 2))) for s in ss]
        report = halfplane.verify_density_recovery(ss, cfg.tol or 1e-4)
        return RunResult(cfg.command, _value_table(ss, [v for v, _ in extracted], [e for _, e in extracted]),
                         [report])
    if name == "g_function_ratio":
        return RunResult(cfg.command, reports=[halfplane.g_function_ratio_check(tol=cfg.tol or config.PICK_TOL)])
    if name == "gamma_ratio":
        a, b = cfg.params.get('a', 1.0), cfg.params.get('b', 1.0)
        xs = cfg.grid_or((0.5, 5.0, 4, "logarithmic")).points()
        f = registry.gamma_ratio(a, b)
        values = [case_studies.gamma_ratio_integral(a, b, x) for x in xs]
        errors = [abs(v - f(x)) for x, v in zip(xs, values)]
        report = case_studies.gamma_ratio_representation(a, b, xs, cfg.tol or 1e-8)
        return RunResult(cfg.command, _value_table(xs, values, errors), [report])
    if name == "tau":
        ss = cfg.grid_or((0.05, 0.95, 19, "linear")).points()
        extracted = [case_studies.tau_extracted(float(s)) for s in ss]
        return RunResult(cfg.command, _value_table(ss, [v for v, _ in extracted], [e for _, e in extracted]),
                         payload={'closed_form': [case_studies.tau_density(float(s)) for s in ss]})
    f = registry.get_function(cfg.target_fn, **cfg.params)
    if name == "xl":
        xs = cfg.grid_or((0.1, 10.0, 10, "logarithmic")).points()
        return RunResult(cfg.command, _value_table(xs, [classes.xl_transform(f, x) for x in xs]))
    ts = cfg.grid_or((0.25, 4.0, 16, "logarithmic")).points()
    n = max(cfg.orders, 1)
    return RunResult(cfg.command, _value_table(ts, [classes.post_widder_density(f, t, n) for t in ts]),
                     payload={'n': n, 'function': cfg.target_fn})


def run_expand(cfg: RunConfig) -> RunResult:
    name = cfg.function_id
    xs = cfg.grid_or((1.0, 20.0, 20, "logarithmic")).points()
    if name == "multiple_gamma":
        N = int(cfg.params.get('N', 2))
        m = int(cfg.params.get('m', N + 2))
        values = [asymptotics.expansion_terms(N, m, w) for w in xs]
        remainders = [asymptotics.remainder_RNm(N, m, w) for w in xs]
        return RunResult(cfg.command, _value_table(xs, values, remainders), payload={'N': N, 'm': m})
    if name == "binet":
        return RunResult(cfg.command, _value_table(xs, [asymptotics.binet_mu(x) for x in xs],
                                                   [1.0 / (12.0 * x) for x in xs]))
    if name == "nu":
        m = int(cfg.params.get('m', 1))
        return RunResult(cfg.command, _value_table(xs, [asymptotics.nu_m(m, t) for t in xs]), payload={'m': m})
    n = int(cfg.params.get('n', 2))
    closed = [asymptotics.remainder_closed_form_N1(n, w) for w in xs]
    direct = [asymptotics.taylor_gap(1, n, w) for w in xs]
    return RunResult(cfg.command, _value_table(xs, closed, [abs(c - d) for c, d in zip(closed, direct)]),
                     payload={'n': n})


def run_invert_gamma(cfg: RunConfig) -> RunResult:
    if cfg.target is not None:
        if cfg.branch is not None:
            w = inverse_gamma.branch_inverse_g_k(cfg.branch, cfg.target)
        else:
            w = inverse_gamma.invert_log_gamma(cfg.target, cfg.seed)
        payload = {'target': {'re': cfg.target.real, 'im': cfg.target.imag},
                   'preimage': {'re': w.real, 'im': w.imag}, 'branch': cfg.branch}
        return RunResult(cfg.command, payload=payload)
    table = inverse_gamma.extremal_points(cfg.k_max)
    rows = Table(("x", "value", "error_estimate"),
                 [(entry.x, entry.log_abs_gamma, entry.residual) for entry in table.entries])
    return RunResult(cfg.command, rows, payload={'extremal_points': table.rows()})


def run_case_study(cfg: RunConfig) -> RunResult:
    case = cfg.case
    if case == "unit-ball":
        table = case_studies.unit_ball_sequence(max(cfg.n_max, 3))
        roots = table.roots()
        out = _value_table([n for n, _ in roots], [r for _, r in roots],
                           [abs(r - case_studies.UNIT_BALL_LIMIT) for _, r in roots])
        gating = [r for r in table.reports if r.function_id in UNIT_BALL_GATING]
        informational = [r.to_dict() for r in table.reports if r.function_id not in UNIT_BALL_GATING]
        return RunResult(cfg.command, out, gating, {'informational': informational})
    if case == "h-threshold":
        grid = cfg.grid_or(config.H_THRESHOLD_GRID)
        threshold_precision = 1e-6
        threshold = case_studies.h_threshold_bisect(grid=grid, precision=threshold_precision)
        scan = case_studies.h_threshold_scan(grid)
        a = cfg.params.get('a', threshold.value - threshold_precision)
        return RunResult(cfg.command, _value_table(scan.ts, scan.values(a)),
                         [case_studies.f_positivity_report(a, grid=grid)],
                         {'threshold': threshold.to_dict(), 'a': a})
    if case == "h-cm":
        return RunResult(cfg.command, reports=[case_studies.h_cm_threshold_check(grid=cfg.grid)])
    if case == "h-moments":
        moments = case_studies.h_moment_sequence(cfg.n_max)
        report = case_studies.hausdorff_check(moments)
        state = case_studies.h_family_state(cfg.params.get('a', 1.0))
        return RunResult(cfg.command, _value_table(range(len(moments)), moments), [report],
                         {'tau': state.to_dict()})
    if case == "h-components":
        a = cfg.params.get('a', 1.0)
        xs = cfg.grid_or((0.1, 10.0, 10, "logarithmic")).points()
        rows = [case_studies.h_family_components(a, x, x).to_dict() for x in xs]
        return RunResult(cfg.command, _value_table(xs, [row['F_a'] for row in rows]), payload={'components': rows})
    if case == "g-lambda":
        return RunResult(cfg.command, reports=[case_studies.g_lambda_suite(cfg.params.get('lam', cfg.lam), cfg.grid,
                                                                           cfg.tolerance, min(cfg.orders, 6))])
    a, b = cfg.params.get('a', 1.0), cfg.params.get('b', 1.0)
    return RunResult(cfg.command, reports=[case_studies.gamma_ratio_representation(a, b, grid=cfg.grid)])


def run_selftest_command(cfg: RunConfig) -> RunResult:
    import selftest
    results = selftest.run_selftest(cfg.only or None)
    failed = [r.number for r in results if not r.passed]
    payload = {'criteria': [r.to_dict() for r in results], 'passed': len(results) - len(failed), 'failed': failed}
    result = RunResult(cfg.command, payload=payload)
    if failed:
        result.payload['exit_code'] = EXIT_REFUTED
    return result


HANDLERS = {
    Command.EVAL: run_eval,
    Command.CLASSIFY: run_classify,
    Command.REPRESENT: run_represent,
    Command.EXPAND: run_expand,
    Command.INVERT_GAMMA: run_invert_gamma,
    Command.CASE_STUDY: run_case_study,
    Command.SELFTEST: run_selftest_command,
}


def run(cfg: RunConfig) -> RunResult:
    logger.info(f"Running {cfg.command.value} ({cfg.function_id or cfg.case})")
    return HANDLERS[cfg.command](cfg)


# ========== Output ==========

def _format_cell(value: Any) -> str:
    if isinstance(value, (float, np.floating)):
        if math.isnan(value) or math.isinf(value):
            return str(float(value)).lower()
        return config.CSV_FLOAT_FORMAT.format(float(value))
    return str(value)


def render_csv(result: RunResult) -> str:
    """Table rows, or one row per report when there is no table"""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if result.table is not None:
        writer.writerow(result.table.header)
        for row in result.table.rows:
            writer.writerow([_format_cell(v) for v in row])
    elif result.reports:
        writer.writerow(("function", "class", "verdict", "witness_point", "witness_order", "witness_value",
                         "tolerance", "wall_time"))
        for report in result.reports:
            w = report.witness
            writer.writerow([report.function_id, report.label, report.verdict.value,
                             _format_cell(w.point) if w else "", w.order if w and w.order is not None else "",
                             _format_cell(w.value) if w else "", _format_cell(report.tol),
                             _format_cell(report.elapsed)])
    else:
        writer.writerow(("key", "value"))
        for key in sorted(result.payload):
            writer.writerow([key, json.dumps(result.payload[key], sort_keys=True, default=str)])
    return buffer.getvalue()


def render_json(result: RunResult) -> str:
    return json.dumps(result.to_dict(), indent=2, sort_keys=True, default=str) + "\n"


def write_output(result: RunResult, output_format: OutputFormat, path: Optional[str]) -> None:
    text = render_csv(result) if output_format is OutputFormat.CSV else render_json(result)
    if path:
        with open(path, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        logger.info(f"Wrote {output_format.value} output to {path}")
    else:
        sys.stdout.write(text)


def summarize(result: RunResult) -> None:
    """Verdict lines on the diagnostic stream; stdout carries only the artifact"""
    for report in result.reports:
        print(str(report), file=sys.stderr)


# ========== Argument Parsing ==========

def _complex(text: str) -> complex:
    try:
        value = complex(text.replace(" ", "").replace("i", "j"))
        return as_complex_point(value.real, value.imag)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a finite complex number: '{text}'") from exc


def _grid(text: str) -> Grid:
    try:
        return Grid.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lowner", description=__doc__.strip().splitlines()[1])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--grid", type=_grid, help="min:max:count:spacing, e.g. 0.5:10:20:log")
    common.add_argument("--tol", type=float, help="absolute tolerance of sign scans")
    common.add_argument("--orders", type=int, default=config.CM_MAX_ORDER, help="highest derivative order")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=None)
    common.add_argument("--output", help="write to this file instead of stdout")
    common.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")

    p = sub.add_parser("eval", parents=[common], help="tabulate a registered function")
    p.add_argument("--fn", required=True, choices=registry.list_functions())

    p = sub.add_parser("classify", parents=[common], help="run a class check")
    p.add_argument("--fn", required=True, choices=registry.list_functions())
    p.add_argument("--class", dest="class_name", default="cm", choices=CLASS_CHOICES)
    p.add_argument("--lam", type=float, default=1.0)
    p.add_argument("--alpha", type=float, default=0.0)

    p = sub.add_parser("represent", parents=[common], help="check an integral representation")
    p.add_argument("--fn", required=True, choices=REPRESENT_CHOICES)
    p.add_argument("--of", dest="target_fn", default="inv_one_plus", choices=registry.list_functions(),
                   help="registered function for xl / post_widder")

    p = sub.add_parser("expand", parents=[common], help="asymptotic expansions and remainders")
    p.add_argument("--fn", default="multiple_gamma", choices=EXPAND_CHOICES)

    p = sub.add_parser("invert-gamma", parents=[common], help="extremal points and inverse log Gamma")
    p.add_argument("--target", type=_complex)
    p.add_argument("--seed", type=_complex)
    p.add_argument("--branch", type=int, help="evaluate g_k at --target instead of inverting log Gamma")
    p.add_argument("--k-max", type=int, default=3)

    p = sub.add_parser("case-study", parents=[common], help="run a case study")
    p.add_argument("case", choices=CASE_CHOICES)
    p.add_argument("--n-max", type=int, default=60)
    p.add_argument("--lam", type=float, default=2.0)

    p = sub.add_parser("selftest", help="run the acceptance suite")
    p.add_argument("--only", action="append", default=[], help="group name or criterion number")
    p.add_argument("--json", action="store_true")
    p.add_argument("--output")
    return parser


def config_from_args(args: argparse.Namespace) -> Tuple[RunConfig, OutputFormat]:
    command = Command(args.command)
    if command is Command.SELFTEST:
        fmt = OutputFormat.JSON if args.json else OutputFormat.CSV
        return RunConfig(command, output_format=fmt, output_path=args.output, only=tuple(args.only)), fmt
    default_format = OutputFormat.JSON if command is Command.CLASSIFY else OutputFormat.CSV
    fmt = OutputFormat(args.format) if args.format else default_format
    cfg = RunConfig(
        command=command,
        function_id=getattr(args, "fn", ""),
        grid=args.grid,
        tol=args.tol,
        orders=args.orders,
        output_format=fmt,
        output_path=args.output,
        params=registry.parse_params(args.param),
        class_name=getattr(args, "class_name", "cm"),
        lam=getattr(args, "lam", 1.0),
        alpha=getattr(args, "alpha", 0.0),
        target_fn=getattr(args, "target_fn", "inv_one_plus"),
        case=getattr(args, "case", "unit-ball"),
        n_max=getattr(args, "n_max", 60),
        target=getattr(args, "target", None),
        seed=getattr(args, "seed", None),
        branch=getattr(args, "branch", None),
        k_max=getattr(args, "k_max", 3),
    )
    return cfg, fmt


def _selftest_csv(result: RunResult) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(("criterion", "name", "group", "passed", "wall_time"))
    for row in result.payload['criteria']:
        writer.writerow([row['criterion'], row['name'], row['group'], "pass" if row['passed'] else "FAIL",
                         row['wall_time']])
    return buffer.getvalue()


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR

    try:
        cfg, fmt = config_from_args(args)
        result = run(cfg)
        if cfg.command is Command.SELFTEST and fmt is OutputFormat.CSV:
            text = _selftest_csv(result)
            if cfg.output_path:
                with open(cfg.output_path, 'w', encoding='utf-8', newline='') as f:
                    f.write(text)
            else:
                sys.stdout.write(text)
        else:
            write_output(result, fmt, cfg.output_path)
    except (LownerError, ValueError, ArithmeticError, OSError) as exc:
        logger.error(f"{type(exc).__name__}: {exc}")
        print(f"lowner: error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    summarize(result)
    if cfg.command is Command.SELFTEST:
        return result.payload.get('exit_code', EXIT_OK)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
