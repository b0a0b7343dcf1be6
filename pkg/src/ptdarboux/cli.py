"""Command-line front end: verification suites, eigenfunction tables,
identity checks, and the finite-difference spectrum, as CSV or JSON.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
configuration error.  Output is fully deterministic: JSON uses sorted keys
and shortest-round-trip floats (re-serializing a parsed report reproduces
it byte for byte); CSV uses 17 significant digits.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field

from . import closed_form
from .closed_form import TrigEigenfunction, chi_eval
from .errors import (
    ConvergenceError,
    DomainError,
    EvaluationError,
    ParameterError,
    StabilityError,
)
from .models import PTParams, WellConfig, box_energy, pt_eigen_hypergeom
from .verify import fd_spectrum, resolve_tolerances, run_full_suite

__all__ = [
    "RunConfig",
    "cmd_verify",
    "cmd_tabulate",
    "cmd_identity",
    "cmd_spectrum",
    "main",
    "entry",
]

_REPORT_HEADER = ["name", "computed", "reference", "abs_dev", "rel_dev", "tolerance", "passed"]
_MATH_ERRORS = (ZeroDivisionError, DomainError, StabilityError, EvaluationError, ConvergenceError)


@dataclass(frozen=True)
class RunConfig:
    """Validated run parameters shared by every subcommand."""

    alpha: float = 1.0
    n_max: int = 10
    quad_order: int = 64
    panels: int = 32
    grid_points: int = 4000
    tolerances: dict = field(default_factory=dict)
    fmt: str = "csv"
    output: str | None = None

    def __post_init__(self):
        if not (self.alpha > 0):
            raise ParameterError(f"--alpha must be positive, got {self.alpha}")
        if self.n_max < 0:
            raise ParameterError(f"--n-max must be >= 0, got {self.n_max}")
        if self.quad_order < 2:
            raise ParameterError(f"--quad-order must be >= 2, got {self.quad_order}")
        if self.panels < 1:
            raise ParameterError(f"--panels must be >= 1, got {self.panels}")
        if self.grid_points < 100:
            raise ParameterError(f"--grid-points must be >= 100, got {self.grid_points}")
        if self.fmt not in ("csv", "json"):
            raise ParameterError(f"--format must be csv or json, got {self.fmt!r}")
        resolve_tolerances(self.tolerances)  # reject unknown names early


def _parse_tolerance_flags(pairs: list[str] | None) -> dict:
    overrides = {}
    for pair in pairs or []:
        name, sep, value = pair.partition("=")
        if not sep or not name:
            raise ParameterError(f"--tol expects NAME=VALUE, got {pair!r}")
        try:
            overrides[name] = float(value)
        except ValueError:
            raise ParameterError(f"--tol {name}: {value!r} is not a number") from None
    return overrides


def _format_float(value: float) -> str:
    return "%.17g" % value


def _csv_text(header: list[str], rows: list[list]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    return buffer.getvalue()


def _json_safe(obj):
    if isinstance(obj, dict):
        return {key: _json_safe(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(val) for val in obj]
    if isinstance(obj, float) and not math.isfinite(obj):
        return repr(obj)
    return obj


def _json_text(payload) -> str:
    return json.dumps(_json_safe(payload), indent=2, sort_keys=True) + "\n"


def _emit(text: str, output: str | None) -> int:
    if output is None:
        sys.stdout.write(text)
        return 0
    try:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        print(f"cannot write {output}: {exc}", file=sys.stderr)
        return 2
    return 0


def _bool_cell(flag: bool) -> str:
    return "true" if flag else "false"


def _report_rows(checks) -> list[list[str]]:
    return [
        [
            c.name,
            _format_float(c.computed),
            _format_float(c.reference),
            _format_float(c.abs_dev),
            _format_float(c.rel_dev),
            _format_float(c.tolerance),
            _bool_cell(c.passed),
        ]
        for c in checks
    ]


def cmd_verify(config: RunConfig) -> int:
    """Run the full verification suite and emit the report."""
    report = run_full_suite(
        config.alpha,
        config.n_max,
        config.quad_order,
        config.panels,
        config.tolerances,
        grid_points=config.grid_points,
    )
    if config.fmt == "json":
        text = _json_text(report.to_dict())
    else:
        text = _csv_text(_REPORT_HEADER, _report_rows(report.checks))
    status = _emit(text, config.output)
    if status:
        return status
    return 0 if report.overall else 1


def cmd_tabulate(config: RunConfig, n: int, points: int) -> int:
    """Tabulate the level-n bound state next to the index n+2 partner mode."""
    if n < 0:
        raise ParameterError(f"--n must be >= 0, got {n}")
    if points < 2:
        raise ParameterError(f"--points must be >= 2, got {points}")
    cfg = WellConfig(config.alpha)
    p = PTParams(2.0, 2.0)
    f = TrigEigenfunction(n + 2, config.alpha)
    amplitude = closed_form.normalization_A(n, config.alpha)
    rows = []
    for i in range(points):
        x = cfg.length * (i / (points - 1))
        chi = chi_eval(f, x)
        psi = pt_eigen_hypergeom(cfg, p, n, amplitude, x)
        rows.append((x, chi, psi, psi - chi))
    if config.fmt == "json":
        payload = {
            "parameters": {"alpha": config.alpha, "n": n, "points": points},
            "rows": [
                {"x": x, "chi": chi, "psi": psi, "difference": diff}
                for x, chi, psi, diff in rows
            ],
        }
        text = _json_text(payload)
    else:
        text = _csv_text(
            ["x", "chi", "psi", "difference"],
            [[_format_float(v) for v in row] for row in rows],
        )
    return _emit(text, config.output)


def _identity_pairs(which: str, index: int, alpha: float, points: int = 1000,
                    margin: float = 1e-3) -> list[tuple[float, float]]:
    step = (math.pi - 2.0 * margin) / (points - 1)
    xs = [(margin + i * step) / (2.0 * alpha) for i in range(points)]
    if which == "base":
        return [closed_form.identity_sides(index, alpha, x) for x in xs]
    if which == "even":
        return [closed_form.ratio_identity_even(index, alpha, x) for x in xs]
    return [closed_form.ratio_identity_odd(index, alpha, x) for x in xs]


def cmd_identity(config: RunConfig, which: str, m_or_n: int) -> int:
    """Check one identity family on a node-excluding grid; report the worst
    deviation between the two sides, scaled by the largest left-side value."""
    if m_or_n < 0:
        raise ParameterError(f"identity index must be >= 0, got {m_or_n}")
    tolerance = resolve_tolerances(config.tolerances)["identity"]
    pairs = _identity_pairs(which, m_or_n, config.alpha)
    scale = max(abs(lhs) for lhs, _ in pairs) or 1.0
    deviation = max(abs(lhs - rhs) for lhs, rhs in pairs) / scale
    passed = deviation <= tolerance
    if config.fmt == "json":
        payload = {
            "which": which,
            "index": m_or_n,
            "alpha": config.alpha,
            "points": len(pairs),
            "max_scaled_deviation": deviation,
            "tolerance": tolerance,
            "passed": passed,
        }
        text = _json_text(payload)
    else:
        text = _csv_text(
            ["which", "index", "max_scaled_deviation", "tolerance", "passed"],
            [[which, str(m_or_n), _format_float(deviation),
              _format_float(tolerance), _bool_cell(passed)]],
        )
    status = _emit(text, config.output)
    if status:
        return status
    return 0 if passed else 1


def cmd_spectrum(config: RunConfig, count: int) -> int:
    """Compare the finite-difference spectrum with 4 alpha^2 (n+2)^2."""
    if count < 0 or count > 10:
        raise ParameterError(f"--count must be between 0 and 10, got {count}")
    tolerance = resolve_tolerances(config.tolerances)["fd_spectrum"]
    modes = fd_spectrum(config.alpha, config.grid_points, count)
    cfg = WellConfig(config.alpha)
    rows = []
    for i, computed in enumerate(modes):
        exact = box_energy(cfg, i + 2)
        rel_err = abs(computed - exact) / exact
        rows.append((i, computed, exact, rel_err))
    passed = all(rel <= tolerance for _, _, _, rel in rows)
    if config.fmt == "json":
        payload = {
            "parameters": {
                "alpha": config.alpha,
                "grid_points": config.grid_points,
                "count": count,
            },
            "tolerance": tolerance,
            "overall": passed,
            "rows": [
                {"mode": i, "computed": comp, "exact": exact, "rel_err": rel}
                for i, comp, exact, rel in rows
            ],
        }
        text = _json_text(payload)
    else:
        text = _csv_text(
            ["mode", "computed", "exact", "rel_err"],
            [[str(i), _format_float(comp), _format_float(exact), _format_float(rel)]
             for i, comp, exact, rel in rows],
        )
    status = _emit(text, config.output)
    if status:
        return status
    return 0 if passed else 1


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alpha", type=float, default=1.0,
                        help="well scale; interval is (0, pi/(2 alpha))")
    common.add_argument("--n-max", type=int, default=10, dest="n_max",
                        help="largest level index exercised by the suite")
    common.add_argument("--quad-order", type=int, default=64, dest="quad_order",
                        help="Gauss-Legendre points per panel")
    common.add_argument("--panels", type=int, default=32,
                        help="equal quadrature subintervals")
    common.add_argument("--grid-points", type=int, default=4000, dest="grid_points",
                        help="finite-difference grid size")
    common.add_argument("--tol", action="append", metavar="NAME=VALUE",
                        help="tolerance override, repeatable "
                             "(quadrature, identity, residual, fd_spectrum)")
    common.add_argument("--format", choices=("csv", "json"), default="csv",
                        dest="fmt", help="output format")
    common.add_argument("--output", default=None, metavar="PATH",
                        help="write output to PATH instead of stdout")

    parser = argparse.ArgumentParser(
        prog="ptdarboux",
        description="Darboux-partner construction and verification for the "
                    "symmetric trigonometric Poschl-Teller well",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run the full verification suite")
    p_verify.set_defaults(handler=lambda cfg, args: cmd_verify(cfg))

    p_tab = sub.add_parser("tabulate", parents=[common],
                           help="tabulate a bound state against its partner mode")
    p_tab.add_argument("--n", type=int, default=0, help="level index")
    p_tab.add_argument("--points", type=int, default=101,
                       help="uniform samples on the closed interval")
    p_tab.set_defaults(handler=lambda cfg, args: cmd_tabulate(cfg, args.n, args.points))

    p_id = sub.add_parser("identity", parents=[common],
                          help="check one hypergeometric-trigonometric identity")
    p_id.add_argument("--which", choices=("base", "even", "odd"), required=True)
    p_id.add_argument("--n", type=int, default=None,
                      help="level index (base identity)")
    p_id.add_argument("--m", type=int, default=None,
                      help="family index (even/odd ratio identities)")
    p_id.set_defaults(handler=lambda cfg, args: cmd_identity(
        cfg, args.which, _identity_index(args)))

    p_spec = sub.add_parser("spectrum", parents=[common],
                            help="finite-difference spectrum vs exact energies")
    p_spec.add_argument("--count", type=int, default=3,
                        help="number of low modes to extract (<= 10)")
    p_spec.set_defaults(handler=lambda cfg, args: cmd_spectrum(cfg, args.count))
    return parser


def _identity_index(args) -> int:
    if args.which == "base":
        if args.n is None:
            if args.m is not None:
                raise ParameterError("the base identity is indexed by --n, not --m")
            return 0
        return args.n
    if args.m is None:
        if args.n is not None:
            raise ParameterError(f"the {args.which} ratio identity is indexed by --m, not --n")
        return 0
    return args.m


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        config = RunConfig(
            alpha=args.alpha,
            n_max=args.n_max,
            quad_order=args.quad_order,
            panels=args.panels,
            grid_points=args.grid_points,
            tolerances=_parse_tolerance_flags(args.tol),
            fmt=args.fmt,
            output=args.output,
        )
        return args.handler(config, args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _MATH_ERRORS as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())
