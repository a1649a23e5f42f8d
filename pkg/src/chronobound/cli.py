"""Command-line front end.

Subcommands: bound (floor for one duration), sweep (log-spaced table),
clock (optimal-clock report), verify (oracle vs closed forms) and compare
(literature reference bounds).  Exit codes: 0 success, 1 verification
failure, 2 usage error.  All numeric output is scientific notation with
12 significant digits; table, CSV and JSON renderings carry identical
values.
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from dataclasses import dataclass

from . import kernels
from .minimize import Bracket, minimize_unimodal
from .quantities import Constants, default_constants, load_constants

USAGE_ERROR = 2
VERIFY_FAILURE = 1


class UsageError(ValueError):
    """Invalid command-line input; maps to exit code 2."""


@dataclass(frozen=True)
class OutputRecord:
    """One optimal-clock row; field names double as CSV/JSON keys.

    With ``--units planck`` the same fields hold Planck-unit magnitudes.
    """

    t_seconds: float
    dt_seconds: float
    dt_over_t: float
    dt_c_seconds: float
    r_meters: float
    r_s_meters: float
    energy_joules: float
    delta_e_joules: float
    fractional_de: float


RECORD_FIELDS = [f.name for f in dataclasses.fields(OutputRecord)]
BOUND_FIELDS = ["t_seconds", "dt_seconds", "dt_over_t", "dt_c_seconds"]
COMPARE_FIELDS = ["t_seconds", "mass_kg", "salecker_wigner_seconds",
                  "ng_lloyd_seconds", "fundamental_seconds"]
VERIFY_FIELDS = ["check", "status", "closed_form", "oracle", "rel_err",
                 "evaluations"]


def _fmt(value: float) -> str:
    return f"{value:.11e}"


def _parse_positive(text: str, flag: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise UsageError(f"{flag} must be a decimal number, got {text!r}")
    if not (math.isfinite(value) and value > 0.0):
        raise UsageError(f"{flag} must be positive and finite, got {text!r}")
    return value


def _load_constants_arg(path: str | None) -> Constants:
    if path is None:
        return default_constants()
    try:
        return load_constants(path)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot load constants file {path}: {exc}")


def _to_planck_time(value: float, k: Constants, units: str) -> float:
    return value if units == "planck" else value / k.t_planck_si


def _meta(k: Constants, units: str) -> dict:
    return {
        "G": k.G_si,
        "hbar": k.hbar_si,
        "c": k.c_si,
        "t_planck": k.t_planck_si,
        "l_planck": k.l_planck_si,
        "units": units,
        "backend": kernels.BACKEND,
    }


def _record(t_planck: float, k: Constants, units: str) -> OutputRecord:
    dt_c, dt, r, r_s, energy, delta_e, frac_de, frac_dt = \
        kernels.clock_profile(t_planck)
    if units == "planck":
        time_scale = length_scale = energy_scale = 1.0
    else:
        time_scale = k.t_planck_si
        length_scale = k.l_planck_si
        energy_scale = k.energy_planck_si
    return OutputRecord(
        t_seconds=t_planck * time_scale,
        dt_seconds=dt * time_scale,
        dt_over_t=frac_dt,
        dt_c_seconds=dt_c * time_scale,
        r_meters=r * length_scale,
        r_s_meters=r_s * length_scale,
        energy_joules=energy * energy_scale,
        delta_e_joules=delta_e * energy_scale,
        fractional_de=frac_de,
    )


def _jsonify_row(row: dict) -> dict:
    # Re-parse the 12-digit rendering so JSON and table values coincide.
    return {name: (float(_fmt(v)) if isinstance(v, float) else v)
            for name, v in row.items()}


def _render_rows(fields: list[str], rows: list[dict], fmt: str,
                 meta: dict, single: bool, out) -> None:
    if fmt == "json":
        if single:
            payload = {"meta": meta, **_jsonify_row(rows[0])}
        else:
            payload = {"meta": meta, "rows": [_jsonify_row(r) for r in rows]}
        print(json.dumps(payload, indent=2), file=out)
        return
    cells = [[_fmt(row[name]) if isinstance(row[name], float) else
              str(row[name]) for name in fields] for row in rows]
    if fmt == "csv":
        print(",".join(fields), file=out)
        for row in cells:
            print(",".join(row), file=out)
        return
    widths = [max(len(name), *(len(row[i]) for row in cells)) if cells
              else len(name) for i, name in enumerate(fields)]
    print("  ".join(name.ljust(widths[i])
                    for i, name in enumerate(fields)), file=out)
    for row in cells:
        print("  ".join(cell.ljust(widths[i])
                        for i, cell in enumerate(row)), file=out)


def _cmd_bound(args, k: Constants, out) -> int:
    t = _parse_positive(args.t, "--t")
    t_planck = _to_planck_time(t, k, args.units)
    record = _record(t_planck, k, args.units)
    row = {name: getattr(record, name) for name in BOUND_FIELDS}
    _render_rows(BOUND_FIELDS, [row], args.format, _meta(k, args.units),
                 single=True, out=out)
    return 0


def _cmd_clock(args, k: Constants, out) -> int:
    t = _parse_positive(args.t, "--t")
    t_planck = _to_planck_time(t, k, args.units)
    record = _record(t_planck, k, args.units)
    row = {name: getattr(record, name) for name in RECORD_FIELDS}
    _render_rows(RECORD_FIELDS, [row], args.format, _meta(k, args.units),
                 single=True, out=out)
    return 0


def _log_grid(t_min: float, t_max: float, points: int) -> list[float]:
    lo = math.log10(t_min)
    hi = math.log10(t_max)
    step = (hi - lo) / (points - 1)
    grid = [10.0 ** (lo + i * step) for i in range(points)]
    grid[0] = t_min
    grid[-1] = t_max
    return grid


def _cmd_sweep(args, k: Constants, out) -> int:
    t_min = _parse_positive(args.t_min, "--t-min")
    t_max = _parse_positive(args.t_max, "--t-max")
    if t_min >= t_max:
        raise UsageError(f"--t-min must be smaller than --t-max, "
                         f"got {args.t_min} >= {args.t_max}")
    if args.points < 2:
        raise UsageError(f"--points must be at least 2, got {args.points}")
    rows = []
    for t in _log_grid(t_min, t_max, args.points):
        record = _record(_to_planck_time(t, k, args.units), k, args.units)
        rows.append({name: getattr(record, name) for name in RECORD_FIELDS})
    _render_rows(RECORD_FIELDS, rows, args.format, _meta(k, args.units),
                 single=False, out=out)
    return 0


def _cmd_compare(args, k: Constants, out) -> int:
    t = _parse_positive(args.t, "--t")
    mass = _parse_positive(args.mass, "--mass")
    t_planck = _to_planck_time(t, k, args.units)
    mass_planck = mass if args.units == "planck" else mass / k.m_planck_si
    time_scale = 1.0 if args.units == "planck" else k.t_planck_si
    row = {
        "t_seconds": t_planck * time_scale,
        "mass_kg": mass,
        "salecker_wigner_seconds":
            kernels.salecker_wigner(t_planck, mass_planck) * time_scale,
        "ng_lloyd_seconds": kernels.ng_lloyd(t_planck) * time_scale,
        "fundamental_seconds":
            kernels.fundamental_bound(t_planck) * time_scale,
    }
    _render_rows(COMPARE_FIELDS, [row], args.format, _meta(k, args.units),
                 single=True, out=out)
    return 0


def _verify_checks(k: Constants, rel_tol: float) -> list[dict]:
    # The oracle runs three decades tighter than the requested check
    # tolerance, clamped to its own 1e-12 resolution floor.
    oracle_tol = min(max(rel_tol * 1e-3, 1e-12), 1e-9)
    bracket = Bracket(1.0, 1e30)
    cases = [("t_planck", 1.0),
             ("1e3*t_planck", 1e3),
             ("1s", 1.0 / k.t_planck_si),
             ("1e6s", 1e6 / k.t_planck_si)]
    speeds = [("c", 1.0), ("c/2", 0.5), ("c/10", 0.1)]
    checks = []

    def add(name, closed, oracle, evaluations, converged):
        rel = abs(oracle - closed) / abs(closed)
        checks.append({
            "check": name,
            "status": "PASS" if converged and rel <= rel_tol else "FAIL",
            "closed_form": closed,
            "oracle": oracle,
            "rel_err": rel,
            "evaluations": evaluations,
        })

    # Check names stay comma-free so CSV rows need no quoting.
    for label, t_planck in cases:
        for v_label, v in speeds:
            result = minimize_unimodal(
                lambda x: kernels.constrained_objective(x, t_planck, v),
                bracket, rel_tol=oracle_tol)
            add(f"argmin[t={label} v={v_label}]",
                kernels.optimal_delta_tc(t_planck, v),
                result.argmin, result.evaluations, result.converged)
            if v == 1.0:
                add(f"min_value[t={label} v=c]",
                    kernels.fundamental_bound(t_planck) ** 2,
                    result.min_value, result.evaluations, result.converged)
    return checks


def _cmd_verify(args, k: Constants, out) -> int:
    rel_tol = _parse_positive(args.rel_tol, "--rel-tol")
    if rel_tol > 1e-3:
        raise UsageError(f"--rel-tol must be at most 1e-3, got {rel_tol}")
    checks = _verify_checks(k, rel_tol)
    passed = all(c["status"] == "PASS" for c in checks)
    if args.format == "json":
        payload = {"meta": _meta(k, args.units), "rel_tol": rel_tol,
                   "passed": passed,
                   "checks": [_jsonify_row(c) for c in checks]}
        print(json.dumps(payload, indent=2), file=out)
    else:
        _render_rows(VERIFY_FIELDS, checks, args.format,
                     _meta(k, args.units), single=False, out=out)
        if args.format == "table":
            n_pass = sum(c["status"] == "PASS" for c in checks)
            print(f"verify: {n_pass}/{len(checks)} checks passed "
                  f"(rel_tol={rel_tol:g}, backend={kernels.BACKEND})",
                  file=out)
    return 0 if passed else VERIFY_FAILURE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"),
                        default="table", help="output rendering")
    common.add_argument("--units", choices=("si", "planck"), default="si",
                        help="unit system for inputs and outputs")
    common.add_argument("--constants", metavar="PATH", default=None,
                        help="JSON file overriding G, hbar, c (SI values)")

    parser = argparse.ArgumentParser(
        prog="chronobound",
        description="Minimum time-measurement uncertainty calculator.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[common],
                       help="uncertainty floor for one duration")
    p.add_argument("--t", required=True, help="duration (seconds)")
    p.set_defaults(handler=_cmd_bound)

    p = sub.add_parser("sweep", parents=[common],
                       help="log-spaced sweep over durations")
    p.add_argument("--t-min", required=True, help="smallest duration")
    p.add_argument("--t-max", required=True, help="largest duration")
    p.add_argument("--points", type=int, default=25, help="row count")
    p.set_defaults(handler=_cmd_sweep)

    p = sub.add_parser("clock", parents=[common],
                       help="optimal-clock report for one duration")
    p.add_argument("--t", required=True, help="duration (seconds)")
    p.set_defaults(handler=_cmd_clock)

    p = sub.add_parser("verify", parents=[common],
                       help="check closed-form optima against the oracle")
    p.add_argument("--rel-tol", default="1e-6",
                   help="check tolerance (at most 1e-3)")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("compare", parents=[common],
                       help="literature reference bounds for one duration")
    p.add_argument("--t", required=True, help="duration (seconds)")
    p.add_argument("--mass", required=True, help="clock mass (kilograms)")
    p.set_defaults(handler=_cmd_compare)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        constants = _load_constants_arg(args.constants)
        return args.handler(args, constants, out)
    except UsageError as exc:
        print(f"chronobound: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
