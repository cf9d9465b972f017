"""Command-line front end for the verification campaigns.

Commands
    levels      energy table E_n with the 1/n^2 ratio check
    flatness    quantum potential V_Q against E_n per eigenstate
    bohr-radii  radial-distribution peaks of circular states against n^2 a
    airy        accelerating-packet checks (acceleration, residuals, peaks)
    profile     export a named curve as CSV, JSON, or SVG

Exit status is 0 when every case passes, 1 when any fails, 2 on usage
errors.  All file output is byte-deterministic for a given invocation;
wall-clock timing goes to stderr only.  CSV schemas (comma delimiter, LF
endings, UTF-8, 12 significant digits):

    levels      n,energy,ratio,expected,rel_error,pass
    flatness    case_id,computed,expected,abs_error,rel_error,pass
    bohr-radii  n,r_peak,expected,rel_error,pass
    airy        case_id,computed,expected,abs_error,rel_error,pass
    profile     r|x,value,masked

The environment variable HYDROBOHM_OUT_DIR redirects relative output paths
into the given directory.
"""

from __future__ import annotations

import argparse
import os
import sys
import time as _time
from dataclasses import dataclass

import numpy as np

from .campaigns import (
    AIRY_TOL,
    BOHR_RADII_TOL,
    LEVELS_TOL,
    ProfileCurve,
    profile_curve,
    run_airy,
    run_bohr_radii,
    run_flatness,
    run_levels,
)
from .core import atomic_units
from .reports import (
    VerificationReport,
    format_number,
    report_rows,
    write_csv,
    write_json,
    write_svg,
)

__all__ = ["main", "RunConfig"]

OUT_DIR_ENV = "HYDROBOHM_OUT_DIR"

_REPORT_HEADER = ["case_id", "computed", "expected", "abs_error", "rel_error", "pass"]


@dataclass(frozen=True)
class RunConfig:
    """Validated invocation parameters for one campaign run."""

    command: str
    n_max: int = 1
    policy: str = "all-lm"
    method: str = "analytic"
    tolerance: float | None = None
    strength: float = 1.0
    times: tuple[float, ...] = (0.0, 0.3, 1.0)
    selection: object = None
    quantity: str = "P"
    fmt: str = "csv"
    out_path: str | None = None

    def __post_init__(self) -> None:
        if self.n_max < 1:
            raise ValueError("n_max must satisfy n_max >= 1")
        if self.tolerance is not None and not self.tolerance > 0.0:
            raise ValueError("tolerance must be positive")
        if self.fmt not in ("csv", "json", "svg"):
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.command == "airy" and not self.strength > 0.0:
            raise ValueError("strength must be positive")
        if self.command == "airy" and not self.times:
            raise ValueError("at least one time is required")


def _resolve_out(path: str) -> str:
    base = os.environ.get(OUT_DIR_ENV)
    if base and not os.path.isabs(path):
        os.makedirs(base, exist_ok=True)
        return os.path.join(base, path)
    return path


def _print_report(report: VerificationReport) -> None:
    for line in report.summary_lines():
        print(line)


def _write_report(config: RunConfig, report: VerificationReport, table=None) -> None:
    if config.out_path is None:
        return
    path = _resolve_out(config.out_path)
    if config.fmt == "json":
        payload = {"report": report.to_dict()}
        if table is not None:
            payload["table"] = table
        write_json(path, payload)
    else:
        write_csv(path, _REPORT_HEADER, report_rows(report))


def _parse_times(text: str) -> tuple[float, ...]:
    try:
        times = tuple(float(part) for part in text.split(",") if part.strip() != "")
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad time list {text!r}") from exc
    if not times:
        raise argparse.ArgumentTypeError("at least one time is required")
    return times


def _parse_state(text: str):
    if text.strip() == "airy":
        return "airy"
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("state must be n,l,m or 'airy'")
    try:
        return tuple(int(part) for part in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad state {text!r}") from exc


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0.0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def cmd_levels(config: RunConfig) -> int:
    report, rows = run_levels(
        config.n_max, atomic_units(), config.tolerance if config.tolerance else LEVELS_TOL
    )
    print("n,energy,ratio,expected")
    for n, energy, ratio, expected in rows:
        print(f"{n},{format_number(energy)},{format_number(ratio)},{format_number(expected)}")
    _print_report(report)
    if config.out_path is not None:
        path = _resolve_out(config.out_path)
        if config.fmt == "json":
            write_json(
                path,
                {
                    "report": report.to_dict(),
                    "table": [
                        {"n": n, "energy": energy, "ratio": ratio, "expected": expected}
                        for n, energy, ratio, expected in rows
                    ],
                },
            )
        else:
            header = ["n", "energy", "ratio", "expected", "rel_error", "pass"]
            csv_rows = []
            for (n, energy, ratio, expected), case in zip(rows, report.sorted_cases()):
                csv_rows.append(
                    [
                        str(n),
                        format_number(energy),
                        format_number(ratio),
                        format_number(expected),
                        format_number(case.rel_error),
                        "true" if case.passed else "false",
                    ]
                )
            write_csv(path, header, csv_rows)
    return 0 if report.all_passed else 1


def cmd_flatness(config: RunConfig) -> int:
    report = run_flatness(
        config.n_max,
        atomic_units(),
        policy=config.policy,
        method=config.method,
        tolerance=config.tolerance,
    )
    _print_report(report)
    _write_report(config, report)
    return 0 if report.all_passed else 1


def cmd_bohr_radii(config: RunConfig) -> int:
    report, rows = run_bohr_radii(
        config.n_max, atomic_units(), config.tolerance if config.tolerance else BOHR_RADII_TOL
    )
    print("n,r_peak,expected,rel_error,pass")
    for n, r_peak, expected, rel_error, passed in rows:
        print(
            f"{n},{format_number(r_peak)},{format_number(expected)},"
            f"{format_number(rel_error)},{'true' if passed else 'false'}"
        )
    _print_report(report)
    if config.out_path is not None:
        path = _resolve_out(config.out_path)
        if config.fmt == "json":
            write_json(
                path,
                {
                    "report": report.to_dict(),
                    "table": [
                        {"n": n, "r_peak": r_peak, "expected": expected, "rel_error": rel, "pass": passed}
                        for n, r_peak, expected, rel, passed in rows
                    ],
                },
            )
        else:
            header = ["n", "r_peak", "expected", "rel_error", "pass"]
            csv_rows = [
                [
                    str(n),
                    format_number(r_peak),
                    format_number(expected),
                    format_number(rel),
                    "true" if passed else "false",
                ]
                for n, r_peak, expected, rel, passed in rows
            ]
            write_csv(path, header, csv_rows)
    return 0 if report.all_passed else 1


def cmd_airy(config: RunConfig) -> int:
    report, rows = run_airy(
        config.strength,
        config.times,
        atomic_units(),
        config.tolerance if config.tolerance else AIRY_TOL,
    )
    print("t,x_peak,expected")
    for t, displacement, expected in rows:
        print(f"{format_number(t)},{format_number(displacement)},{format_number(expected)}")
    _print_report(report)
    _write_report(
        config,
        report,
        table=[{"t": t, "x_peak": d, "expected": e} for t, d, e in rows],
    )
    return 0 if report.all_passed else 1


def cmd_profile(config: RunConfig) -> int:
    curve: ProfileCurve = profile_curve(
        config.selection,
        config.quantity,
        atomic_units(),
        strength=config.strength,
        time=config.times[0],
    )
    path = _resolve_out(config.out_path)
    coord_name = "x" if config.selection == "airy" else "r"
    if config.fmt == "svg":
        write_svg(
            path,
            curve.coords,
            curve.values,
            curve.title,
            curve.x_label,
            curve.y_label,
            mask=curve.masked,
        )
    elif config.fmt == "json":
        write_json(
            path,
            {
                "title": curve.title,
                "x_label": curve.x_label,
                "y_label": curve.y_label,
                "rows": [
                    {coord_name: float(c), "value": None if bad else float(v), "masked": bool(bad)}
                    for c, v, bad in zip(curve.coords, curve.values, curve.masked)
                ],
            },
        )
    else:
        rows = []
        for c, v, bad in zip(curve.coords, curve.values, curve.masked):
            rows.append(
                [
                    format_number(c),
                    "" if bad or not np.isfinite(v) else format_number(v),
                    "true" if bad else "false",
                ]
            )
        write_csv(path, [coord_name, "value", "masked"], rows)
    print(f"wrote {path}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hydrobohm",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_levels = sub.add_parser("levels", help="energy table with the 1/n^2 ratio check")
    p_levels.add_argument("--n-max", type=_positive_int, required=True)
    p_levels.add_argument("--tol", type=_positive_float, default=None)
    p_levels.add_argument("--format", choices=("csv", "json"), default="csv")
    p_levels.add_argument("--out", default=None)

    p_flat = sub.add_parser("flatness", help="V_Q = E_n check per eigenstate")
    p_flat.add_argument("--n-max", type=_positive_int, required=True)
    group = p_flat.add_mutually_exclusive_group()
    group.add_argument("--all-lm", dest="policy", action="store_const", const="all-lm")
    group.add_argument("--circular", dest="policy", action="store_const", const="circular")
    p_flat.set_defaults(policy="all-lm")
    p_flat.add_argument("--method", choices=("analytic", "fd"), default="analytic")
    p_flat.add_argument("--tol", type=_positive_float, default=None)
    p_flat.add_argument("--format", choices=("csv", "json"), default="csv")
    p_flat.add_argument("--out", default=None)

    p_bohr = sub.add_parser("bohr-radii", help="P_{n,n-1} peak against n^2 a")
    p_bohr.add_argument("--n-max", type=_positive_int, required=True)
    p_bohr.add_argument("--tol", type=_positive_float, default=None)
    p_bohr.add_argument("--format", choices=("csv", "json"), default="csv")
    p_bohr.add_argument("--out", default=None)

    p_airy = sub.add_parser("airy", help="accelerating-packet checks")
    p_airy.add_argument("--B", dest="strength", type=_positive_float, default=1.0)
    p_airy.add_argument("--times", type=_parse_times, default=(0.0, 0.3, 1.0))
    p_airy.add_argument("--tol", type=_positive_float, default=None)
    p_airy.add_argument("--format", choices=("csv", "json"), default="csv")
    p_airy.add_argument("--out", default=None)

    p_prof = sub.add_parser("profile", help="export a named curve")
    p_prof.add_argument("--state", type=_parse_state, required=True, help="n,l,m or 'airy'")
    p_prof.add_argument(
        "--quantity", choices=("P", "V", "V_bohm", "V_q", "j", "residual"), default="P"
    )
    p_prof.add_argument("--B", dest="strength", type=_positive_float, default=1.0)
    p_prof.add_argument("--time", type=float, default=0.0)
    p_prof.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p_prof.add_argument("--out", required=True)
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.command == "levels":
        return RunConfig(
            command="levels", n_max=args.n_max, tolerance=args.tol, fmt=args.format, out_path=args.out
        )
    if args.command == "flatness":
        return RunConfig(
            command="flatness",
            n_max=args.n_max,
            policy=args.policy,
            method=args.method,
            tolerance=args.tol,
            fmt=args.format,
            out_path=args.out,
        )
    if args.command == "bohr-radii":
        return RunConfig(
            command="bohr-radii", n_max=args.n_max, tolerance=args.tol, fmt=args.format, out_path=args.out
        )
    if args.command == "airy":
        return RunConfig(
            command="airy",
            strength=args.strength,
            times=args.times,
            tolerance=args.tol,
            fmt=args.format,
            out_path=args.out,
        )
    return RunConfig(
        command="profile",
        selection=args.state,
        quantity=args.quantity,
        strength=args.strength,
        times=(args.time,),
        fmt=args.format,
        out_path=args.out,
    )


_DISPATCH = {
    "levels": cmd_levels,
    "flatness": cmd_flatness,
    "bohr-radii": cmd_bohr_radii,
    "airy": cmd_airy,
    "profile": cmd_profile,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
    except ValueError as exc:
        parser.error(str(exc))
    started = _time.perf_counter()
    try:
        status = _DISPATCH[config.command](config)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wall time: {_time.perf_counter() - started:.3f} s", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
