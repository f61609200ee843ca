"""Command-line entry point ``sgapdim``.

Exit codes: 0 success, 1 usage, 2 config error, 3 numeric failure,
4 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import math
import sys
from pathlib import Path

from .config import Scenario, parse_config
from .errors import ConfigError, DomainError, InputError, NumericError, UndefinedPressure
from .geometry import box_counts, estimate_box_dimension, generate_points, write_box_csv, write_points_csv
from .language import core_counts, count_language
from .pressure import pressure_table, write_pressure_csv
from .solver import bounds, solve_entropy

EXIT_OK, EXIT_USAGE, EXIT_CONFIG, EXIT_NUMERIC, EXIT_VERIFY = 0, 1, 2, 3, 4

SUBCOMMANDS = ("bounds", "entropy", "pressure-table", "language-count", "points", "boxdim", "verify")

LANGUAGE_HEADER = ("n", "L_n", "G_n")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sgapdim", description="Dimension bounds for subfractals induced by S-gap shifts.")
    p.add_argument("subcommand", choices=SUBCOMMANDS)
    p.add_argument("--config", required=True, help="scenario file")
    p.add_argument("--out", default=".", help="directory for CSV outputs")
    p.add_argument("--seed", type=int, help="override points.seed")
    p.add_argument("--bits", action="store_true", help="report entropy in bits")
    p.add_argument("--json-report", action="store_true", help="machine-readable verify output")
    return p


def _bounds(sc: Scenario):
    s = sc.solver
    return bounds(sc.pair, sc.gaps, s.tolerance, s.series_eps, s.t_max)


def _need_ifs(sc: Scenario, what: str):
    if sc.ifs is None:
        raise ConfigError(f"'{what}' needs an ifs.* section")


def cmd_bounds(sc, args, out):
    b = _bounds(sc)
    print(f"S = {sc.gaps.describe()}")
    for name, enc in (("h", b.h), ("H", b.H)):
        flag = "  (widened)" if enc.widened else ""
        print(f"{name} = {enc.mid:.12f}  enclosure {enc}  width {enc.width:.3g}{flag}")
    return EXIT_OK


def cmd_entropy(sc, args, out):
    lam, ent = solve_entropy(sc.gaps, sc.solver.tolerance, sc.solver.series_eps)
    print(f"S = {sc.gaps.describe()}")
    print(f"lambda = {lam.mid:.12f}  enclosure {lam}")
    print(f"entropy = {ent:.12f} nats")
    if args.bits:
        print(f"entropy = {ent / math.log(2.0):.12f} bits")
    return EXIT_OK


def cmd_pressure(sc, args, out):
    rows = pressure_table(range(1, sc.pressure_n_max + 1), sc.pressure_t_values, sc.pair, sc.gaps)
    path = out / "pressure_table.csv"
    write_pressure_csv(path, rows)
    print(f"wrote {len(rows)} rows to {path}")
    return EXIT_OK


def write_language_csv(path, n_max, S):
    g = core_counts(n_max, S)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(LANGUAGE_HEADER)
        for n in range(n_max + 1):
            w.writerow([n, count_language(n, S, max_n=max(n_max, 64)), g[n]])


def read_language_csv(path):
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        if tuple(next(reader, ())) != LANGUAGE_HEADER:
            raise InputError(f"unexpected language-count header in {path}")
        return [tuple(int(v) for v in row) for row in reader]


def cmd_language(sc, args, out):
    path = out / "language_counts.csv"
    write_language_csv(path, sc.language_n_max, sc.gaps)
    for n, ln, gn in read_language_csv(path):
        print(f"n={n:3d}  |L_n|={ln}  |G_n|={gn}")
    return EXIT_OK


def cmd_points(sc, args, out):
    _need_ifs(sc, "points")
    cloud = generate_points(sc.ifs, sc.gaps, sc.points.depth, sc.points.cap, sc.points.seed)
    path = out / "points.csv"
    write_points_csv(path, cloud)
    mode = "all core words" if cloud.exhaustive else "sampled words"
    print(f"wrote {cloud.count} points ({mode}, length {cloud.depth}) to {path}")
    return EXIT_OK


def cmd_boxdim(sc, args, out):
    _need_ifs(sc, "boxdim")
    cloud = generate_points(sc.ifs, sc.gaps, sc.points.depth, sc.points.cap, sc.points.seed)
    series = box_counts(cloud, sc.boxdim.scales)
    path = out / "boxcounts.csv"
    write_box_csv(path, series)
    slope, stderr = estimate_box_dimension(series, sc.boxdim.drop_low, sc.boxdim.drop_high)
    print(f"wrote {len(series)} scales to {path}")
    print(f"box dimension estimate = {slope:.6f} +/- {stderr:.3g}")
    return EXIT_OK


def cmd_verify(sc, args, out):
    from .acceptance import run_criteria
    from .checks import run_battery

    results = run_battery(sc) + run_criteria()
    if args.json_report:
        print(json.dumps([r.as_dict() for r in results], indent=2))
    else:
        for r in results:
            print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


COMMANDS = {
    "bounds": cmd_bounds,
    "entropy": cmd_entropy,
    "pressure-table": cmd_pressure,
    "language-count": cmd_language,
    "points": cmd_points,
    "boxdim": cmd_boxdim,
    "verify": cmd_verify,
}


def run(subcommand: str, scenario: Scenario, output_dir=".", args=None) -> int:
    """Run one subcommand on an already-parsed scenario and return the exit code."""
    if args is None:
        args = argparse.Namespace(bits=False, json_report=False)
    out = Path(output_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
        return COMMANDS[subcommand](scenario, args, out)
    except (ConfigError, InputError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NumericError, DomainError, UndefinedPressure) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        build_parser().print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        scenario = parse_config(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    if args.seed is not None:
        scenario = scenario.with_seed(args.seed)
    return run(args.subcommand, scenario, args.out, args)


if __name__ == "__main__":
    sys.exit(main())
