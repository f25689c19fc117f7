"""Command-line front end.

Subcommands::

    xdiscord report    FAMILY [params] [--verify]
    xdiscord sweep     FAMILY --param NAME --start A --stop B --step D --out FILE
    xdiscord landscape FAMILY [params] --out FILE
    xdiscord figures   ID|all [--out-dir DIR]
    xdiscord verify    FAMILY [--N-max K]

Exit codes: 0 success, 2 usage or parameter error, 3 tightness violation.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import __version__
from .families import SCS, Dicke, Superposition, family_xstate
from .oracle import DEFAULT_GRID, DEFAULT_REFINE_TOL, tightness_scan
from .sweeps import (
    ALPHA_STEPS,
    ETA_STEPS,
    FAMILY_PARAMS,
    INT_PARAMS,
    LANDSCAPE_PHI,
    LANDSCAPE_THETA,
    alpha_grid,
    eta_grid,
    figure_tables,
    fmt,
    grid_values,
    landscape_table,
    make_point,
    sweep_table,
)
from .xstate import full_report

EXIT_USAGE = 2
EXIT_VERIFY = 3

REPORT_FIELDS = (
    "discord", "eof", "concurrence", "mutual_information", "classical_correlation",
    "joint_entropy", "reduced_entropy", "s0", "s1", "optimal_theta", "optimal_phi",
)


class UsageError(Exception):
    pass


def _family_parent() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("family", choices=sorted(FAMILY_PARAMS))
    p.add_argument("--N", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--alpha", type=float)
    p.add_argument("--delta", type=float, default=0.0)
    p.add_argument("--eta", type=float)
    p.add_argument("--parity", choices=("even", "odd"), help="SCS parity (default even; verify checks both)")
    p.add_argument("--grid-theta", type=int)
    p.add_argument("--grid-phi", type=int)
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xdiscord", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"xdiscord {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    fam = _family_parent()

    rep = sub.add_parser("report", parents=[fam], help="all measures for one state")
    rep.add_argument("--verify", action="store_true", help="run the brute-force minimizer too")

    sw = sub.add_parser("sweep", parents=[fam], help="CSV of measures along one parameter")
    sw.add_argument("--param", required=True)
    sw.add_argument("--start", type=float, required=True)
    sw.add_argument("--stop", type=float, required=True)
    sw.add_argument("--step", type=float, default=1.0)
    sw.add_argument("--out", required=True)
    sw.add_argument("--force", action="store_true")
    sw.add_argument("--jobs", type=int, default=1)

    ls = sub.add_parser("landscape", parents=[fam], help="min over phi of S(theta, phi) vs a family parameter")
    ls.add_argument("--steps", type=int, help="points of the secondary parameter grid")
    ls.add_argument("--out", required=True)
    ls.add_argument("--force", action="store_true")

    fg = sub.add_parser("figures", help="CSV data for the figures")
    fg.add_argument("figure", help="figure id 2..8 or 'all'")
    fg.add_argument("--out-dir", default=".")
    fg.add_argument("--force", action="store_true")
    fg.add_argument("--jobs", type=int, default=1)

    vf = sub.add_parser("verify", parents=[fam], help="check that S1 is the global minimum over a family grid")
    vf.add_argument("--N-max", type=int, default=12)
    vf.add_argument("--tol", type=float, default=1e-6)
    return parser


def _params(args, names) -> dict:
    out = {}
    for name in names:
        val = getattr(args, name)
        if val is None:
            raise UsageError(f"--{name} is required for family {args.family}")
        out[name] = val
    return out


def _point(args):
    names = FAMILY_PARAMS[args.family]
    params = _params(args, names)
    if args.family == "scs":
        params["parity"] = args.parity or "even"
    return make_point(args.family, **params)


def _grid(args, default=DEFAULT_GRID):
    return (args.grid_theta or default[0], args.grid_phi or default[1])


def _meta(args, extra=()) -> str:
    """Metadata line: command, family and the parameters that shape the output."""
    keys = list(FAMILY_PARAMS[args.family]) + (["parity"] if args.family == "scs" else []) + list(extra)
    vals = {k: getattr(args, k, None) for k in keys}
    if "parity" in vals:
        vals["parity"] = vals["parity"] or "even"
    items = [f"{k}={v}" for k, v in vals.items() if v is not None]
    return f"xdiscord {__version__} {args.command} family={args.family} " + " ".join(items)


def cmd_report(args, out) -> int:
    point = _point(args)
    rep = full_report(family_xstate(point), oracle_check=args.verify,
                      grid=_grid(args), refine_tol=DEFAULT_REFINE_TOL)
    for name in REPORT_FIELDS:
        print(f"{name}={fmt(getattr(rep, name))}", file=out)
    if args.verify:
        print(f"discord_numeric={fmt(rep.discord_numeric)}", file=out)
        print(f"argmin_theta={fmt(rep.argmin_theta)}", file=out)
        print(f"argmin_phi={fmt(rep.argmin_phi)}", file=out)
        print(f"tight={'true' if rep.upper_bound_tight else 'false'}", file=out)
    return 0


def cmd_sweep(args, out) -> int:
    if args.param not in FAMILY_PARAMS[args.family]:
        raise UsageError(f"family {args.family} has no parameter {args.param!r}; choose from {FAMILY_PARAMS[args.family]}")
    fixed_names = [n for n in FAMILY_PARAMS[args.family] if n != args.param and n != "delta"]
    fixed = _params(args, fixed_names)
    fixed["delta"] = args.delta
    if args.family == "scs":
        fixed["parity"] = args.parity or "even"
    values = grid_values(args.start, args.stop, args.step, integer=args.param in INT_PARAMS)
    table = sweep_table(args.family, args.param, values, fixed, jobs=args.jobs,
                        meta=_meta(args, ("param", "start", "stop", "step")))
    table.write(args.out, force=args.force)
    print(f"wrote {len(table.rows)} rows to {args.out}", file=out)
    return 0


def cmd_landscape(args, out) -> int:
    if args.family == "dicke":
        N = _params(args, ["N"])["N"]
        pts = [(n, Dicke(N, n)) for n in range(N + 1)]
        param = "n"
    elif args.family == "superposition":
        p = _params(args, ["N", "n"])
        steps = args.steps or ALPHA_STEPS
        pts = [(a, Superposition(p["N"], p["n"], a, args.delta)) for a in alpha_grid(steps)]
        param = "alpha"
    else:
        N = _params(args, ["N"])["N"]
        steps = args.steps or ETA_STEPS
        pts = [(e, SCS(N, e, args.parity or "even")) for e in eta_grid(steps)]
        param = "eta"
    table = landscape_table(pts, args.grid_theta or LANDSCAPE_THETA, args.grid_phi or LANDSCAPE_PHI,
                            param=param, meta=_meta(args, ("steps", "grid_theta", "grid_phi")))
    table.write(args.out, force=args.force)
    print(f"wrote {len(table.rows)} rows to {args.out}", file=out)
    return 0


def cmd_figures(args, out) -> int:
    if args.figure == "all":
        ids = list(range(2, 9))
    else:
        try:
            ids = [int(args.figure)]
        except ValueError:
            raise UsageError(f"unknown figure id {args.figure!r}; choose 2..8 or 'all'") from None
        if not 2 <= ids[0] <= 8:
            raise UsageError(f"unknown figure id {ids[0]}; choose 2..8 or 'all'")
    os.makedirs(args.out_dir, exist_ok=True)
    for fig in ids:
        for table in figure_tables(fig, jobs=args.jobs):
            path = os.path.join(args.out_dir, f"{table.name}.csv")
            table.write(path, force=args.force)
            print(f"wrote {path}", file=out)
    return 0


def verify_points(family: str, N_max: int, parity: str | None = None):
    """Default family grids for the tightness scan."""
    if family == "dicke":
        for N in range(2, N_max + 1):
            for n in range(N + 1):
                yield Dicke(N, n)
    elif family == "superposition":
        alphas = [k * math.pi / 16 for k in range(17)]
        for N in range(3, N_max + 1):
            for n in range(N - 1):
                for a in alphas:
                    yield Superposition(N, n, a, 0.0)
    else:
        parities = [parity] if parity else ["even", "odd"]
        for N in range(3, N_max + 1):
            for e in eta_grid(21):
                for par in parities:
                    yield SCS(N, float(e), par)


def cmd_verify(args, out) -> int:
    pts = [(repr(p), family_xstate(p)) for p in verify_points(args.family, args.N_max, args.parity)]
    report = tightness_scan(pts, grid=_grid(args, (181, 360)), tol=args.tol)
    print(f"checked={report.checked} violations={len(report.violations)}", file=out)
    for v in report.violations:
        print(f"VIOLATION {v.label} s0={fmt(v.s0)} s1={fmt(v.s1)} numeric_min={fmt(v.numeric_min)} "
              f"gap={fmt(v.gap)} state={v.state}", file=out)
    return 0 if report.ok else EXIT_VERIFY


COMMANDS = {
    "report": cmd_report,
    "sweep": cmd_sweep,
    "landscape": cmd_landscape,
    "figures": cmd_figures,
    "verify": cmd_verify,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, ValueError, FileExistsError) as exc:
        print(f"xdiscord: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
