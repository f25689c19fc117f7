"""Parameter sweeps, landscapes and figure data as CSV tables."""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from . import __version__
from .families import SCS, Dicke, FamilyPoint, Superposition, family_xstate
from .oracle import golden_section_minimize, theta_grid, phi_grid
from . import kernels
from .xstate import XState, full_report

MEASURE_COLUMNS = ("discord", "eof", "concurrence", "mutual_information", "classical_correlation")

ALPHA_STEPS = 181
ETA_STEPS = 101
LANDSCAPE_THETA = 181
LANDSCAPE_PHI = 360
ETA_MAX_TOL = 1e-9

FAMILY_PARAMS = {
    "dicke": ("N", "n"),
    "superposition": ("N", "n", "alpha", "delta"),
    "scs": ("N", "eta"),
}
INT_PARAMS = {"N", "n"}


def fmt(x) -> str:
    """12 significant digits, '.' separator, no negative zero."""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if x == 0.0:
        return "0"
    return f"{x:.12g}"


@dataclass
class Table:
    name: str
    meta: str
    columns: Sequence[str]
    rows: list = field(default_factory=list)

    def to_csv(self) -> str:
        lines = [f"# {self.meta}", ",".join(self.columns)]
        lines += [",".join(fmt(v) for v in row) for row in self.rows]
        return "\n".join(lines) + "\n"

    def write(self, path, force: bool = False) -> None:
        if os.path.exists(path) and not force:
            raise FileExistsError(f"{path} exists; pass --force to overwrite")
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(self.to_csv())


def make_point(family: str, **params) -> FamilyPoint:
    if family == "dicke":
        return Dicke(int(params["N"]), int(params["n"]))
    if family == "superposition":
        return Superposition(int(params["N"]), int(params["n"]), float(params["alpha"]), float(params.get("delta", 0.0)))
    if family == "scs":
        return SCS(int(params["N"]), float(params["eta"]), params.get("parity", "even"))
    raise ValueError(f"unknown family {family!r}")


def measures(p: FamilyPoint) -> tuple:
    r = full_report(family_xstate(p))
    return tuple(getattr(r, c) for c in MEASURE_COLUMNS)


def _map(fn, items, jobs: int):
    items = list(items)
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            # map preserves input order
            return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))
    return [fn(x) for x in items]


def grid_values(start: float, stop: float, step: float, integer: bool = False) -> list:
    if step <= 0 or stop < start:
        raise ValueError(f"bad range start={start} stop={stop} step={step}")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    vals = [start + k * step for k in range(count)]
    if integer:
        return [int(round(v)) for v in vals]
    return vals


def sweep_table(family: str, param: str, values: Iterable, fixed: dict, jobs: int = 1,
                name: str = "sweep", meta: str = "") -> Table:
    """One row of correlation measures per value of ``param``."""
    if param not in FAMILY_PARAMS[family]:
        raise ValueError(f"{family} has no parameter {param!r}; choose from {FAMILY_PARAMS[family]}")
    values = sorted(values)
    points = [make_point(family, **{**fixed, param: v}) for v in values]
    rows = [(v, *m) for v, m in zip(values, _map(measures, points, jobs))]
    return Table(name, meta, (param, *MEASURE_COLUMNS), rows)


def min_phi_landscape(s: XState, thetas, n_phi: int = LANDSCAPE_PHI) -> np.ndarray:
    """min over a phi grid of the conditional entropy, for each theta."""
    vals = kernels.conditional_entropy_grid(s.v_plus, s.v_minus, s.y, s.u.real, s.u.imag,
                                            thetas, phi_grid(n_phi))
    return vals.min(axis=1)


def landscape_table(points: Sequence[tuple], n_theta: int = LANDSCAPE_THETA, n_phi: int = LANDSCAPE_PHI,
                    param: str = "param", name: str = "landscape", meta: str = "") -> Table:
    """Long-format (param, theta, conditional_entropy) table.

    ``points`` holds ``(param_value, FamilyPoint or XState)`` pairs.
    """
    th = theta_grid(n_theta)
    rows = []
    for value, p in points:
        s = p if isinstance(p, XState) else family_xstate(p)
        for t, v in zip(th, min_phi_landscape(s, th, n_phi)):
            rows.append((value, t, v))
    return Table(name, meta, (param, "theta", "conditional_entropy"), rows)


def alpha_grid(steps: int = ALPHA_STEPS) -> np.ndarray:
    return np.linspace(0.0, math.pi, steps, endpoint=False)


def eta_grid(steps: int = ETA_STEPS) -> np.ndarray:
    return np.linspace(0.0, 1.0, steps)


def scs_discord(N: int, eta: float, parity: str) -> float:
    return full_report(family_xstate(SCS(N, eta, parity))).discord


def max_discord_over_eta(N: int, parity: str, steps: int = ETA_STEPS, tol: float = ETA_MAX_TOL) -> tuple[float, float]:
    """(max discord, argmax eta) over eta in [0, 1]: grid then golden section."""
    etas = eta_grid(steps)
    vals = [scs_discord(N, e, parity) for e in etas]
    k = int(np.argmax(vals))
    lo, hi = etas[max(k - 1, 0)], etas[min(k + 1, len(etas) - 1)]
    e, neg = golden_section_minimize(lambda x: -scs_discord(N, x, parity), lo, hi, tol)
    if -neg > vals[k]:
        return -neg, e
    return vals[k], float(etas[k])


# -- figure data ----------------------------------------------------------

FIG6_PANELS = {"a": (4, 0), "b": (4, 1), "c": (20, 5), "d": (20, 9)}
FIG7_PANELS = {"a": 3, "b": 5, "c": 10, "d": 50}
FIG4_NMAX = 50
FIG8_NMAX = 50


def _meta(fig: int, panel: str, **params) -> str:
    desc = " ".join(f"{k}={v}" for k, v in params.items())
    return f"xdiscord {__version__} figure={fig} panel={panel} {desc}".rstrip()


def figure_tables(fig: int, jobs: int = 1) -> list[Table]:
    """Tables for one figure, one per panel."""
    if fig == 2:
        N = 100
        pts = [(n, Dicke(N, n)) for n in range(N + 1)]
        return [landscape_table(pts, param="n", name="fig2_landscape",
                                meta=_meta(2, "landscape", family="dicke", N=N, n="0..100",
                                           grid_theta=LANDSCAPE_THETA, grid_phi=LANDSCAPE_PHI))]
    if fig == 3:
        return [sweep_table("dicke", "n", range(1, N), {"N": N}, jobs, name=f"fig3_N{N}",
                            meta=_meta(3, f"N{N}", family="dicke", N=N, n=f"1..{N - 1}"))
                for N in (9, 12)]
    if fig == 4:
        out = []
        for n in (1, 3):
            lo = max(3, n + 1)
            out.append(sweep_table("dicke", "N", range(lo, FIG4_NMAX + 1), {"n": n}, jobs, name=f"fig4_n{n}",
                                   meta=_meta(4, f"n{n}", family="dicke", n=n, N=f"{lo}..{FIG4_NMAX}")))
        return out
    if fig == 5:
        N, n = 50, 30
        pts = [(a, Superposition(N, n, a, 0.0)) for a in alpha_grid()]
        return [landscape_table(pts, param="alpha", name="fig5_landscape",
                                meta=_meta(5, "landscape", family="superposition", N=N, n=n, delta=0,
                                           alpha_steps=ALPHA_STEPS, grid_theta=LANDSCAPE_THETA,
                                           grid_phi=LANDSCAPE_PHI))]
    if fig == 6:
        return [sweep_table("superposition", "alpha", list(alpha_grid()), {"N": N, "n": n, "delta": 0.0}, jobs,
                            name=f"fig6_{panel}",
                            meta=_meta(6, panel, family="superposition", N=N, n=n, delta=0,
                                       alpha_steps=ALPHA_STEPS))
                for panel, (N, n) in FIG6_PANELS.items()]
    if fig == 7:
        out = []
        for panel, N in FIG7_PANELS.items():
            etas = list(eta_grid())
            even = _map(measures, [SCS(N, e, "even") for e in etas], jobs)
            odd = _map(measures, [SCS(N, e, "odd") for e in etas], jobs)
            rows = [(e, ev[0], od[0], ev[1], od[1]) for e, ev, od in zip(etas, even, odd)]
            out.append(Table(f"fig7_{panel}", _meta(7, panel, family="scs", N=N, eta_steps=ETA_STEPS),
                             ("eta", "discord_even", "discord_odd", "eof_even", "eof_odd"), rows))
        return out
    if fig == 8:
        Ns = list(range(3, FIG8_NMAX + 1))
        even = _map(_max_even, Ns, jobs)
        odd = _map(_max_odd, Ns, jobs)
        rows = [(N, de, ee, do, eo) for N, (de, ee), (do, eo) in zip(Ns, even, odd)]
        return [Table("fig8_max", _meta(8, "max", family="scs", N=f"3..{FIG8_NMAX}", eta_steps=ETA_STEPS,
                                        eta_tol=ETA_MAX_TOL),
                      ("N", "max_discord_even", "eta_even", "max_discord_odd", "eta_odd"), rows)]
    raise ValueError(f"unknown figure id {fig}; choose 2..8")


def _max_even(N):
    return max_discord_over_eta(N, "even")


def _max_odd(N):
    return max_discord_over_eta(N, "odd")
