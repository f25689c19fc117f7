"""Brute-force validators that do not rely on the closed-form results.

``discord_numeric`` minimizes the conditional entropy over every
projective measurement axis by exhaustive grid search plus golden-section
refinement.  ``concurrence_rmatrix`` evaluates Wootters' concurrence from
the spin-flipped matrix rather than the X-state shortcut.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence, Union

import numpy as np

from . import kernels
from .xstate import MeasurementAngles, XState, joint_entropy, reduced_entropy, s0_s1

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

DEFAULT_GRID = (721, 1440)
DEFAULT_REFINE_TOL = 1e-10

SIGMA_YY = np.array(
    [[0, 0, 0, -1], [0, 0, 1, 0], [0, 1, 0, 0], [-1, 0, 0, 0]], dtype=complex
)


def golden_section_minimize(f: Callable[[float], float], a: float, b: float, tol: float = 1e-10):
    """Golden-section search for a minimum of ``f`` on ``[a, b]``.

    Returns ``(x, f(x))`` for the best point evaluated, so the result is
    never worse than either bracketing probe.
    """
    a, b = min(a, b), max(a, b)
    c = b - INV_PHI * (b - a)
    d = a + INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + INV_PHI * (b - a)
            fd = f(d)
    return (c, fc) if fc <= fd else (d, fd)


@dataclass(frozen=True)
class NumericDiscord:
    discord: float
    argmin: MeasurementAngles
    min_conditional_entropy: float
    grid_minimum: float


def _args(s: XState):
    return s.v_plus, s.v_minus, s.y, s.u.real, s.u.imag


def theta_grid(n_theta: int) -> np.ndarray:
    return np.linspace(0.0, math.pi, n_theta)


def phi_grid(n_phi: int) -> np.ndarray:
    return np.linspace(0.0, 2.0 * math.pi, n_phi, endpoint=False)


def conditional_entropy_landscape(s: XState, n_theta: int, n_phi: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Grid of S(theta, phi); returns ``(thetas, phis, values)``."""
    th, ph = theta_grid(n_theta), phi_grid(n_phi)
    return th, ph, kernels.conditional_entropy_grid(*_args(s), th, ph)


def discord_numeric(
    s: XState,
    grid: tuple[int, int] = DEFAULT_GRID,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> NumericDiscord:
    """Discord from an exhaustive search over measurement axes on qubit B.

    The conditional entropy is tabulated on ``grid = (n_theta, n_phi)``
    over [0, pi] x [0, 2pi); the best cell is refined by golden-section
    search in theta and then phi, twice.
    """
    n_theta, n_phi = grid
    if n_theta < 181 or n_phi < 360:
        raise ValueError(f"grid {grid} too coarse; need n_theta >= 181 and n_phi >= 360")
    if refine_tol <= 0:
        raise ValueError("refine_tol must be positive")
    args = _args(s)
    th, ph, vals = conditional_entropy_landscape(s, n_theta, n_phi)
    i, j = np.unravel_index(int(np.argmin(vals)), vals.shape)
    grid_min = float(vals[i, j])
    dth, dph = th[1] - th[0], ph[1] - ph[0]
    t_lo, t_hi = max(th[i] - dth, 0.0), min(th[i] + dth, math.pi)
    p_lo, p_hi = ph[j] - dph, ph[j] + dph

    point = kernels.conditional_entropy_point
    theta, phi, best = float(th[i]), float(ph[j]), grid_min
    for _ in range(2):
        t, ft = golden_section_minimize(lambda x: point(*args, x, phi), t_lo, t_hi, refine_tol)
        if ft < best:
            theta, best = t, ft
        p, fp = golden_section_minimize(lambda x: point(*args, theta, x), p_lo, p_hi, refine_tol)
        if fp < best:
            phi, best = p, fp

    theta = min(max(theta, 0.0), math.pi)
    phi = phi % (2.0 * math.pi)
    discord = reduced_entropy(s) - joint_entropy(s) + best
    return NumericDiscord(max(discord, 0.0), MeasurementAngles(theta, phi), best, grid_min)


def rmatrix(s: XState) -> np.ndarray:
    """R = rho (sy x sy) rho* (sy x sy) as a full 4x4 matrix."""
    rho = s.matrix()
    return rho @ SIGMA_YY @ rho.conj() @ SIGMA_YY


def _psd_sqrt_2x2(m: np.ndarray) -> np.ndarray:
    # sqrt(M) = (M + sqrt(det M) I) / sqrt(tr M + 2 sqrt(det M)) for 2x2 PSD M
    det = max(float(np.linalg.det(m).real), 0.0)
    sd = math.sqrt(det)
    norm = float(np.trace(m).real) + 2.0 * sd
    if norm <= 0.0:
        return np.zeros((2, 2), dtype=complex)
    return (m + sd * np.eye(2)) / math.sqrt(norm)


def rmatrix_sqrt_eigenvalues(s: XState) -> np.ndarray:
    """Square roots of the eigenvalues of R, largest first.

    R splits into the {|00>,|11>} and {|01>,|10>} blocks.  For each block
    the roots are the singular values of sqrt(rho_b) sqrt(rho_b~), which
    avoids taking square roots of rounding noise near zero eigenvalues.
    """
    rho = s.matrix()
    out = []
    for idx in ((0, 3), (1, 2)):
        blk = rho[np.ix_(idx, idx)]
        flip = SIGMA_YY[np.ix_(idx, idx)]
        tilde = flip @ blk.conj() @ flip
        prod = _psd_sqrt_2x2(blk) @ _psd_sqrt_2x2(tilde)
        out.extend(np.linalg.svd(prod, compute_uv=False))
    return np.sort(np.asarray(out, dtype=float))[::-1]


def concurrence_rmatrix(s: XState) -> float:
    r = rmatrix_sqrt_eigenvalues(s)
    return max(0.0, float(r[0] - r[1] - r[2] - r[3]))


@dataclass(frozen=True)
class TightnessViolation:
    label: str
    state: XState
    s0: float
    s1: float
    numeric_min: float
    argmin: MeasurementAngles

    @property
    def gap(self) -> float:
        return min(self.s0, self.s1) - self.numeric_min


@dataclass
class TightnessReport:
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


StateLike = Union[XState, tuple]


def tightness_scan(
    states: Iterable[StateLike],
    grid: tuple[int, int] = DEFAULT_GRID,
    tol: float = 1e-6,
    refine_tol: float = DEFAULT_REFINE_TOL,
) -> TightnessReport:
    """Flag every state whose min{S0, S1} exceeds the numeric minimum by > tol.

    ``states`` holds XStates or ``(label, XState)`` pairs.
    """
    report = TightnessReport()
    for k, item in enumerate(states):
        label, st = item if isinstance(item, tuple) else (f"state[{k}]", item)
        s0, s1 = s0_s1(st)
        num = discord_numeric(st, grid, refine_tol)
        report.checked += 1
        if min(s0, s1) - num.min_conditional_entropy > tol:
            report.violations.append(
                TightnessViolation(label, st, s0, s1, num.min_conditional_entropy, num.argmin)
            )
    return report


def random_xstates(rng: np.random.Generator, count: int) -> Sequence[XState]:
    """Random valid X states covering the whole parameter region.

    (v+, v-, 2y) is uniform on the simplex, |u| uniform in [0, sqrt(v+ v-)]
    and arg(u) uniform.
    """
    w = rng.dirichlet(np.ones(3), size=count)
    mag = rng.uniform(0.0, 1.0, size=count)
    phase = rng.uniform(0.0, 2.0 * math.pi, size=count)
    states = []
    for (vp, vm, twoy), m, ph in zip(w, mag, phase):
        vm = 1.0 - vp - twoy  # exact trace
        u = m * math.sqrt(vp * vm) * complex(math.cos(ph), math.sin(ph))
        states.append(XState(vp, vm, 0.5 * twoy, u))
    return states
