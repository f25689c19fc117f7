"""Symmetric two-qubit X states and their correlation measures.

The state has the form::

    | v+   0   0   u* |
    |  0   y   y   0  |
    |  0   y   y   0  |
    |  u   0   0   v- |

in the basis {|00>, |01>, |10>, |11>}.  All entropies are in bits.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

TOL = 1e-12
# below this a measurement branch is treated as never occurring
BRANCH_EPS = 1e-15


def _clamp_unit(x: float, name: str = "x") -> float:
    if x < -TOL or x > 1.0 + TOL or math.isnan(x):
        raise ValueError(f"{name}={x!r} outside [0, 1]")
    return min(max(x, 0.0), 1.0)


def h(x: float) -> float:
    """Single term -x log2 x with 0 log 0 = 0."""
    if x <= 0.0:
        return 0.0
    return -x * math.log2(x)


def binary_entropy(x: float) -> float:
    """Binary Shannon entropy H(x) = h(x) + h(1 - x) in bits.

    Inputs within 1e-12 of [0, 1] are clamped; anything further out
    raises ``ValueError``.
    """
    x = _clamp_unit(x)
    return h(x) + h(1.0 - x)


def _branch_entropy(kappa: float) -> float:
    # H((1 + kappa)/2) computed from both eigenvalues to keep the small one exact
    kappa = min(max(kappa, 0.0), 1.0)
    return h(0.5 * (1.0 + kappa)) + h(0.5 * (1.0 - kappa))


@dataclass(frozen=True)
class XState:
    """Exchange- and parity-symmetric two-qubit X state."""

    v_plus: float
    v_minus: float
    y: float
    u: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "v_plus", float(self.v_plus))
        object.__setattr__(self, "v_minus", float(self.v_minus))
        object.__setattr__(self, "y", float(self.y))
        object.__setattr__(self, "u", complex(self.u))
        for name in ("v_plus", "v_minus", "y"):
            val = getattr(self, name)
            if not math.isfinite(val) or val < -TOL:
                raise ValueError(f"{name}={val!r} must be nonnegative")
            if val < 0.0:
                object.__setattr__(self, name, 0.0)
        trace = self.v_plus + self.v_minus + 2.0 * self.y
        if abs(trace - 1.0) > TOL:
            raise ValueError(f"trace v+ + v- + 2y = {trace!r} != 1")
        if abs(self.u) ** 2 > self.v_plus * self.v_minus + TOL:
            raise ValueError(
                f"|u|^2 = {abs(self.u) ** 2!r} exceeds v+ v- = "
                f"{self.v_plus * self.v_minus!r}; state is not positive"
            )

    @property
    def abs_u(self) -> float:
        return abs(self.u)

    def with_phase(self, chi: float) -> "XState":
        """Same state with ``u`` rotated by ``exp(i chi)``."""
        return XState(self.v_plus, self.v_minus, self.y, self.u * cmath.exp(1j * chi))

    def matrix(self) -> np.ndarray:
        """The 4x4 density matrix."""
        vp, vm, y, u = self.v_plus, self.v_minus, self.y, self.u
        return np.array(
            [
                [vp, 0, 0, u.conjugate()],
                [0, y, y, 0],
                [0, y, y, 0],
                [u, 0, 0, vm],
            ],
            dtype=complex,
        )


@dataclass(frozen=True)
class MeasurementAngles:
    """Bloch angles of the projective measurement axis on qubit B."""

    theta: float
    phi: float

    def __post_init__(self):
        if not (-TOL <= self.theta <= math.pi + TOL):
            raise ValueError(f"theta={self.theta!r} outside [0, pi]")
        if not (-TOL <= self.phi < 2.0 * math.pi + TOL):
            raise ValueError(f"phi={self.phi!r} outside [0, 2pi)")


@dataclass(frozen=True)
class ConditionalOutcome:
    probability: float
    state: np.ndarray
    kappa: float


@dataclass
class CorrelationReport:
    """All correlation measures of one X state.

    ``upper_bound_tight`` is ``None`` unless the brute-force minimizer was
    run, in which case it records whether S1 is the global minimum of the
    conditional entropy.  ``discord_numeric`` and the ``argmin_*`` fields
    are likewise only filled by an oracle check.
    """

    discord: float
    eof: float
    concurrence: float
    mutual_information: float
    classical_correlation: float
    joint_entropy: float
    reduced_entropy: float
    s0: float
    s1: float
    optimal_theta: float
    optimal_phi: float
    upper_bound_tight: Optional[bool] = None
    discord_numeric: Optional[float] = None
    argmin_theta: Optional[float] = None
    argmin_phi: Optional[float] = None

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def xstate_spectrum(s: XState) -> tuple[float, float, float]:
    """Eigenvalues (lambda0, lambda+, lambda-) of the X state."""
    root = math.sqrt((s.v_plus - s.v_minus) ** 2 + 4.0 * s.abs_u**2)
    lam0 = 2.0 * s.y
    lam_p = 0.5 * (s.v_plus + s.v_minus + root)
    lam_m = 0.5 * (s.v_plus + s.v_minus - root)
    return max(lam0, 0.0), max(lam_p, 0.0), max(lam_m, 0.0)


def joint_entropy(s: XState) -> float:
    return sum(h(lam) for lam in xstate_spectrum(s))


def reduced_entropy(s: XState) -> float:
    """Entropy of either single-qubit marginal, H(v+ + y)."""
    return binary_entropy(s.v_plus + s.y)


def mutual_information(s: XState) -> float:
    return max(2.0 * reduced_entropy(s) - joint_entropy(s), 0.0)


def conditional_outcome(s: XState, angles: MeasurementAngles, sign: int = +1) -> ConditionalOutcome:
    """State of qubit A after outcome ``sign`` of the measurement on B.

    The measurement is Pi = (I + sign * n.sigma)/2 with n along ``angles``.
    ``kappa`` is the eigenvalue gap of the normalized conditional state,
    obtained by diagonalizing it.
    """
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    c, sn = math.cos(angles.theta), math.sin(angles.theta)
    eip = cmath.exp(1j * angles.phi)
    vp, vm, y, u = s.v_plus, s.v_minus, s.y, s.u
    a = 0.5 * ((vp + y) + sign * (vp - y) * c)
    d = 0.5 * ((vm + y) - sign * (vm - y) * c)
    b = 0.5 * sign * (y / eip + u.conjugate() * eip) * sn
    p = a + d
    if p < BRANCH_EPS:
        return ConditionalOutcome(0.0, 0.5 * np.eye(2, dtype=complex), 0.0)
    rho = np.array([[a, b], [b.conjugate(), d]], dtype=complex) / p
    w = np.linalg.eigvalsh(rho)
    kappa = min(max(float(w[1] - w[0]), 0.0), 1.0)
    return ConditionalOutcome(min(p, 1.0), rho, kappa)


def conditional_entropy(s: XState, angles: MeasurementAngles) -> float:
    """Measurement-averaged entropy of qubit A given a projective measurement on B."""
    total = 0.0
    for sign in (+1, -1):
        out = conditional_outcome(s, angles, sign)
        if out.probability > 0.0:
            total += out.probability * _branch_entropy(out.kappa)
    return total


def optimal_phi(s: XState) -> float:
    """Azimuth minimizing the conditional entropy at every theta, arg(u)/2."""
    if s.abs_u < BRANCH_EPS:
        return 0.0
    return 0.5 * (cmath.phase(s.u) % (2.0 * math.pi))


def kappa_tilde(s: XState, theta: float) -> float:
    """Conditional-state gap of the + outcome at the optimal azimuth.

    Closed form used as a check on the diagonalization path.
    """
    c, sn = math.cos(theta), math.sin(theta)
    p = 0.5 * (1.0 + (s.v_plus - s.v_minus) * c)
    if p < BRANCH_EPS:
        return 0.0
    au = s.abs_u
    k2 = 0.25 * ((s.v_plus - s.v_minus) + (1.0 - 4.0 * s.y) * c) ** 2
    k2 += (au * au + s.y * s.y + 2.0 * s.y * au) * sn * sn
    return min(math.sqrt(max(k2, 0.0)) / p, 1.0)


def s0_s1(s: XState) -> tuple[float, float]:
    """Conditional entropy at theta = 0 and theta = pi/2 (optimal azimuth)."""
    s0 = 0.0
    for v in (s.v_plus, s.v_minus):
        w = v + s.y
        if w > BRANCH_EPS:
            s0 += w * _branch_entropy(abs(v - s.y) / w)
    kappa1 = math.sqrt((s.v_plus - s.v_minus) ** 2 + 4.0 * (s.y + s.abs_u) ** 2)
    s1 = _branch_entropy(min(kappa1, 1.0))
    return s0, s1


@dataclass(frozen=True)
class CompactDiscord:
    discord: float
    s0: float
    s1: float
    upper_bound_tight: Optional[bool] = None

    @property
    def min_s(self) -> float:
        return min(self.s0, self.s1)


def discord_compact(s: XState) -> CompactDiscord:
    """Discord with the conditional entropy taken at theta = pi/2.

    Exact for the Dicke, Dicke-superposition and spin-coherent families;
    for a general symmetric X state it is only an upper bound, so compare
    against :func:`xdiscord.oracle.discord_numeric` when in doubt.
    """
    s0, s1 = s0_s1(s)
    d = reduced_entropy(s) - joint_entropy(s) + s1
    return CompactDiscord(max(d, 0.0), s0, s1)


def concurrence_closed(s: XState) -> float:
    return 2.0 * max(0.0, s.abs_u - s.y, s.y - math.sqrt(s.v_plus * s.v_minus))


def eof_from_concurrence(c: float) -> float:
    c = _clamp_unit(c, "concurrence")
    return _branch_entropy(math.sqrt(1.0 - c * c))


def full_report(s: XState, oracle_check: bool = False, **oracle_kw) -> CorrelationReport:
    """Assemble every measure for ``s``.

    With ``oracle_check`` the brute-force minimizer is run (keyword
    arguments are forwarded to it) and the tightness flag is filled in.
    """
    joint = joint_entropy(s)
    red = reduced_entropy(s)
    comp = discord_compact(s)
    conc = concurrence_closed(s)
    mi = mutual_information(s)
    report = CorrelationReport(
        discord=comp.discord,
        eof=eof_from_concurrence(min(conc, 1.0)),
        concurrence=conc,
        mutual_information=mi,
        classical_correlation=mi - comp.discord,
        joint_entropy=joint,
        reduced_entropy=red,
        s0=comp.s0,
        s1=comp.s1,
        optimal_theta=math.pi / 2,
        optimal_phi=optimal_phi(s),
    )
    if oracle_check:
        from .oracle import discord_numeric

        num = discord_numeric(s, **oracle_kw)
        report.discord_numeric = num.discord
        report.argmin_theta = num.argmin.theta
        report.argmin_phi = num.argmin.phi
        report.upper_bound_tight = abs(comp.s1 - num.min_conditional_entropy) <= 1e-6
    return report
