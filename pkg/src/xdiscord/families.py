"""Two-qubit reductions of symmetric N-qubit states.

Every family goes through its collective-spin expectations <Jz>, <Jz^2>
and <J+^2>, which fix the reduced X state.  ``expectation_oracle``
computes the same expectations from an explicit coefficient vector over
the Dicke basis and serves as an independent check of the closed forms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .xstate import TOL, XState, binary_entropy

# odd SCS expectations switch to the coefficient vector below this eta
ODD_SCS_SMALL_ETA = 1e-4


@dataclass(frozen=True)
class CollectiveExpectations:
    N: int
    jz: float
    jz2: float
    jplus2: complex = 0j

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 2:
            raise ValueError(f"N={self.N!r} must be an integer >= 2")
        half = self.N / 2
        slack = 1e-9 * max(1.0, half * half)
        if abs(self.jz) > half + slack:
            raise ValueError(f"|<Jz>|={abs(self.jz)!r} exceeds N/2={half}")
        if not (self.jz**2 - slack <= self.jz2 <= half * half + slack):
            raise ValueError(f"<Jz^2>={self.jz2!r} outside [<Jz>^2, N^2/4]")


@dataclass(frozen=True)
class SymmetricState:
    """Pure symmetric state as amplitudes c_0..c_N over Dicke states |n>_N."""

    N: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.shape != (self.N + 1,):
            raise ValueError(f"expected {self.N + 1} coefficients, got shape {c.shape}")
        norm = float(np.vdot(c, c).real)
        if abs(norm - 1.0) > TOL:
            raise ValueError(f"coefficients not normalized (sum |c|^2 = {norm!r})")
        object.__setattr__(self, "coeffs", c)


# -- family points ---------------------------------------------------------


@dataclass(frozen=True)
class Dicke:
    N: int
    n: int

    def __post_init__(self):
        _check_N(self.N)
        if not 0 <= self.n <= self.N:
            raise ValueError(f"n={self.n} outside [0, N={self.N}]")


@dataclass(frozen=True)
class Superposition:
    """cos(alpha)|n>_N + exp(i delta) sin(alpha)|n+2>_N."""

    N: int
    n: int
    alpha: float
    delta: float = 0.0

    def __post_init__(self):
        _check_N(self.N)
        if not 0 <= self.n <= self.N - 2:
            raise ValueError(f"n={self.n} outside [0, N-2={self.N - 2}]")
        if not math.isfinite(self.alpha) or not math.isfinite(self.delta):
            raise ValueError("alpha and delta must be finite")


@dataclass(frozen=True)
class SCS:
    """Even (parity='even') or odd (parity='odd') spin coherent state."""

    N: int
    eta: float
    parity: str = "even"

    def __post_init__(self):
        _check_N(self.N)
        if not 0.0 <= self.eta <= 1.0:
            raise ValueError(f"eta={self.eta!r} outside [0, 1]")
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity={self.parity!r} must be 'even' or 'odd'")


FamilyPoint = Union[Dicke, Superposition, SCS]


def _check_N(N):
    if int(N) != N or N < 2:
        raise ValueError(f"N={N!r} must be an integer >= 2")


# -- expectations ----------------------------------------------------------


def expectations_to_xstate(e: CollectiveExpectations) -> XState:
    N = e.N
    den = 4.0 * N * (N - 1)
    common = N * N - 2 * N + 4.0 * e.jz2
    v_plus = (common + 4.0 * e.jz * (N - 1)) / den
    v_minus = (common - 4.0 * e.jz * (N - 1)) / den
    y = (N * N - 4.0 * e.jz2) / den
    u = complex(e.jplus2) / (N * (N - 1))
    return XState(v_plus, v_minus, y, u)


def dicke_expectations(N: int, n: int) -> CollectiveExpectations:
    Dicke(N, n)
    m = n - N / 2
    return CollectiveExpectations(N, m, m * m, 0j)


def dicke_xstate(N: int, n: int) -> XState:
    Dicke(N, n)
    den = N * (N - 1)
    return XState(n * (n - 1) / den, (N - n) * (N - n - 1) / den, n * (N - n) / den, 0j)


def superposition_expectations(N: int, n: int, alpha: float, delta: float = 0.0) -> CollectiveExpectations:
    Superposition(N, n, alpha, delta)
    c2, s2 = math.cos(alpha) ** 2, math.sin(alpha) ** 2
    m0, m2 = n - N / 2, n + 2 - N / 2
    mu = (n + 1) * (n + 2) * (N - n) * (N - n - 1)
    # <psi|J+^2|psi> = conj(c_{n+2}) c_n sqrt(mu), hence exp(-i delta)
    jp2 = 0.5 * complex(math.cos(delta), -math.sin(delta)) * math.sin(2 * alpha) * math.sqrt(mu)
    return CollectiveExpectations(N, m0 * c2 + m2 * s2, m0 * m0 * c2 + m2 * m2 * s2, jp2)


def _log_binom(N: int, n) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    return math.lgamma(N + 1) - np.vectorize(math.lgamma)(n + 1) - np.vectorize(math.lgamma)(N - n + 1)


def scs_coefficients(N: int, eta: float, parity: str) -> SymmetricState:
    """Dicke-basis amplitudes of the even/odd spin coherent state.

    Amplitudes are built in log space, so N in the hundreds is fine.
    """
    SCS(N, eta, parity)
    keep = 0 if parity == "even" else 1
    n = np.arange(N + 1)
    c = np.zeros(N + 1)
    if eta == 0.0:
        if parity == "odd":
            raise ValueError("odd SCS at eta=0 is defined only as a limit; use Dicke(N, 1)")
        c[0] = 1.0
        return SymmetricState(N, c)
    idx = n[n % 2 == keep]
    logc = 0.5 * _log_binom(N, idx) + idx * math.log(eta)
    c[idx] = np.exp(logc - logc.max())
    return SymmetricState(N, c / np.linalg.norm(c))


def scs_norm_factor(N: int, eta: float, parity: str) -> float:
    """1/sqrt(2(1 +- gamma^N)) prefactor of (|eta> +- |-eta>)."""
    g = (1 - eta * eta) / (1 + eta * eta)
    sgn = 1.0 if parity == "even" else -1.0
    return 1.0 / math.sqrt(2.0 * (1.0 + sgn * g**N))


def scs_expectations(N: int, eta: float, parity: str) -> CollectiveExpectations:
    SCS(N, eta, parity)
    if parity == "odd":
        if eta == 0.0:
            return dicke_expectations(N, 1)
        if eta < ODD_SCS_SMALL_ETA:
            return expectation_oracle(scs_coefficients(N, eta, parity))
    sgn = 1.0 if parity == "even" else -1.0
    e2 = eta * eta
    g = (1 - e2) / (1 + e2)
    lead = 1.0 / (1 + e2) ** 2
    # gamma^N (1 - eta^2)^-2 = gamma^(N-2) (1 + eta^2)^-2, so
    # upsilon^+- = (gamma^(N-2) +- 1) (1 + eta^2)^-2
    ups = {+1.0: _pow_pm1(g, e2, N - 2, +1.0) * lead, -1.0: _pow_pm1(g, e2, N - 2, -1.0) * lead}
    norm = _pow_pm1(g, e2, N, sgn) * sgn  # 1 +- gamma^N
    # gamma +- gamma^(N-1) = gamma (1 +- gamma^(N-2))
    jz = -0.5 * N * g * _pow_pm1(g, e2, N - 2, sgn) * sgn / norm
    pref = N * (N - 1) * e2 / norm
    jz2 = N * N / 4 + sgn * pref * ups[-sgn]
    jp2 = sgn * pref * ups[sgn]
    return CollectiveExpectations(N, jz, jz2, complex(jp2))


def _pow_pm1(g: float, e2: float, k: int, sign: float) -> float:
    """gamma^k + sign, without cancellation when gamma^k is close to 1.

    ``g`` is gamma = (1 - e2)/(1 + e2); for sign = -1 the result is
    gamma^k - 1 = expm1(k log gamma).
    """
    if sign > 0 or g <= 0.0:
        return g**k + sign
    log_g = math.log1p(-2.0 * e2 / (1.0 + e2)) if e2 < 0.5 else math.log(g)
    return math.expm1(k * log_g)


def expectation_oracle(s: SymmetricState) -> CollectiveExpectations:
    """<Jz>, <Jz^2>, <J+^2> summed directly over the Dicke amplitudes."""
    N, c = s.N, s.coeffs
    prob = np.abs(c) ** 2
    m = np.arange(N + 1) - N / 2
    n = np.arange(N - 1)
    ladder = np.sqrt((n + 1.0) * (n + 2.0) * (N - n) * (N - n - 1.0))
    jp2 = complex(np.sum(np.conj(c[2:]) * c[:-2] * ladder)) if N >= 2 else 0j
    return CollectiveExpectations(N, float(prob @ m), float(prob @ (m * m)), jp2)


def family_expectations(p: FamilyPoint) -> CollectiveExpectations:
    match p:
        case Dicke(N, n):
            return dicke_expectations(N, n)
        case Superposition(N, n, alpha, delta):
            return superposition_expectations(N, n, alpha, delta)
        case SCS(N, eta, parity):
            return scs_expectations(N, eta, parity)
    raise TypeError(f"not a family point: {p!r}")


def family_coefficients(p: FamilyPoint) -> SymmetricState:
    """Explicit Dicke-basis amplitudes for ``p`` (oracle route)."""
    c = np.zeros(p.N + 1, dtype=complex)
    match p:
        case Dicke(N, n):
            c[n] = 1.0
        case Superposition(N, n, alpha, delta):
            c[n] = math.cos(alpha)
            c[n + 2] = complex(math.cos(delta), math.sin(delta)) * math.sin(alpha)
        case SCS(N, eta, "odd") if eta == 0.0:
            c[1] = 1.0
        case SCS(N, eta, parity):
            return scs_coefficients(N, eta, parity)
        case _:
            raise TypeError(f"not a family point: {p!r}")
    return SymmetricState(p.N, c)


def family_xstate(p: FamilyPoint) -> XState:
    if isinstance(p, Dicke):
        return dicke_xstate(p.N, p.n)
    return expectations_to_xstate(family_expectations(p))


def scs_large_n_xstate(eta: float) -> XState:
    """N -> infinity reduced state of either parity SCS.

    The weight 1 sits on |11> (both qubits unexcited) in this basis.
    """
    e2 = eta * eta
    norm = (1 + e2) ** 2
    return XState(e2 * e2 / norm, 1 / norm, e2 / norm, e2 / norm)


def scs_large_n_discord(eta: float) -> float:
    """Closed-form N -> infinity SCS discord, the same for both parities.

    The last entropy argument carries a factor 2 in its denominator; without
    it the argument exceeds 1.  Only a good approximation once N eta^2 >> 1.
    """
    e2 = eta * eta
    norm = (1 + e2) ** 2
    return (
        binary_entropy(1 / (1 + e2))
        - binary_entropy(2 * e2 / norm)
        + binary_entropy((norm + math.sqrt(1 + 14 * e2 * e2 + e2**4)) / (2 * norm))
    )


def ghz_expectations(N: int, alpha: float, delta: float = 0.0) -> CollectiveExpectations:
    """cos(alpha)|N>_N + exp(i delta) sin(alpha)|0>_N."""
    _check_N(N)
    c2, s2 = math.cos(alpha) ** 2, math.sin(alpha) ** 2
    jp2 = 0j
    if N == 2:
        # only here do |0> and |N> differ by two excitations
        jp2 = complex(math.cos(delta), math.sin(delta)) * math.sin(2 * alpha)
    return CollectiveExpectations(N, 0.5 * N * (c2 - s2), N * N / 4, jp2)


def ghz_coefficients(N: int, alpha: float, delta: float = 0.0) -> SymmetricState:
    c = np.zeros(N + 1, dtype=complex)
    c[N] = math.cos(alpha)
    c[0] += complex(math.cos(delta), math.sin(delta)) * math.sin(alpha)
    return SymmetricState(N, c)
