import itertools
import math

import numpy as np
import pytest

from xdiscord.families import SCS, Dicke, Superposition

ALPHAS_17 = [k * math.pi / 16 for k in range(17)]
ETAS_21 = [float(e) for e in np.linspace(0.0, 1.0, 21)]


def dicke_grid(n_max=30):
    return [Dicke(N, n) for N in range(2, n_max + 1) for n in range(N + 1)]


def superposition_grid(n_max=12, deltas=(0.0, 0.9)):
    return [
        Superposition(N, n, a, d)
        for N in range(3, n_max + 1)
        for n in range(N - 1)
        for a in ALPHAS_17
        for d in deltas
    ]


def scs_grid(n_max=30):
    return [SCS(N, e, p) for N in range(3, n_max + 1) for e in ETAS_21 for p in ("even", "odd")]


def criterion1_points():
    return dicke_grid() + superposition_grid() + scs_grid()


def reduced_pair_matrix(coeffs):
    """Two-qubit reduced state of sum_n c_n |n>_N built on the full 2^N space.

    Bit value 0 marks an excited qubit, matching the X-state basis where
    |00><00| carries v+.
    """
    N = len(coeffs) - 1
    psi = np.zeros(2**N, dtype=complex)
    for n, c in enumerate(coeffs):
        if c == 0:
            continue
        configs = list(itertools.combinations(range(N), n))
        amp = c / math.sqrt(len(configs))
        for excited in configs:
            idx = 0
            for q in range(N):
                bit = 0 if q in excited else 1
                idx = (idx << 1) | bit
            psi[idx] += amp
    m = psi.reshape(4, 2 ** (N - 2))
    return m @ m.conj().T


@pytest.fixture
def rng():
    return np.random.default_rng(20101019)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
