"""Compare the compiled and numpy conditional-entropy kernels.

    python benchmarks/bench_kernels.py [--repeat 5]

Times the full default oracle grid (721 x 1440) on a few states and the
scalar point kernel used by golden-section refinement.
"""

import argparse
import timeit

import numpy as np

from xdiscord import _kernels_py
from xdiscord.families import SCS, Dicke, Superposition, family_xstate
from xdiscord.oracle import DEFAULT_GRID, phi_grid, theta_grid

try:
    from xdiscord import _ckernels
except ImportError:
    _ckernels = None

STATES = {
    "dicke(30,9)": Dicke(30, 9),
    "superposition(12,4,0.7,0.9)": Superposition(12, 4, 0.7, 0.9),
    "scs(20,0.5,odd)": SCS(20, 0.5, "odd"),
}


def args_of(s):
    return s.v_plus, s.v_minus, s.y, s.u.real, s.u.imag


def best(fn, repeat, number=1):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    opts = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; only the numpy backend is available")
    th, ph = theta_grid(DEFAULT_GRID[0]), phi_grid(DEFAULT_GRID[1])
    print(f"grid {DEFAULT_GRID[0]}x{DEFAULT_GRID[1]}, best of {opts.repeat}")
    print(f"{'state':30s} {'numpy s':>10s} {'cython s':>10s} {'speedup':>8s} {'max diff':>9s}")
    for name, p in STATES.items():
        a = args_of(family_xstate(p))
        t_py = best(lambda: _kernels_py.conditional_entropy_grid(*a, th, ph), opts.repeat)
        if _ckernels is None:
            print(f"{name:30s} {t_py:10.4f}")
            continue
        t_c = best(lambda: _ckernels.conditional_entropy_grid(*a, th, ph), opts.repeat)
        diff = np.max(np.abs(_kernels_py.conditional_entropy_grid(*a, th, ph)
                             - _ckernels.conditional_entropy_grid(*a, th, ph)))
        print(f"{name:30s} {t_py:10.4f} {t_c:10.4f} {t_py / t_c:8.2f} {diff:9.1e}")

    a = args_of(family_xstate(Dicke(30, 9)))
    n = 20000
    t_py = best(lambda: _kernels_py.conditional_entropy_point(*a, 1.1, 0.3), opts.repeat, n)
    line = f"{'point kernel (per call)':30s} {t_py * 1e6:9.2f}u"
    if _ckernels is not None:
        t_c = best(lambda: _ckernels.conditional_entropy_point(*a, 1.1, 0.3), opts.repeat, n)
        line += f" {t_c * 1e6:9.2f}u {t_py / t_c:8.2f}"
    print(line)


if __name__ == "__main__":
    main()
