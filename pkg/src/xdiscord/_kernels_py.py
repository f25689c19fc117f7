"""Pure numpy conditional-entropy kernels (fallback for ``_ckernels``)."""

import math

import numpy as np

BRANCH_EPS = 1e-15


def _xlog2x(x):
    out = np.zeros_like(x)
    pos = x > 0.0
    out[pos] = x[pos] * np.log2(x[pos])
    return out


def _branch(p, gap):
    # p * H((1 + gap/p)/2) written with the unnormalized eigenvalues
    gap = np.minimum(gap, p)
    lam1 = 0.5 * (p + gap)
    lam2 = 0.5 * (p - gap)
    val = _xlog2x(p) - _xlog2x(lam1) - _xlog2x(lam2)
    return np.where(p < BRANCH_EPS, 0.0, np.maximum(val, 0.0))


def conditional_entropy_grid(vp, vm, y, u_re, u_im, thetas, phis):
    """Conditional entropy on the outer product of ``thetas`` and ``phis``.

    Returns an array of shape ``(len(thetas), len(phis))``.
    """
    thetas = np.asarray(thetas, dtype=float)[:, None]
    phis = np.asarray(phis, dtype=float)[None, :]
    c = np.cos(thetas)
    s2 = np.sin(thetas) ** 2
    w = y * y + u_re * u_re + u_im * u_im + 2.0 * y * (u_re * np.cos(2 * phis) + u_im * np.sin(2 * phis))
    w = np.maximum(w, 0.0)
    total = np.zeros((thetas.shape[0], phis.shape[1]))
    for sign in (1.0, -1.0):
        a = 0.5 * ((vp + y) + sign * (vp - y) * c)
        d = 0.5 * ((vm + y) - sign * (vm - y) * c)
        p = a + d
        gap = np.sqrt((a - d) ** 2 + s2 * w)
        total += _branch(p, gap)
    return total


def conditional_entropy_point(vp, vm, y, u_re, u_im, theta, phi):
    c = math.cos(theta)
    sn = math.sin(theta)
    w = y * y + u_re * u_re + u_im * u_im + 2.0 * y * (u_re * math.cos(2 * phi) + u_im * math.sin(2 * phi))
    w = max(w, 0.0)
    total = 0.0
    for sign in (1.0, -1.0):
        a = 0.5 * ((vp + y) + sign * (vp - y) * c)
        d = 0.5 * ((vm + y) - sign * (vm - y) * c)
        p = a + d
        if p < BRANCH_EPS:
            continue
        gap = min(math.sqrt((a - d) ** 2 + sn * sn * w), p)
        val = 0.0
        for lam in (0.5 * (p + gap), 0.5 * (p - gap)):
            if lam > 0.0:
                val -= lam * math.log2(lam / p)
        total += max(val, 0.0)
    return total
