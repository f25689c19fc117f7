# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled conditional-entropy kernels.

Same signatures and results as ``_kernels_py``.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sin, sqrt, log2, fmin, fmax

cnp.import_array()

cdef double BRANCH_EPS = 1e-15


cdef inline double _xlog2x(double x) nogil:
    if x <= 0.0:
        return 0.0
    return x * log2(x)


cdef inline double _branch(double p, double gap) nogil:
    cdef double val
    if p < BRANCH_EPS:
        return 0.0
    gap = fmin(gap, p)
    val = _xlog2x(p) - _xlog2x(0.5 * (p + gap)) - _xlog2x(0.5 * (p - gap))
    return fmax(val, 0.0)


cdef inline double _point(double vp, double vm, double y, double c, double s2, double w) nogil:
    cdef double a, d, total = 0.0
    # + outcome
    a = 0.5 * ((vp + y) + (vp - y) * c)
    d = 0.5 * ((vm + y) - (vm - y) * c)
    total += _branch(a + d, sqrt((a - d) * (a - d) + s2 * w))
    # - outcome
    a = 0.5 * ((vp + y) - (vp - y) * c)
    d = 0.5 * ((vm + y) + (vm - y) * c)
    total += _branch(a + d, sqrt((a - d) * (a - d) + s2 * w))
    return total


def conditional_entropy_grid(double vp, double vm, double y, double u_re, double u_im,
                             thetas, phis):
    cdef double[::1] th = np.ascontiguousarray(thetas, dtype=np.float64)
    cdef double[::1] ph = np.ascontiguousarray(phis, dtype=np.float64)
    cdef Py_ssize_t nt = th.shape[0], nph = ph.shape[0], i, j
    out = np.empty((nt, nph), dtype=np.float64)
    cdef double[:, ::1] o = out
    cdef double[::1] w = np.empty(nph, dtype=np.float64)
    cdef double base = y * y + u_re * u_re + u_im * u_im
    cdef double c, s2
    with nogil:
        for j in range(nph):
            w[j] = fmax(base + 2.0 * y * (u_re * cos(2.0 * ph[j]) + u_im * sin(2.0 * ph[j])), 0.0)
        for i in range(nt):
            c = cos(th[i])
            s2 = sin(th[i]) * sin(th[i])
            for j in range(nph):
                o[i, j] = _point(vp, vm, y, c, s2, w[j])
    return out


def conditional_entropy_point(double vp, double vm, double y, double u_re, double u_im,
                              double theta, double phi):
    cdef double w = fmax(y * y + u_re * u_re + u_im * u_im
                         + 2.0 * y * (u_re * cos(2.0 * phi) + u_im * sin(2.0 * phi)), 0.0)
    cdef double sn = sin(theta)
    return _point(vp, vm, y, cos(theta), sn * sn, w)
