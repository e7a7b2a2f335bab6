# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: Weyl-sum grids, exponential-sum scans and the
quadratic interval-enumeration oracle.  Mirrors _kernels_numpy."""

from libc.math cimport cos, sin, log, sqrt

import numpy as np

BACKEND = "compiled"

cdef double TWO_PI = 6.283185307179586476925286766559


def weyl_sums(points, hs):
    """Averaged exponentials (1/N) sum_n exp(2i pi h u_n) for each h."""
    cdef const double[::1] u = np.ascontiguousarray(points, dtype=np.float64)
    cdef const double[::1] hv = np.ascontiguousarray(hs, dtype=np.float64)
    cdef Py_ssize_t n_pts = u.shape[0], n_h = hv.shape[0]
    out = np.empty(n_h, dtype=np.complex128)
    cdef double complex[::1] ov = out
    cdef Py_ssize_t i, k
    cdef double w, ang, s_re, s_im
    for k in range(n_h):
        w = TWO_PI * hv[k]
        s_re = 0.0
        s_im = 0.0
        for i in range(n_pts):
            ang = w * u[i]
            s_re += cos(ang)
            s_im += sin(ang)
        ov[k] = (s_re / n_pts) + 1j * (s_im / n_pts)
    return out


def partial_log_exp_moduli(Py_ssize_t k_max, double h):
    """|sum_{j<=k} exp(2i pi h ln j)| for k = 1..k_max."""
    out = np.empty(k_max, dtype=np.float64)
    cdef double[::1] ov = out
    cdef double w = TWO_PI * h
    cdef double s_re = 0.0, s_im = 0.0, ang
    cdef Py_ssize_t j
    for j in range(1, k_max + 1):
        ang = w * log(<double> j)
        s_re += cos(ang)
        s_im += sin(ang)
        ov[j - 1] = sqrt(s_re * s_re + s_im * s_im)
    return out


def extreme_oracle(values, counts, Py_ssize_t n_total):
    """Exact sup-deviation over all half-open intervals, by enumeration."""
    cdef const double[::1] v = np.ascontiguousarray(values, dtype=np.float64)
    cdef const double[::1] c = np.ascontiguousarray(counts, dtype=np.float64)
    cdef Py_ssize_t m = v.shape[0]
    cdef double[::1] cum = np.empty(m + 1, dtype=np.float64)
    cdef Py_ssize_t i, j
    cum[0] = 0.0
    for i in range(m):
        cum[i + 1] = cum[i] + c[i]

    cdef double best = v[0]
    if 1.0 - v[m - 1] > best:
        best = 1.0 - v[m - 1]
    for i in range(1, m):
        if v[i] - v[i - 1] > best:
            best = v[i] - v[i - 1]

    cdef double n_tot = <double> n_total
    cdef double prev_i, nxt_j, mass, tight, wide
    for i in range(m):
        prev_i = v[i - 1] if i > 0 else 0.0
        for j in range(i, m):
            nxt_j = v[j + 1] if j < m - 1 else 1.0
            mass = (cum[j + 1] - cum[i]) / n_tot
            tight = mass - (v[j] - v[i])
            wide = (nxt_j - prev_i) - mass
            if tight > best:
                best = tight
            if wide > best:
                best = wide
    return best
