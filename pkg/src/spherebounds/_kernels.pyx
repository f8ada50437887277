# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled recurrence and polynomial-evaluation kernels.

Hot loops only: three-term recurrences for Gegenbauer and Jacobi
polynomials (scalar and grid form) and Horner evaluation.  The
pure-Python twin lives in ``_kernels_py``; ``_core`` picks one at
import time.  Signatures must stay in sync between the two modules.
"""

import numpy as np

BACKEND = "compiled"


cdef double _geg_scalar(int n, int i, double t) noexcept nogil:
    cdef double pm1, p, pn
    cdef int j
    if i == 0:
        return 1.0
    if i == 1:
        return t
    pm1 = 1.0
    p = t
    for j in range(1, i):
        pn = ((2 * j + n - 2) * t * p - j * pm1) / (j + n - 2)
        pm1 = p
        p = pn
    return p


def geg_eval(int n, int i, double t):
    """Normalized Gegenbauer value P_i(t) for dimension n (P_i(1) = 1)."""
    return _geg_scalar(n, i, t)


def geg_eval_grid(int n, int i, double[::1] ts):
    """Vectorized ``geg_eval`` over a contiguous array of points."""
    cdef Py_ssize_t m = ts.shape[0]
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t j
    with nogil:
        for j in range(m):
            o[j] = _geg_scalar(n, i, ts[j])
    return out


cdef double _jac_scalar(double a, double b, int i, double t) noexcept nogil:
    cdef double pm1, p, pn, s, c1, c2, c3, c4
    cdef int j
    if i == 0:
        return 1.0
    pm1 = 1.0
    p = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * t
    for j in range(2, i + 1):
        s = 2.0 * j + a + b
        c1 = 2.0 * j * (j + a + b) * (s - 2.0)
        c2 = (s - 1.0) * (a * a - b * b)
        c3 = (s - 1.0) * s * (s - 2.0)
        c4 = 2.0 * (j + a - 1.0) * (j + b - 1.0) * s
        pn = ((c2 + c3 * t) * p - c4 * pm1) / c1
        pm1 = p
        p = pn
    return p


def jac_eval(double a, double b, int i, double t):
    """Standard (unnormalized) Jacobi value P_i^(a,b)(t)."""
    return _jac_scalar(a, b, i, t)


def jac_eval_grid(double a, double b, int i, double[::1] ts):
    """Vectorized ``jac_eval`` over a contiguous array of points."""
    cdef Py_ssize_t m = ts.shape[0]
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t j
    with nogil:
        for j in range(m):
            o[j] = _jac_scalar(a, b, i, ts[j])
    return out


def jac_pair(double a, double b, int k, double t):
    """(P_{k-1}, P_k) for the standard Jacobi family, one recurrence pass."""
    if k == 0:
        return 0.0, 1.0
    return _jac_scalar(a, b, k - 1, t), _jac_scalar(a, b, k, t)


cdef double _horner_scalar(const double[::1] c, double t) noexcept nogil:
    cdef Py_ssize_t j = c.shape[0] - 1
    cdef double acc = c[j]
    while j > 0:
        j -= 1
        acc = acc * t + c[j]
    return acc


def horner(const double[::1] coeffs, double t):
    """Evaluate a monomial-coefficient polynomial (coeffs[j] multiplies t**j)."""
    return _horner_scalar(coeffs, t)


def horner_grid(const double[::1] coeffs, double[::1] ts):
    """Vectorized ``horner`` over a contiguous array of points."""
    cdef Py_ssize_t m = ts.shape[0]
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    cdef Py_ssize_t j
    with nogil:
        for j in range(m):
            o[j] = _horner_scalar(coeffs, ts[j])
    return out
