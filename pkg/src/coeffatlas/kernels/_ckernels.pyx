# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernels for batched tau-triple functionals.

Scalar loops over complex double arrays; numerically identical to the
NumPy fallback in pykernels (same operation order per element).
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

BACKEND = "cython"

ctypedef double complex cplx


cdef inline void _carath(cplx t1, cplx t2, cplx t3,
                         cplx *c1, cplx *c2, cplx *c3) noexcept nogil:
    cdef double s1 = 1.0 - (t1.real * t1.real + t1.imag * t1.imag)
    cdef double s2 = 1.0 - (t2.real * t2.real + t2.imag * t2.imag)
    cdef cplx t1c = t1.real - t1.imag * 1j
    c1[0] = 2.0 * t1
    c2[0] = 2.0 * t1 * t1 + 2.0 * s1 * t2
    c3[0] = (2.0 * t1 * t1 * t1
             + 4.0 * s1 * t1 * t2
             - 2.0 * s1 * t1c * t2 * t2
             + 2.0 * s1 * s2 * t3)


cdef inline void _gammas(cplx t1, cplx t2, cplx t3,
                         cplx *g1, cplx *g2, cplx *g3) noexcept nogil:
    cdef cplx c1, c2, c3, a2, a3, a4
    _carath(t1, t2, t3, &c1, &c2, &c3)
    a2 = c1 / 4.0
    a3 = c1 * c1 / 48.0 + c2 / 12.0
    a4 = -(c1 * c1 * c1) / 1152.0 + c1 * c2 / 96.0 + c3 / 24.0
    g1[0] = -a2 / 2.0
    g2[0] = -a3 / 2.0 + 0.75 * a2 * a2
    g3[0] = -(a4 - 4.0 * a2 * a3 + (10.0 / 3.0) * a2 * a2 * a2) / 2.0


cdef inline double _cabs(cplx z) noexcept nogil:
    return (z.real * z.real + z.imag * z.imag) ** 0.5


def carath_coeffs(cnp.ndarray t1, cnp.ndarray t2, cnp.ndarray t3):
    """(c1, c2, c3) arrays from tau-parameter arrays."""
    cdef cplx[::1] a = np.ascontiguousarray(t1, dtype=np.complex128)
    cdef cplx[::1] b = np.ascontiguousarray(t2, dtype=np.complex128)
    cdef cplx[::1] c = np.ascontiguousarray(t3, dtype=np.complex128)
    cdef Py_ssize_t n = a.shape[0], i
    c1a = np.empty(n, dtype=np.complex128)
    c2a = np.empty(n, dtype=np.complex128)
    c3a = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] v1 = c1a, v2 = c2a, v3 = c3a
    for i in range(n):
        _carath(a[i], b[i], c[i], &v1[i], &v2[i], &v3[i])
    return c1a, c2a, c3a


def gamma123(cnp.ndarray t1, cnp.ndarray t2, cnp.ndarray t3):
    """(Gamma_1, Gamma_2, Gamma_3) arrays through the c -> a pipeline."""
    cdef cplx[::1] a = np.ascontiguousarray(t1, dtype=np.complex128)
    cdef cplx[::1] b = np.ascontiguousarray(t2, dtype=np.complex128)
    cdef cplx[::1] c = np.ascontiguousarray(t3, dtype=np.complex128)
    cdef Py_ssize_t n = a.shape[0], i
    g1a = np.empty(n, dtype=np.complex128)
    g2a = np.empty(n, dtype=np.complex128)
    g3a = np.empty(n, dtype=np.complex128)
    cdef cplx[::1] v1 = g1a, v2 = g2a, v3 = g3a
    for i in range(n):
        _gammas(a[i], b[i], c[i], &v1[i], &v2[i], &v3[i])
    return g1a, g2a, g3a


def gamma_abs(int n, cnp.ndarray t1, cnp.ndarray t2, cnp.ndarray t3):
    """|Gamma_n| for n = 1, 2, 3."""
    cdef cplx[::1] a = np.ascontiguousarray(t1, dtype=np.complex128)
    cdef cplx[::1] b = np.ascontiguousarray(t2, dtype=np.complex128)
    cdef cplx[::1] c = np.ascontiguousarray(t3, dtype=np.complex128)
    cdef Py_ssize_t m = a.shape[0], i
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    cdef cplx g1, g2, g3
    for i in range(m):
        _gammas(a[i], b[i], c[i], &g1, &g2, &g3)
        if n == 1:
            o[i] = _cabs(g1)
        elif n == 2:
            o[i] = _cabs(g2)
        else:
            o[i] = _cabs(g3)
    return out


def gamma_diff(cnp.ndarray t1, cnp.ndarray t2, cnp.ndarray t3):
    """|Gamma_2| - |Gamma_1|."""
    cdef cplx[::1] a = np.ascontiguousarray(t1, dtype=np.complex128)
    cdef cplx[::1] b = np.ascontiguousarray(t2, dtype=np.complex128)
    cdef cplx[::1] c = np.ascontiguousarray(t3, dtype=np.complex128)
    cdef Py_ssize_t m = a.shape[0], i
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    cdef cplx g1, g2, g3
    for i in range(m):
        _gammas(a[i], b[i], c[i], &g1, &g2, &g3)
        o[i] = _cabs(g2) - _cabs(g1)
    return out


def hankel_abs(cnp.ndarray t1, cnp.ndarray t2, cnp.ndarray t3):
    """|Gamma_1 Gamma_3 - Gamma_2^2|."""
    cdef cplx[::1] a = np.ascontiguousarray(t1, dtype=np.complex128)
    cdef cplx[::1] b = np.ascontiguousarray(t2, dtype=np.complex128)
    cdef cplx[::1] c = np.ascontiguousarray(t3, dtype=np.complex128)
    cdef Py_ssize_t m = a.shape[0], i
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    cdef cplx g1, g2, g3
    for i in range(m):
        _gammas(a[i], b[i], c[i], &g1, &g2, &g3)
        o[i] = _cabs(g1 * g3 - g2 * g2)
    return out


def fekete(cnp.ndarray t1, cnp.ndarray t2, cnp.ndarray t3, lam, double mu):
    """|a3 - lam a2^2| - mu |a2|."""
    cdef cplx[::1] a = np.ascontiguousarray(t1, dtype=np.complex128)
    cdef cplx[::1] b = np.ascontiguousarray(t2, dtype=np.complex128)
    cdef cplx[::1] c = np.ascontiguousarray(t3, dtype=np.complex128)
    cdef cplx lm = lam
    cdef Py_ssize_t m = a.shape[0], i
    out = np.empty(m, dtype=np.float64)
    cdef double[::1] o = out
    cdef cplx c1, c2, c3, a2, a3
    for i in range(m):
        _carath(a[i], b[i], c[i], &c1, &c2, &c3)
        a2 = c1 / 4.0
        a3 = c1 * c1 / 48.0 + c2 / 12.0
        o[i] = _cabs(a3 - lm * a2 * a2) - mu * _cabs(a2)
    return out
