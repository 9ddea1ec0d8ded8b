"""Pure NumPy evaluation kernels for batched tau-triple functionals.

Mirrors the compiled extension in coeffatlas.kernels._ckernels; either
backend maps arrays of polydisk parameters to functional values.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"


def carath_coeffs(t1, t2, t3):
    """(c1, c2, c3) arrays from tau-parameter arrays."""
    s1 = 1.0 - np.abs(t1) ** 2
    c1 = 2.0 * t1
    c2 = 2.0 * t1**2 + 2.0 * s1 * t2
    c3 = (
        2.0 * t1**3
        + 4.0 * s1 * t1 * t2
        - 2.0 * s1 * np.conj(t1) * t2**2
        + 2.0 * s1 * (1.0 - np.abs(t2) ** 2) * t3
    )
    return c1, c2, c3


def gamma123(t1, t2, t3):
    """(Gamma_1, Gamma_2, Gamma_3) arrays through the c -> a pipeline."""
    c1, c2, c3 = carath_coeffs(t1, t2, t3)
    a2 = c1 / 4.0
    a3 = c1**2 / 48.0 + c2 / 12.0
    a4 = -(c1**3) / 1152.0 + c1 * c2 / 96.0 + c3 / 24.0
    g1 = -a2 / 2.0
    g2 = -a3 / 2.0 + 0.75 * a2**2
    g3 = -(a4 - 4.0 * a2 * a3 + (10.0 / 3.0) * a2**3) / 2.0
    return g1, g2, g3


def gamma_abs(n, t1, t2, t3):
    """|Gamma_n| for n = 1, 2, 3."""
    g = gamma123(t1, t2, t3)
    return np.abs(g[n - 1])


def gamma_diff(t1, t2, t3):
    """|Gamma_2| - |Gamma_1|."""
    g1, g2, _ = gamma123(t1, t2, t3)
    return np.abs(g2) - np.abs(g1)


def hankel_abs(t1, t2, t3):
    """|Gamma_1 Gamma_3 - Gamma_2^2|."""
    g1, g2, g3 = gamma123(t1, t2, t3)
    return np.abs(g1 * g3 - g2**2)


def fekete(t1, t2, t3, lam, mu):
    """|a3 - lam a2^2| - mu |a2|."""
    c1, c2, _ = carath_coeffs(t1, t2, t3)
    a2 = c1 / 4.0
    a3 = c1**2 / 48.0 + c2 / 12.0
    return np.abs(a3 - lam * a2**2) - mu * np.abs(a2)
