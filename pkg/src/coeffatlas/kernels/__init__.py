"""Batched functional-evaluation kernels with backend selection.

The compiled extension is preferred when available; setting the
environment variable COEFFATLAS_NO_EXT=1 forces the NumPy fallback.
Both backends expose the same functions over arrays of tau triples.
"""

from __future__ import annotations

import os

from . import pykernels

if os.environ.get("COEFFATLAS_NO_EXT"):
    _impl = pykernels
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = pykernels

BACKEND: str = _impl.BACKEND

carath_coeffs = _impl.carath_coeffs
gamma123 = _impl.gamma123
gamma_abs = _impl.gamma_abs
gamma_diff = _impl.gamma_diff
hankel_abs = _impl.hankel_abs
fekete = _impl.fekete


def evaluate(functional: str, t1, t2, t3, lam=None, mu=None):
    """Dispatch a named functional over parameter arrays.

    `gamma1|gamma2|gamma3` give |Gamma_n|; `gamma_diff` the signed
    difference; `hankel21` the determinant modulus; `fekete` needs lam, mu.
    """
    if functional in ("gamma1", "gamma2", "gamma3"):
        return gamma_abs(int(functional[-1]), t1, t2, t3)
    if functional == "gamma_diff":
        return gamma_diff(t1, t2, t3)
    if functional == "hankel21":
        return hankel_abs(t1, t2, t3)
    if functional == "fekete":
        if lam is None or mu is None:
            raise ValueError("fekete requires lam and mu")
        return fekete(t1, t2, t3, complex(lam), float(mu))
    raise ValueError(f"unknown functional {functional!r}")
