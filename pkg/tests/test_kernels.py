"""Backend parity and dispatch tests for the evaluation kernels."""

import os
import subprocess
import sys

import numpy as np
import pytest

from coeffatlas import kernels
from coeffatlas.cara import TauTriple
from coeffatlas.invlog import gamma_from_tau
from coeffatlas.kernels import pykernels

try:
    from coeffatlas.kernels import _ckernels
except ImportError:  # pragma: no cover - compiled extension unavailable
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled extension not built")


def _random_taus(n=5000, seed=3):
    rng = np.random.default_rng(seed)

    def disk(m):
        return np.sqrt(rng.random(m)) * np.exp(2j * np.pi * rng.random(m))

    return disk(n), disk(n), disk(n)


@needs_ext
@pytest.mark.parametrize(
    "name", ["carath_coeffs", "gamma123", "gamma_diff", "hankel_abs"]
)
def test_backend_parity(name):
    t1, t2, t3 = _random_taus()
    a = getattr(pykernels, name)(t1, t2, t3)
    b = getattr(_ckernels, name)(t1, t2, t3)
    for x, y in zip(np.atleast_1d(a), np.atleast_1d(b)):
        assert np.abs(np.asarray(x) - np.asarray(y)).max() < 1e-13


@needs_ext
def test_backend_parity_gamma_abs_and_fekete():
    t1, t2, t3 = _random_taus()
    for n in (1, 2, 3):
        a = pykernels.gamma_abs(n, t1, t2, t3)
        b = _ckernels.gamma_abs(n, t1, t2, t3)
        assert np.abs(a - b).max() < 1e-13
    a = pykernels.fekete(t1, t2, t3, 1.0 + 0.5j, 0.7)
    b = _ckernels.fekete(t1, t2, t3, 1.0 + 0.5j, 0.7)
    assert np.abs(a - b).max() < 1e-13


def test_kernels_match_scalar_pipeline():
    t1, t2, t3 = _random_taus(n=200, seed=9)
    g1, g2, g3 = kernels.gamma123(t1, t2, t3)
    for k in range(200):
        g = gamma_from_tau(TauTriple(t1[k], t2[k], t3[k]))
        assert abs(g[1] - g1[k]) < 1e-13
        assert abs(g[2] - g2[k]) < 1e-13
        assert abs(g[3] - g3[k]) < 1e-13


def test_evaluate_dispatch():
    t1, t2, t3 = _random_taus(n=10)
    for name in ("gamma1", "gamma2", "gamma3", "gamma_diff", "hankel21"):
        out = kernels.evaluate(name, t1, t2, t3)
        assert out.shape == (10,)
    out = kernels.evaluate("fekete", t1, t2, t3, lam=1.0, mu=0.5)
    assert out.shape == (10,)


def test_evaluate_errors():
    t1, t2, t3 = _random_taus(n=3)
    with pytest.raises(ValueError):
        kernels.evaluate("nope", t1, t2, t3)
    with pytest.raises(ValueError):
        kernels.evaluate("fekete", t1, t2, t3)


def test_backend_name_exposed():
    assert kernels.BACKEND in ("cython", "numpy")


def test_env_override_forces_numpy():
    env = dict(os.environ, COEFFATLAS_NO_EXT="1")
    out = subprocess.run(
        [sys.executable, "-c", "from coeffatlas import kernels; print(kernels.BACKEND)"],
        capture_output=True,
        text=True,
        env=env,
        check=True,
    )
    assert out.stdout.strip() == "numpy"
