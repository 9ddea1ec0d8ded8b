"""Seeded two-path consistency suites for the closed-form identities.

Each suite checks one closed formula against an independent computation
route over randomized admissible inputs and reports the worst deviation.
"""

from __future__ import annotations

import time

import numpy as np

from .cara import CaratheodoryCoeffs, TauTriple, coeffs_from_tau, schwarz_from_p
from .ceclass import CoeffVector, a_from_c, f_from_schwarz
from .functionals import hankel21_from_c, hankel21_from_gamma
from .invlog import gamma_from_a, gamma_from_reversion
from .series import TruncatedSeries


def _disk_points(rng: np.random.Generator, n: int, radius: float = 1.0) -> np.ndarray:
    r = radius * np.sqrt(rng.random(n))
    th = 2.0 * np.pi * rng.random(n)
    return r * np.exp(1j * th)


def _tau_arrays(rng: np.random.Generator, n: int):
    return _disk_points(rng, n), _disk_points(rng, n), _disk_points(rng, n)


def _result(name: str, samples: int, max_dev: float, tol: float, t0: float) -> dict:
    return {
        "name": name,
        "samples": samples,
        "max_deviation": float(max_dev),
        "tolerance": tol,
        "passed": bool(max_dev <= tol),
        "wall_time": time.perf_counter() - t0,
    }


def suite_coefficient_recovery(samples: int = 10_000, seed: int = 0, order: int = 6) -> dict:
    """Closed-form a2..a4 from (c1, c2, c3) vs the series solve of the
    defining identity, over random tau triples with random c4 tails."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    t1, t2, t3 = _tau_arrays(rng, samples)
    c4 = _disk_points(rng, samples, radius=2.0)
    worst = 0.0
    for k in range(samples):
        c = coeffs_from_tau(TauTriple(t1[k], t2[k], t3[k]))
        direct = a_from_c(c)
        p = TruncatedSeries.from_coeffs([1.0, c.c1, c.c2, c.c3, c4[k]], order)
        via_series = f_from_schwarz(schwarz_from_p(p), order)
        dev = max(abs(direct[n] - via_series[n]) for n in (2, 3, 4))
        worst = max(worst, dev)
    return _result("a-from-c vs series solve", samples, worst, 1e-10, t0)


def suite_gamma_reversion(samples: int = 10_000, seed: int = 1, order: int = 6) -> dict:
    """Closed-form Gamma_1..Gamma_4 vs the reversion + log route, over
    random coefficient vectors with |a_n| <= 3."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    tails = _disk_points(rng, 4 * samples, radius=3.0).reshape(samples, 4)
    worst = 0.0
    for k in range(samples):
        a = CoeffVector((1,) + tuple(tails[k]))
        closed = gamma_from_a(a)
        reverted = gamma_from_reversion(a, order)
        dev = max(abs(closed[n] - reverted[n]) for n in (1, 2, 3, 4))
        worst = max(worst, dev)
    return _result("Gamma closed forms vs reversion", samples, worst, 1e-10, t0)


def suite_hankel_determinant(samples: int = 10_000, seed: int = 2) -> dict:
    """Quartic c-form of the determinant vs Gamma_1 Gamma_3 - Gamma_2^2,
    over random c with |c_i| <= 2."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    cs = _disk_points(rng, 3 * samples, radius=2.0).reshape(samples, 3)
    worst = 0.0
    for k in range(samples):
        c = CaratheodoryCoeffs(*cs[k])
        h_quartic = hankel21_from_c(c)
        h_det = hankel21_from_gamma(gamma_from_a(a_from_c(c)))
        worst = max(worst, abs(h_quartic - h_det))
    return _result("Hankel quartic form vs determinant", samples, worst, 1e-12, t0)


def suite_hankel_tau(samples: int = 100_000, seed: int = 3) -> dict:
    """Direct tau-form of the determinant vs the c-coefficient route,
    vectorized over random tau triples."""
    t0 = time.perf_counter()
    rng = np.random.default_rng(seed)
    t1, t2, t3 = _tau_arrays(rng, samples)
    s1 = 1.0 - np.abs(t1) ** 2
    direct = (
        t1**4 / 2304
        - t1**2 * s1 * t2 / 192
        - s1 * (np.abs(t1) ** 2 + 2) * t2**2 / 288
        + t1 * s1 * (1.0 - np.abs(t2) ** 2) * t3 / 96
    )
    c1 = 2 * t1
    c2 = 2 * t1**2 + 2 * s1 * t2
    c3 = (
        2 * t1**3
        + 4 * s1 * t1 * t2
        - 2 * s1 * np.conj(t1) * t2**2
        + 2 * s1 * (1.0 - np.abs(t2) ** 2) * t3
    )
    via_c = 7 * c1**4 / 12288 - 7 * c1**2 * c2 / 4608 + c1 * c3 / 384 - c2**2 / 576
    worst = float(np.abs(direct - via_c).max())
    return _result("Hankel tau form vs c route", samples, worst, 1e-12, t0)


def run_all(samples: int = 10_000, seed: int = 0, order: int = 6) -> list:
    """All identity suites with per-suite derived seeds."""
    return [
        suite_coefficient_recovery(samples, seed, order),
        suite_gamma_reversion(samples, seed + 1, order=max(order, 6)),
        suite_hankel_determinant(samples, seed + 2),
        suite_hankel_tau(max(samples, 10 * samples), seed + 3),
    ]
