"""Benchmark the compiled kernels against the NumPy fallback.

Run with:  python3 benchmarks/bench_kernels.py [batch ...]
"""

from __future__ import annotations

import sys
import time

import numpy as np

from coeffatlas.kernels import pykernels

try:
    from coeffatlas.kernels import _ckernels
except ImportError:
    _ckernels = None


def random_taus(n: int, seed: int = 0):
    rng = np.random.default_rng(seed)

    def disk(m):
        return np.sqrt(rng.random(m)) * np.exp(2j * np.pi * rng.random(m))

    return disk(n), disk(n), disk(n)


def timeit(fn, *args, repeats: int = 5) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main(batches) -> None:
    cases = [
        ("gamma123", lambda mod, t: mod.gamma123(*t)),
        ("gamma_abs(3)", lambda mod, t: mod.gamma_abs(3, *t)),
        ("gamma_diff", lambda mod, t: mod.gamma_diff(*t)),
        ("hankel_abs", lambda mod, t: mod.hankel_abs(*t)),
        ("fekete", lambda mod, t: mod.fekete(*t, 1.0 + 0j, 1.0)),
    ]
    print(f"{'kernel':<14} {'batch':>9} {'numpy':>10} {'cython':>10} {'speedup':>8}")
    for n in batches:
        taus = random_taus(n)
        for name, call in cases:
            t_py = timeit(call, pykernels, taus)
            if _ckernels is None:
                print(f"{name:<14} {n:>9} {t_py*1e3:>9.2f}ms {'n/a':>10} {'n/a':>8}")
                continue
            t_cy = timeit(call, _ckernels, taus)
            print(
                f"{name:<14} {n:>9} {t_py*1e3:>9.2f}ms {t_cy*1e3:>9.2f}ms "
                f"{t_py / t_cy:>7.2f}x"
            )


if __name__ == "__main__":
    sizes = [int(a) for a in sys.argv[1:]] or [10_000, 100_000, 1_000_000]
    main(sizes)
