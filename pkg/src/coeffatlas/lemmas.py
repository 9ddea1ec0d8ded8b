"""Closed-form extremal-lemma evaluators with brute-force disk oracles.

Three auxiliary maxima drive every sharp bound in the package: the disk
maximum Y(A,B,C) of |A + Bz + Cz^2| + 1 - |z|^2, the bound on
|c2 - v c1^2|, and the two-sided envelope of
Phi(c1, c2) = |K c1^2 + L c2| - |J c1|.  Each closed form is paired with
an independent sampling oracle in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class BranchInconsistency(RuntimeError):
    """A case-analysis branch fired with an inconsistent radicand."""


class InvalidJ(ValueError):
    """The linear weight J must be nonnegative."""


@dataclass(frozen=True)
class YParams:
    A: float
    B: float
    C: float


@dataclass(frozen=True)
class PhiParams:
    J: float
    K: complex
    L: float

    def __post_init__(self):
        if self.J < 0:
            raise InvalidJ(f"J must be >= 0, got {self.J}")

    @property
    def M(self) -> float:
        """|4K + 2L|, recomputed on access."""
        return abs(4 * self.K + 2 * self.L)


def y_closed(A: float, B: float, C: float, return_branch: bool = False):
    """Max over the closed unit disk of |A + Bz + Cz^2| + 1 - |z|^2.

    The case tree follows the printed conditions; exactly one branch fires.
    """
    aA, aB, aC = abs(A), abs(B), abs(C)
    if A * C >= 0:
        if aB >= 2.0 * (1.0 - aC):
            val, branch = aA + aB + aC, "i-boundary"
        else:
            val, branch = 1.0 + aA + aB**2 / (4.0 * (1.0 - aC)), "i-interior"
    else:
        # -4AC (C^-2 - 1); positive here, and +inf as C -> 0 (the interior
        # critical point goes to the |C| = 0 parabola case)
        csq = C * C
        gate = math.inf if csq == 0.0 else -4.0 * A * C * (1.0 / csq - 1.0)
        if gate <= B**2 and aB < 2.0 * (1.0 - aC):
            val, branch = 1.0 - aA + aB**2 / (4.0 * (1.0 - aC)), "ii-minus"
        elif B**2 < min(4.0 * (1.0 + aC) ** 2, gate):
            val, branch = 1.0 + aA + aB**2 / (4.0 * (1.0 + aC)), "ii-plus"
        elif aC * (aB + 4.0 * aA) <= aA * aB:
            val, branch = aA + aB - aC, "R-first"
        elif aA * aB <= aC * (aB - 4.0 * aA):
            val, branch = -aA + aB + aC, "R-second"
        else:
            radicand = 1.0 - B**2 / (4.0 * A * C)
            if radicand < 0:
                raise BranchInconsistency(
                    f"negative radicand {radicand} for (A,B,C)=({A},{B},{C})"
                )
            val, branch = (aC + aA) * math.sqrt(radicand), "R-otherwise"
    return (val, branch) if return_branch else val


def y_oracle(
    A: float,
    B: float,
    C: float,
    n_radial: int = 512,
    n_angular: int = 512,
    n_boundary: int = 4096,
) -> float:
    """Grid maximum of |A + Bz + Cz^2| + 1 - |z|^2 over the closed disk.

    Polar grid plus a dense boundary ring; underestimates the true
    maximum by at most the discretization slack.
    """
    r = np.linspace(0.0, 1.0, n_radial)
    th = np.linspace(0.0, 2.0 * np.pi, n_angular, endpoint=False)
    z = np.outer(r, np.exp(1j * th)).ravel()
    zb = np.exp(1j * np.linspace(0.0, 2.0 * np.pi, n_boundary, endpoint=False))
    z = np.concatenate([z, zb])
    vals = np.abs(A + B * z + C * z * z) + 1.0 - np.abs(z) ** 2
    return float(vals.max())


def mm_bound(v: float) -> float:
    """Sharp bound for |c2 - v c1^2| over the positive-real-part class."""
    if v < 0:
        return -4.0 * v + 2.0
    if v <= 1:
        return 2.0
    return 4.0 * v - 2.0


def phi_upper(p: PhiParams) -> float:
    """Sharp maximum of Phi = |K c1^2 + L c2| - |J c1|."""
    if abs(2 * p.K + p.L) >= abs(p.L) + p.J:
        return p.M - 2.0 * p.J
    return 2.0 * abs(p.L)


def phi_lower(p: PhiParams) -> float:
    """Sharp maximum of -Phi (so Phi >= -phi_lower)."""
    M, J, aL = p.M, p.J, abs(p.L)
    if J >= M + 2.0 * aL:
        return 2.0 * J - M
    if J**2 <= 2.0 * aL * (M + 2.0 * aL):
        return 2.0 * J * math.sqrt(2.0 * aL / (M + 2.0 * aL))
    return 2.0 * aL + J**2 / (M + 2.0 * aL)
