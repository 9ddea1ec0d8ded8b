"""Target coefficient functionals and their closed-form sharp bounds.

Covers |Gamma_n|, the difference |Gamma_2| - |Gamma_1|, the second-order
Hankel determinant Gamma_1 Gamma_3 - Gamma_2^2, and the generalized
Fekete-Szego functional |a3 - lambda a2^2| - mu |a2| with its piecewise
upper/lower envelope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cara import CaratheodoryCoeffs, TauTriple
from .ceclass import CoeffVector


class InvalidMu(ValueError):
    """The weight mu must be positive."""


@dataclass(frozen=True)
class FeketeParams:
    """Parameters (lambda, mu) of the generalized Fekete-Szego functional."""

    lam: complex
    mu: float

    def __post_init__(self):
        object.__setattr__(self, "lam", complex(self.lam))
        object.__setattr__(self, "mu", float(self.mu))
        if not self.mu > 0:
            raise InvalidMu(f"mu must be > 0, got {self.mu}")


@dataclass(frozen=True)
class PiecewiseBoundResult:
    """A piecewise sharp-bound value together with the branch that fired."""

    value: float
    branch: str


def hankel21_from_c(c: CaratheodoryCoeffs) -> complex:
    """H_{2,1} as the printed quartic form in c1..c3."""
    c1, c2, c3 = c.c1, c.c2, c.c3
    return (
        7 * c1**4 / 12288
        - 7 * c1**2 * c2 / 4608
        + c1 * c3 / 384
        - c2**2 / 576
    )


def hankel21_from_tau(t: TauTriple) -> complex:
    """H_{2,1} evaluated directly in the tau parameters.

    Matches hankel21_from_c composed with coeffs_from_tau; the tau3 term
    carries (1 - |tau1|^2), consistent with the corrected c3 formula.
    """
    t1, t2, t3 = t.tau1, t.tau2, t.tau3
    s1 = 1.0 - abs(t1) ** 2
    return (
        t1**4 / 2304
        - t1**2 * s1 * t2 / 192
        - s1 * (abs(t1) ** 2 + 2) * t2**2 / 288
        + t1 * s1 * (1.0 - abs(t2) ** 2) * t3 / 96
    )


def hankel21_from_gamma(g) -> complex:
    """Determinant form Gamma_1 Gamma_3 - Gamma_2^2."""
    return g[1] * g[3] - g[2] ** 2


def gamma_diff(a: CoeffVector) -> float:
    """|Gamma_2| - |Gamma_1| from a2, a3."""
    a2, a3 = a[2], a[3]
    g1 = -a2 / 2
    g2 = -a3 / 2 + 3 * a2**2 / 4
    return abs(g2) - abs(g1)


def fekete_value(a: CoeffVector, p: FeketeParams) -> float:
    """|a3 - lambda a2^2| - mu |a2|."""
    return abs(a[3] - p.lam * a[2] ** 2) - p.mu * abs(a[2])


def gamma_bound(n: int) -> float:
    """Sharp bound 1/(2n(n+1)) for |Gamma_n|, n = 1, 2, 3."""
    if n not in (1, 2, 3):
        raise ValueError(f"n must be 1, 2 or 3, got {n}")
    return 1.0 / (2 * n * (n + 1))


#: Sharp extremes of |Gamma_2| - |Gamma_1|.  The reported sharp lower
#: value -1/(2 sqrt 7) is not the true infimum over the class; the
#: attainable minimum is -4/21 (at tau1 = 6/7, tau2 = 1), which the
#: global search confirms.  Both are exposed so the verification suite
#: can report the discrepancy.
GAMMA_DIFF_MAX = 1.0 / 12.0
GAMMA_DIFF_MIN_REPORTED = -1.0 / (2.0 * math.sqrt(7.0))
GAMMA_DIFF_MIN_ATTAINED = -4.0 / 21.0

HANKEL21_BOUND = 85.0 / 12096.0


def fekete_upper(p: FeketeParams) -> PiecewiseBoundResult:
    """Sharp upper envelope of the Fekete-Szego functional."""
    d = abs(1.0 - p.lam)
    if d < 2.0 / 3.0 + 2.0 * p.mu:
        return PiecewiseBoundResult(1.0 / 6.0, "inner")
    return PiecewiseBoundResult(d / 4.0 - p.mu / 2.0, "linear")


def fekete_lower(p: FeketeParams) -> PiecewiseBoundResult:
    """Sharp lower envelope of the Fekete-Szego functional.

    Branches are tested in printed order; the intermediate region is
    nonempty only for mu > 2/3.
    """
    d = abs(1.0 - p.lam)
    mu = p.mu
    if d <= mu - 2.0 / 3.0:
        return PiecewiseBoundResult(d / 4.0 - mu / 2.0, "linear")
    if d >= (9.0 * mu**2 - 4.0) / 6.0:
        return PiecewiseBoundResult(
            -0.5 * mu * math.sqrt(2.0 / (3.0 * d + 2.0)), "sqrt"
        )
    return PiecewiseBoundResult(
        -1.0 / 6.0 - 3.0 * mu**2 / (4.0 * (3.0 * d + 2.0)), "intermediate"
    )
