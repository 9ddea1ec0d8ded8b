"""Inverse logarithmic coefficients, by closed formula and by reversion.

Gamma_n are the coefficients of log(f^{-1}(w)/w) = 2 sum Gamma_n w^n.
The closed formulas in terms of a2..a5 are validated against the
independent series-reversion route.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cara import TauTriple, coeffs_from_tau
from .ceclass import CoeffVector, a_from_c


class NotEnoughCoefficients(ValueError):
    """Gamma_n requires Taylor coefficients through a_{n+1}."""


@dataclass(frozen=True)
class GammaVector:
    """Gamma_1..Gamma_4 (or Gamma_1..Gamma_3 when a5 is unavailable)."""

    gamma: tuple

    def __post_init__(self):
        object.__setattr__(self, "gamma", tuple(complex(g) for g in self.gamma))
        if len(self.gamma) not in (3, 4):
            raise ValueError("expected 3 or 4 coefficients")

    def __getitem__(self, n: int) -> complex:
        """Gamma_n, 1-indexed."""
        return self.gamma[n - 1]


def gamma_from_a(a: CoeffVector) -> GammaVector:
    """Closed-form Gamma_1..Gamma_4 from a2..a5 (Gamma_4 only if a5 present)."""
    if len(a) < 4:
        raise NotEnoughCoefficients("need a2..a4 at least")
    a2, a3, a4 = a[2], a[3], a[4]
    g1 = -a2 / 2
    g2 = -a3 / 2 + 3 * a2**2 / 4
    g3 = -(a4 - 4 * a2 * a3 + (10.0 / 3.0) * a2**3) / 2
    if len(a) < 5:
        return GammaVector((g1, g2, g3))
    a5 = a[5]
    g4 = (35.0 / 8.0) * a2**4 - 7.5 * a2**2 * a3 + 2.5 * a2 * a4 + 1.25 * a3**2 - a5 / 2
    return GammaVector((g1, g2, g3, g4))


def gamma_from_reversion(a: CoeffVector, order: int | None = None) -> GammaVector:
    """Gamma_n read off log(g(w)/w)/2 where g is the compositional inverse of f."""
    if order is None:
        order = max(len(a), 5)
    if order < 5:
        raise ValueError("order must be >= 5")
    g = a.series(order).revert()
    lg = g.shift_down().log()
    top = 4 if len(a) >= 5 else 3
    return GammaVector(tuple(lg.coeffs[n] / 2 for n in range(1, top + 1)))


def gamma_from_tau(t: TauTriple) -> GammaVector:
    """Gamma_1..Gamma_3 through the tau -> c -> a pipeline."""
    return gamma_from_a(a_from_c(coeffs_from_tau(t)))


def gamma3_magnitude(t: TauTriple) -> float:
    """|Gamma_3| evaluated directly in the tau parameters.

    Independent of the c-coefficient pipeline; used as a cross-check.
    """
    t1, t2, t3 = t.tau1, t.tau2, t.tau3
    s1 = 1.0 - abs(t1) ** 2
    inner = (
        -(5.0 / 6.0) * t1**3
        + 3 * s1 * t1 * t2
        + 2 * s1 * t1.conjugate() * t2**2
        - 2 * s1 * (1.0 - abs(t2) ** 2) * t3
    )
    return abs(inner) / 48.0
