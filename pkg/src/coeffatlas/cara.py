"""Parameterization of the Caratheodory class and Schwarz functions.

A point (tau1, tau2, tau3) of the closed unit polydisk determines
admissible coefficients (c1, c2, c3) of a function with positive real
part, together with explicit extremal rational functions when the
leading free parameter sits on the unit circle.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from typing import Optional

from .series import TruncatedSeries

_DISK_TOL = 1e-12
_CIRCLE_TOL = 1e-12


class OutOfDisk(ValueError):
    """A tau parameter lies outside the closed unit disk."""


class NotExtremalConfiguration(ValueError):
    """The tau configuration does not match the requested extremal level."""


class NotCaratheodoryNormalized(ValueError):
    """Expected a series with constant term 1."""


@dataclass(frozen=True)
class TauTriple:
    """Free parameters, each in the closed unit disk."""

    tau1: complex
    tau2: complex
    tau3: complex

    def __post_init__(self):
        for name in ("tau1", "tau2", "tau3"):
            v = complex(getattr(self, name))
            object.__setattr__(self, name, v)
            if abs(v) > 1.0 + _DISK_TOL:
                raise OutOfDisk(f"|{name}| = {abs(v)} > 1")

    def rotated(self, theta: float) -> "TauTriple":
        """The parameter image of f(z) -> e^{-i theta} f(e^{i theta} z)."""
        w = cmath.exp(1j * theta)
        return TauTriple(w * self.tau1, w**2 * self.tau2, w**3 * self.tau3)


@dataclass(frozen=True)
class CaratheodoryCoeffs:
    """Initial coefficients c1..c4 of a positive-real-part function.

    c4 is only available when the coefficients come from a full series;
    the three-parameter construction stops at c3.  `trusted` records
    whether the values were produced by an admissible construction
    (arbitrary user input is not validated as globally admissible).
    """

    c1: complex
    c2: complex
    c3: complex
    c4: Optional[complex] = None
    trusted: bool = False

    def __post_init__(self):
        for name in ("c1", "c2", "c3"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.c4 is not None:
            object.__setattr__(self, "c4", complex(self.c4))

    @property
    def c(self) -> tuple:
        base = (self.c1, self.c2, self.c3)
        return base if self.c4 is None else base + (self.c4,)


def coeffs_from_tau(t: TauTriple, c3_as_printed: bool = False) -> CaratheodoryCoeffs:
    """Admissible (c1, c2, c3) from a tau triple.

    The default c3 uses the factor (1 - |tau1|^2) in its tau3 term, which
    is the form consistent with the extremal rational functions and keeps
    |c3| <= 2 for complex tau1.  `c3_as_printed=True` selects the variant
    with (1 - tau1^2) instead; the two agree for real tau1.
    """
    t1, t2, t3 = t.tau1, t.tau2, t.tau3
    s1 = 1.0 - abs(t1) ** 2
    c1 = 2 * t1
    c2 = 2 * t1**2 + 2 * s1 * t2
    last = (1.0 - t1**2) if c3_as_printed else s1
    c3 = (
        2 * t1**3
        + 4 * s1 * t1 * t2
        - 2 * s1 * t1.conjugate() * t2**2
        + 2 * last * (1.0 - abs(t2) ** 2) * t3
    )
    return CaratheodoryCoeffs(c1, c2, c3, trusted=True)


def _rational(num, den, order: int) -> TruncatedSeries:
    p = TruncatedSeries.from_coeffs(num, order)
    q = TruncatedSeries.from_coeffs(den, order)
    return p.div(q)


def extremal_p_series(t: TauTriple, level: int, order: int) -> TruncatedSeries:
    """Taylor expansion of the unique extremal positive-real-part function.

    level 1 needs |tau1| = 1; level 2 needs |tau1| < 1, |tau2| = 1;
    level 3 needs |tau1|, |tau2| < 1, |tau3| = 1.
    """
    t1, t2, t3 = t.tau1, t.tau2, t.tau3
    on = lambda v: abs(abs(v) - 1.0) <= _CIRCLE_TOL
    inside = lambda v: abs(v) < 1.0 - _CIRCLE_TOL

    if level == 1:
        if not on(t1):
            raise NotExtremalConfiguration("level 1 requires |tau1| = 1")
        return _rational([1, t1], [1, -t1], order)
    if level == 2:
        if not (inside(t1) and on(t2)):
            raise NotExtremalConfiguration("level 2 requires |tau1| < 1 = |tau2|")
        b1 = t1.conjugate() * t2
        return _rational([1, b1 + t1, t2], [1, b1 - t1, -t2], order)
    if level == 3:
        if not (inside(t1) and inside(t2) and on(t3)):
            raise NotExtremalConfiguration("level 3 requires |tau1|, |tau2| < 1 = |tau3|")
        n1 = t2.conjugate() * t3 + t1.conjugate() * t2 + t1
        n2 = t1.conjugate() * t3 + t1 * t2.conjugate() * t3 + t2
        d1 = t2.conjugate() * t3 + t1.conjugate() * t2 - t1
        d2 = t1.conjugate() * t3 - t1 * t2.conjugate() * t3 - t2
        return _rational([1, n1, n2, t3], [1, d1, d2, -t3], order)
    raise NotExtremalConfiguration(f"level must be 1, 2 or 3, got {level}")


def schwarz_from_p(p: TruncatedSeries) -> TruncatedSeries:
    """w = (p - 1)/(p + 1) for a series with p(0) = 1."""
    if p.coeffs[0] != 1:
        raise NotCaratheodoryNormalized("expected constant term 1")
    return (p - 1.0).div(p + 1.0)


def mobius_schwarz(t0: float, order: int, sign: int = +1) -> TruncatedSeries:
    """Expansion of w(z) = z (t0 + sign*z) / (1 + sign*t0*z), |t0| < 1.

    Covers the two boundary constructions used by the sharp coefficient
    functionals: sign=+1 reproduces z(2 + sqrt7 z)/(sqrt7 + 2z) with
    t0 = 2/sqrt7, sign=-1 reproduces z(t0 - z)/(1 - t0 z).
    """
    if abs(t0) >= 1.0:
        raise OutOfDisk(f"|t0| = {abs(t0)} >= 1")
    if sign not in (+1, -1):
        raise ValueError("sign must be +1 or -1")
    num = [0.0, t0, float(sign)]
    den = [1.0, sign * t0]
    return rational_schwarz(num, den, order)


def rational_schwarz(num, den, order: int) -> TruncatedSeries:
    """Expansion of a rational Schwarz function given as coefficient lists.

    Lets boundary constructions be entered exactly as printed, e.g. the
    unscaled pair ([0, 2, sqrt7], [sqrt7, 2]).
    """
    w = _rational(num, den, order)
    if w.coeffs[0] != 0:
        raise ValueError("not a formal Schwarz function: w(0) != 0")
    return w
