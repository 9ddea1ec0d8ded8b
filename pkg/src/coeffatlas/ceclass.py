"""Constructions in the exponential-convexity class.

Solves 1 + z f''/f' = e^{w(z)} for the Taylor coefficients of f given a
formal Schwarz series w, provides the closed-form coefficient recovery
from Caratheodory coefficients, and builds the named extremal functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .cara import CaratheodoryCoeffs, mobius_schwarz
from .series import TruncatedSeries

#: Default truncation order: enough for a2..a5 and the z^7 coefficients of
#: the cubically-symmetric extremal, with margin.
DEFAULT_ORDER = 12

F3_T0 = 2.0 / math.sqrt(7.0)
F4_T0 = math.sqrt(2.0 / 21.0)

EXTREMAL_NAMES = ("f0", "f1", "f2", "f3", "f4")


class NotSchwarzFormal(ValueError):
    """The driving series must vanish at the origin."""


class UnknownExtremal(ValueError):
    """No extremal function with that name."""


@dataclass(frozen=True)
class CoeffVector:
    """Normalized Taylor coefficients a1..aN of f(z) = z + a2 z^2 + ..., a1 = 1."""

    a: tuple

    def __post_init__(self):
        cs = tuple(complex(v) for v in self.a)
        if not cs or cs[0] != 1:
            raise ValueError("a1 must be exactly 1")
        object.__setattr__(self, "a", cs)

    def __getitem__(self, n: int) -> complex:
        """a_n, 1-indexed as in the expansion."""
        return self.a[n - 1]

    def __len__(self) -> int:
        return len(self.a)

    def series(self, order: int | None = None) -> TruncatedSeries:
        """f as a truncated series z + a2 z^2 + ... (zero-padded beyond aN)."""
        if order is None:
            order = len(self.a)
        return TruncatedSeries.from_coeffs((0j,) + self.a, order)


def f_from_schwarz(omega: TruncatedSeries, order: int = DEFAULT_ORDER) -> CoeffVector:
    """Coefficients of f(z) = int_0^z exp(int_0^t (e^{w(s)} - 1)/s ds) dt.

    All intermediate series are carried at the target order; the shift
    down by one power loses only the z^(order+1) information, so a1..aN
    are exact for the given omega.
    """
    if omega.coeffs[0] != 0:
        raise NotSchwarzFormal("omega(0) must be 0")
    w = omega.resize(order)
    q = (w.exp() - 1.0).shift_down()
    inner = q.integrate()
    fprime = inner.exp()
    f = fprime.integrate()
    return CoeffVector(f.coeffs[1 : order + 1])


def a_from_c(c: CaratheodoryCoeffs) -> CoeffVector:
    """Closed-form a2..a5 from c1..c4 (a5 omitted when c4 is missing)."""
    c1, c2, c3 = c.c1, c.c2, c.c3
    a2 = c1 / 4
    a3 = c1**2 / 48 + c2 / 12
    a4 = -(c1**3) / 1152 + c1 * c2 / 96 + c3 / 24
    if c.c4 is None:
        return CoeffVector((1, a2, a3, a4))
    a5 = c1**4 / 5760 - c1**2 * c2 / 480 + c1 * c3 / 240 + c.c4 / 40
    return CoeffVector((1, a2, a3, a4, a5))


def extremal_schwarz(name: str, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The driving Schwarz series of a named extremal function."""
    if name == "f0":
        return TruncatedSeries.identity(order)
    if name == "f1":
        return TruncatedSeries.from_coeffs([0, 0, 1], order)
    if name == "f2":
        return TruncatedSeries.from_coeffs([0, 0, 0, 1], order)
    if name == "f3":
        return mobius_schwarz(F3_T0, order, sign=+1)
    if name == "f4":
        # sign=+1 is the variant that actually attains the sharp Hankel
        # value (second free parameter +1, matching the global search);
        # the sign=-1 variant reaches only ~0.0061295.
        return mobius_schwarz(F4_T0, order, sign=+1)
    raise UnknownExtremal(f"unknown extremal function {name!r}")


def named_extremal(name: str, order: int = DEFAULT_ORDER) -> CoeffVector:
    """Taylor coefficients of one of the five sharpness constructions."""
    if order < 3:
        raise ValueError("order must be >= 3")
    return f_from_schwarz(extremal_schwarz(name, order), order)


def verify_membership(
    f: Union[CoeffVector, TruncatedSeries], omega: TruncatedSeries
) -> float:
    """Residual of the defining identity 1 + z f''/f' = e^{w(z)}.

    Returns the max coefficient deviation at the largest order where both
    sides are exact; ~0 certifies the construction.
    """
    fs = f.series() if isinstance(f, CoeffVector) else f
    n = fs.order - 1  # z f''/f' is exact through z^(N-1)
    fp = fs.derivative().resize(n)
    fpp = fs.derivative().derivative().resize(n)
    lhs = fpp.shift_up().div(fp) + 1.0
    rhs = omega.resize(n).exp()
    return lhs.max_deviation(rhs)
