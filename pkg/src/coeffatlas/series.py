"""Truncated formal power-series algebra over complex scalars.

Every series carries a fixed truncation order N and exactly N+1
coefficients c[0..N].  All arithmetic truncates back to the same order;
binary operations require equal orders (use :meth:`TruncatedSeries.resize`
to pad or cut explicitly).  Values are immutable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

Complex = complex


class OrderMismatch(ValueError):
    """Binary operation on series of different truncation orders."""


class DivisionBySingular(ZeroDivisionError):
    """Division by a series with zero constant term."""


class NonzeroConstantTerm(ValueError):
    """exp() requires a series with zero constant term."""


class NonUnitConstantTerm(ValueError):
    """log() requires a series with constant term 1."""


class CompositionNotFormal(ValueError):
    """Composition requires an inner series with zero constant term."""


class NotNormalized(ValueError):
    """Reversion requires f(0) = 0 and f'(0) = 1."""


@dataclass(frozen=True)
class TruncatedSeries:
    """Polynomial representative c[0] + c[1] z + ... + c[N] z^N."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be >= 0, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Complex], order: int | None = None) -> "TruncatedSeries":
        """Build a series from low-to-high coefficients, zero-padded to `order`."""
        cs = [complex(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1 if cs else 0
        if len(cs) < order + 1:
            cs += [0j] * (order + 1 - len(cs))
        return cls(order, tuple(cs[: order + 1]))

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls(order, (0j,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_coeffs([1.0], order)

    @classmethod
    def identity(cls, order: int) -> "TruncatedSeries":
        """The series z."""
        return cls.from_coeffs([0.0, 1.0], order)

    # -- basic ring structure ----------------------------------------------

    def _check_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise OrderMismatch(f"orders differ: {self.order} != {other.order}")

    def resize(self, order: int) -> "TruncatedSeries":
        """Pad with zeros or truncate to the requested order."""
        return TruncatedSeries.from_coeffs(self.coeffs[: order + 1], order)

    def __add__(self, other: Union["TruncatedSeries", Complex]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            cs = list(self.coeffs)
            cs[0] += complex(other)
            return TruncatedSeries(self.order, tuple(cs))
        self._check_order(other)
        return TruncatedSeries(
            self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other: Union["TruncatedSeries", Complex]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self + (-complex(other))
        return self + (-other)

    def __rsub__(self, other: Complex) -> "TruncatedSeries":
        return (-self) + complex(other)

    def __mul__(self, other: Union["TruncatedSeries", Complex]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            w = complex(other)
            return TruncatedSeries(self.order, tuple(w * c for c in self.coeffs))
        self._check_order(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = [0j] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(n + 1 - i):
                out[i + j] += ai * b[j]
        return TruncatedSeries(n, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other: Union["TruncatedSeries", Complex]) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return self * (1.0 / complex(other))
        return self.div(other)

    def div(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Long division; requires a nonzero constant term in the divisor."""
        self._check_order(other)
        if other.coeffs[0] == 0:
            raise DivisionBySingular("divisor has zero constant term")
        n = self.order
        a, b = self.coeffs, other.coeffs
        q = [0j] * (n + 1)
        b0 = b[0]
        for k in range(n + 1):
            acc = a[k]
            for j in range(1, k + 1):
                acc -= b[j] * q[k - j]
            q[k] = acc / b0
        return TruncatedSeries(n, tuple(q))

    # -- transcendental maps -----------------------------------------------

    def exp(self) -> "TruncatedSeries":
        """Series exponential via the differential recurrence E' = a' E."""
        if self.coeffs[0] != 0:
            raise NonzeroConstantTerm("exp requires zero constant term")
        n = self.order
        a = self.coeffs
        e = [0j] * (n + 1)
        e[0] = 1.0 + 0j
        for m in range(1, n + 1):
            acc = 0j
            for k in range(1, m + 1):
                acc += k * a[k] * e[m - k]
            e[m] = acc / m
        return TruncatedSeries(n, tuple(e))

    def log(self) -> "TruncatedSeries":
        """Series logarithm via L' = a'/a; requires constant term 1."""
        if self.coeffs[0] != 1:
            raise NonUnitConstantTerm("log requires constant term 1")
        n = self.order
        a = self.coeffs
        lg = [0j] * (n + 1)
        for m in range(1, n + 1):
            acc = m * a[m]
            for k in range(1, m):
                acc -= k * lg[k] * a[m - k]
            lg[m] = acc / m
        return TruncatedSeries(n, tuple(lg))

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(z)); Horner evaluation in the truncated ring."""
        self._check_order(inner)
        if inner.coeffs[0] != 0:
            raise CompositionNotFormal("inner series must have zero constant term")
        n = self.order
        acc = TruncatedSeries.from_coeffs([self.coeffs[n]], n)
        for k in range(n - 1, -1, -1):
            acc = acc * inner + self.coeffs[k]
        return acc

    def revert(self) -> "TruncatedSeries":
        """Compositional inverse by Newton iteration on the residual f(g) - z."""
        if self.coeffs[0] != 0 or self.coeffs[1] != 1:
            raise NotNormalized("reversion requires f(0) = 0, f'(0) = 1")
        n = self.order
        ident = TruncatedSeries.identity(n)
        fprime = self.derivative_same_order()
        g = ident
        for _ in range(max(1, math.ceil(math.log2(n + 1))) + 2):
            residual = self.compose(g) - ident
            g = g - residual.div(fprime.compose(g))
        return g

    # -- calculus ----------------------------------------------------------

    def derivative(self) -> "TruncatedSeries":
        """Termwise derivative; the order drops by one."""
        if self.order == 0:
            return TruncatedSeries.zero(0)
        cs = tuple(k * self.coeffs[k] for k in range(1, self.order + 1))
        return TruncatedSeries(self.order - 1, cs)

    def derivative_same_order(self) -> "TruncatedSeries":
        """Derivative padded back to the original order (top coefficient unknown, set 0)."""
        return self.derivative().resize(self.order)

    def integrate(self) -> "TruncatedSeries":
        """Termwise antiderivative with zero constant term, truncated at the
        same order (the input's top coefficient would feed z^(N+1) and is dropped)."""
        n = self.order
        out = [0j] * (n + 1)
        for k in range(n):
            out[k + 1] = self.coeffs[k] / (k + 1)
        return TruncatedSeries(n, tuple(out))

    def shift_down(self) -> "TruncatedSeries":
        """Divide by z; requires zero constant term.  Top coefficient becomes 0."""
        if self.coeffs[0] != 0:
            raise DivisionBySingular("cannot divide by z: nonzero constant term")
        cs = list(self.coeffs[1:]) + [0j]
        return TruncatedSeries(self.order, tuple(cs))

    def shift_up(self) -> "TruncatedSeries":
        """Multiply by z, truncating the top coefficient."""
        cs = [0j] + list(self.coeffs[:-1])
        return TruncatedSeries(self.order, tuple(cs))

    # -- comparisons / inspection ------------------------------------------

    def max_deviation(self, other: "TruncatedSeries") -> float:
        """Max coefficient-wise absolute difference at the common order."""
        m = min(self.order, other.order)
        return max(
            abs(self.coeffs[k] - other.coeffs[k]) for k in range(m + 1)
        )

    def __str__(self) -> str:
        return self.render()

    def render(self, precision: int = 6) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if c.imag == 0:
                val = f"{c.real:.{precision}g}"
            else:
                val = f"({c.real:.{precision}g}{c.imag:+.{precision}g}j)"
            terms.append(val if k == 0 else (f"{val} z" if k == 1 else f"{val} z^{k}"))
        return " + ".join(terms) if terms else "0"


def geometric(ratio: Complex, order: int) -> TruncatedSeries:
    """1/(1 - ratio*z) as a truncated series."""
    cs, c = [], 1.0 + 0j
    for _ in range(order + 1):
        cs.append(c)
        c *= ratio
    return TruncatedSeries.from_coeffs(cs, order)
