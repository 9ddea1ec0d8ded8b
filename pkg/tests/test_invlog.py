"""Tests for the inverse logarithmic coefficients Gamma_n."""

import cmath
import math

import pytest
from hypothesis import given, settings, strategies as st

from coeffatlas.cara import TauTriple
from coeffatlas.ceclass import CoeffVector, named_extremal
from coeffatlas.invlog import (
    GammaVector,
    NotEnoughCoefficients,
    gamma3_magnitude,
    gamma_from_a,
    gamma_from_reversion,
    gamma_from_tau,
)

bounded_complex = st.builds(
    complex,
    st.floats(-3.0, 3.0, allow_nan=False),
    st.floats(-3.0, 3.0, allow_nan=False),
)

disk_point = st.builds(
    lambda r, th: math.sqrt(r) * cmath.exp(1j * th),
    st.floats(0.0, 1.0),
    st.floats(0.0, 2.0 * math.pi),
)

tau_triples = st.builds(TauTriple, disk_point, disk_point, disk_point)


class TestGammaVector:
    def test_length_validation(self):
        with pytest.raises(ValueError):
            GammaVector((1, 2))

    def test_one_indexing(self):
        g = GammaVector((0.1, 0.2, 0.3))
        assert g[2] == 0.2

    def test_needs_a4(self):
        with pytest.raises(NotEnoughCoefficients):
            gamma_from_a(CoeffVector((1, 0.5, 0.25)))


class TestClosedForms:
    def test_extremal_spots(self):
        # each named extremal pins one Gamma at its sharp magnitude
        g0 = gamma_from_a(named_extremal("f0", 6))
        assert abs(g0[1] + 0.25) < 1e-12
        g1 = gamma_from_a(named_extremal("f1", 6))
        assert abs(g1[1]) < 1e-14
        assert abs(g1[2] + 1 / 12) < 1e-12
        g2 = gamma_from_a(named_extremal("f2", 6))
        assert abs(abs(g2[3]) - 1 / 24) < 1e-12

    @given(st.lists(bounded_complex, min_size=4, max_size=4))
    @settings(max_examples=60, deadline=None)
    def test_matches_reversion_route(self, tail):
        a = CoeffVector((1,) + tuple(tail))
        closed = gamma_from_a(a)
        reverted = gamma_from_reversion(a)
        for n in (1, 2, 3, 4):
            assert abs(closed[n] - reverted[n]) < 1e-8

    def test_reversion_order_floor(self):
        with pytest.raises(ValueError):
            gamma_from_reversion(CoeffVector((1, 0.5, 0.25, 0.1)), order=4)


class TestTauRoute:
    @given(tau_triples)
    @settings(max_examples=150, deadline=None)
    def test_gamma3_direct_form(self, t):
        g = gamma_from_tau(t)
        assert abs(abs(g[3]) - gamma3_magnitude(t)) < 1e-12

    @given(tau_triples)
    @settings(max_examples=150, deadline=None)
    def test_sharp_magnitude_bounds(self, t):
        g = gamma_from_tau(t)
        assert abs(g[1]) <= 0.25 + 1e-9
        assert abs(g[2]) <= 1 / 12 + 1e-9
        assert abs(g[3]) <= 1 / 24 + 1e-9

    def test_axis_extremes(self):
        assert abs(abs(gamma_from_tau(TauTriple(1, 0, 0))[1]) - 0.25) < 1e-14
        assert abs(abs(gamma_from_tau(TauTriple(0, 1, 0))[2]) - 1 / 12) < 1e-14
        assert abs(abs(gamma_from_tau(TauTriple(0, 0, 1))[3]) - 1 / 24) < 1e-14
