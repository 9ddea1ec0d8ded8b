"""Unit and property tests for the truncated power-series algebra."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from coeffatlas.series import (
    CompositionNotFormal,
    DivisionBySingular,
    NonUnitConstantTerm,
    NonzeroConstantTerm,
    NotNormalized,
    OrderMismatch,
    TruncatedSeries,
    geometric,
)

small_complex = st.builds(
    complex,
    st.floats(-2.0, 2.0, allow_nan=False),
    st.floats(-2.0, 2.0, allow_nan=False),
)


def coeff_lists(length):
    return st.lists(small_complex, min_size=length, max_size=length)


class TestConstruction:
    def test_from_coeffs_pads(self):
        s = TruncatedSeries.from_coeffs([1, 2], 4)
        assert s.order == 4
        assert s.coeffs == (1, 2, 0, 0, 0)

    def test_from_coeffs_truncates(self):
        s = TruncatedSeries.from_coeffs([1, 2, 3, 4], 2)
        assert s.coeffs == (1, 2, 3)

    def test_length_must_match_order(self):
        with pytest.raises(ValueError):
            TruncatedSeries(3, (1, 2))

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries(-1, ())

    def test_identity_and_one(self):
        assert TruncatedSeries.identity(3).coeffs == (0, 1, 0, 0)
        assert TruncatedSeries.one(2).coeffs == (1, 0, 0)


class TestRing:
    def test_order_mismatch(self):
        a = TruncatedSeries.one(2)
        b = TruncatedSeries.one(3)
        with pytest.raises(OrderMismatch):
            a + b
        with pytest.raises(OrderMismatch):
            a * b

    def test_scalar_arithmetic(self):
        z = TruncatedSeries.identity(3)
        assert (2 * z + 1 - z).coeffs == (1, 1, 0, 0)
        assert (1 - z).coeffs == (1, -1, 0, 0)

    @given(coeff_lists(6), coeff_lists(6))
    @settings(max_examples=50, deadline=None)
    def test_mul_matches_convolution(self, xs, ys):
        a = TruncatedSeries.from_coeffs(xs)
        b = TruncatedSeries.from_coeffs(ys)
        full = np.convolve(xs, ys)[:6]
        assert np.allclose((a * b).coeffs, full, atol=1e-9)

    @given(coeff_lists(6))
    @settings(max_examples=50, deadline=None)
    def test_div_inverts_mul(self, xs):
        xs[0] = xs[0] + 3.0  # keep the constant term well away from zero
        a = TruncatedSeries.from_coeffs(xs)
        b = TruncatedSeries.from_coeffs([1, -0.5, 0.25], 5)
        assert (a * b).div(b).max_deviation(a) < 1e-9

    def test_div_by_singular(self):
        with pytest.raises(DivisionBySingular):
            TruncatedSeries.one(3).div(TruncatedSeries.identity(3))

    def test_geometric_is_reciprocal(self):
        g = geometric(0.7, 8)
        one = (1 - 0.7 * TruncatedSeries.identity(8)) * g
        assert one.max_deviation(TruncatedSeries.one(8)) < 1e-12


class TestTranscendental:
    def test_exp_of_z(self):
        e = TruncatedSeries.identity(7).exp()
        expected = [1 / math.factorial(k) for k in range(8)]
        assert np.allclose(e.coeffs, expected)

    def test_exp_even_spot(self):
        # exp(z^2/2 + z^4/8 + z^6/36) has a clean closed expansion
        arg = TruncatedSeries.from_coeffs([0, 0, 0.5, 0, 0.125, 0, 1 / 36], 6)
        e = arg.exp()
        assert np.allclose(e.coeffs, [1, 0, 0.5, 0, 0.25, 0, 1 / 9])

    def test_exp_requires_zero_constant(self):
        with pytest.raises(NonzeroConstantTerm):
            TruncatedSeries.one(3).exp()

    def test_log_requires_unit_constant(self):
        with pytest.raises(NonUnitConstantTerm):
            TruncatedSeries.identity(3).log()

    @given(coeff_lists(7))
    @settings(max_examples=50, deadline=None)
    def test_log_exp_roundtrip(self, xs):
        xs[0] = 0.0
        a = TruncatedSeries.from_coeffs(xs)
        assert a.exp().log().max_deviation(a) < 1e-8


class TestComposeRevert:
    def test_compose_spot(self):
        outer = TruncatedSeries.from_coeffs([1, 1, 1], 4)  # 1 + w + w^2
        inner = TruncatedSeries.from_coeffs([0, 1, 1], 4)  # z + z^2
        # 1 + (z + z^2) + (z + z^2)^2 = 1 + z + 2z^2 + 2z^3 + z^4
        assert np.allclose(outer.compose(inner).coeffs, [1, 1, 2, 2, 1])

    def test_compose_requires_formal_inner(self):
        s = TruncatedSeries.one(3)
        with pytest.raises(CompositionNotFormal):
            s.compose(TruncatedSeries.one(3))

    def test_revert_koebe(self):
        # z/(1-z)^2 has inverse with signed Catalan coefficients
        z = TruncatedSeries.identity(7)
        koebe = z * geometric(1.0, 7) * geometric(1.0, 7)
        inv = koebe.revert()
        assert np.allclose(inv.coeffs, [0, 1, -2, 5, -14, 42, -132, 429])

    def test_revert_requires_normalization(self):
        with pytest.raises(NotNormalized):
            TruncatedSeries.from_coeffs([0, 2, 1], 4).revert()

    @given(coeff_lists(5))
    @settings(max_examples=30, deadline=None)
    def test_revert_roundtrip(self, xs):
        f = TruncatedSeries.from_coeffs([0, 1] + xs, 7)
        g = f.revert()
        ident = TruncatedSeries.identity(7)
        assert f.compose(g).max_deviation(ident) < 1e-7
        assert g.compose(f).max_deviation(ident) < 1e-7


class TestCalculus:
    def test_derivative_drops_order(self):
        s = TruncatedSeries.from_coeffs([3, 1, 2, 5], 3)
        d = s.derivative()
        assert d.order == 2 and d.coeffs == (1, 4, 15)

    def test_integrate_then_derive(self):
        s = TruncatedSeries.from_coeffs([1, 2, 3, 4, 5], 4)
        back = s.integrate().derivative()
        assert np.allclose(back.coeffs, s.coeffs[:4])

    def test_shift_down_up(self):
        z = TruncatedSeries.from_coeffs([0, 1, 2, 3], 3)
        assert z.shift_down().coeffs == (1, 2, 3, 0)
        assert z.shift_down().shift_up().coeffs == (0, 1, 2, 3)

    def test_shift_down_requires_zero_constant(self):
        with pytest.raises(DivisionBySingular):
            TruncatedSeries.one(3).shift_down()


def test_render():
    s = TruncatedSeries.from_coeffs([1, 0, -0.5], 2)
    assert s.render() == "1 + -0.5 z^2"
    assert str(TruncatedSeries.zero(2)) == "0"
