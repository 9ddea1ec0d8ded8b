"""Reduced-sample runs of the seeded two-path identity suites."""

from coeffatlas.identities import (
    run_all,
    suite_coefficient_recovery,
    suite_gamma_reversion,
    suite_hankel_determinant,
    suite_hankel_tau,
)


def test_coefficient_recovery():
    result = suite_coefficient_recovery(samples=300, seed=5)
    assert result["passed"]
    assert result["max_deviation"] <= 1e-10


def test_gamma_reversion():
    result = suite_gamma_reversion(samples=300, seed=6)
    assert result["passed"]
    assert result["max_deviation"] <= 1e-10


def test_hankel_determinant():
    result = suite_hankel_determinant(samples=1000, seed=7)
    assert result["passed"]
    assert result["max_deviation"] <= 1e-12


def test_hankel_tau():
    result = suite_hankel_tau(samples=10_000, seed=8)
    assert result["passed"]
    assert result["max_deviation"] <= 1e-12


def test_run_all_is_deterministic():
    a = run_all(samples=200, seed=4)
    b = run_all(samples=200, seed=4)
    assert [r["max_deviation"] for r in a] == [r["max_deviation"] for r in b]
    assert all(r["passed"] for r in a)
