import math
from fractions import Fraction as F

import mpmath
import pytest

from rational_trees import analysis
from rational_trees.analysis import (
    below_gamma,
    divergence_report,
    fixed_point_residual,
    fixed_points,
    iterate_fk,
    orbit_exact,
    orbit_float,
)
from rational_trees.sequences import terms
from rational_trees.trees import TreeKind

from oracles import k4_orbit

KS = range(4, 11)


def _gamma_mp(k):
    with mpmath.workdps(60):
        return (1 - mpmath.sqrt(1 - mpmath.mpf(4) / k)) / 2


def test_fixed_points_k4_double_root():
    fp = fixed_points(4)
    assert fp.gamma == fp.delta == 0.5
    assert fp.gamma + fp.delta == 1


@pytest.mark.parametrize("k", KS)
def test_fixed_points_against_high_precision(k):
    fp = fixed_points(k)
    g = _gamma_mp(k)
    assert abs(fp.gamma - float(g)) <= 2**-40 * fp.gamma
    assert abs(fp.delta - float(1 - g)) <= 2**-40 * fp.delta
    assert 0 < fp.gamma <= fp.delta < 1
    assert fp.gamma + fp.delta == pytest.approx(1, abs=1e-15)
    assert fp.gamma * fp.delta == pytest.approx(1 / k, rel=1e-14)
    for r in fp.residuals():
        assert abs(r) <= 1e-12


def test_gamma_five():
    assert fixed_points(5).gamma == pytest.approx((1 - math.sqrt(1 / 5)) / 2, rel=1e-15)
    assert fixed_points(5).gamma == pytest.approx(0.2763932, abs=1e-7)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_fixed_points_rejects_small_k(k):
    with pytest.raises(ValueError, match="only for k >= 4"):
        fixed_points(k)


def test_exact_residual():
    assert fixed_point_residual(4, F(1, 2)) == 0
    assert fixed_point_residual(5, F(1, 4)) == F(1, 16)


@pytest.mark.parametrize("k, steps, expected", [(4, 1, F(1, 4)), (5, 2, F(1, 4)), (4, 3, F(3, 8))])
def test_iterate_exact_examples(k, steps, expected):
    assert iterate_fk(k, steps, "exact").last == expected


def test_k4_orbit_matches_closed_form():
    assert orbit_exact(4, 200) == [k4_orbit(n) for n in range(201)]


def test_exact_step_limit():
    with pytest.raises(ValueError):
        iterate_fk(5, 201, "exact")


@pytest.mark.parametrize("k", KS)
def test_exact_orbit_confined_and_increasing(k):
    orbit = orbit_exact(k, 100)
    assert all(x < y for x, y in zip(orbit, orbit[1:]))
    assert all(below_gamma(k, u) for u in orbit)
    assert iterate_fk(k, 100, "exact").monotone_increasing


def test_below_gamma_exact():
    assert below_gamma(5, F(27, 100))
    assert not below_gamma(5, F(28, 100))
    assert not below_gamma(4, F(1, 2))
    assert below_gamma(4, F(499, 1000))


@pytest.mark.parametrize("k", KS)
def test_float_orbit_tracks_exact(k):
    exact = orbit_exact(k, 100)
    floats = orbit_float(k, 100)
    for e, f in zip(exact, floats):
        assert abs(float(e) - f) < 1e-14


@pytest.mark.parametrize("k", KS)
def test_float_orbit_tracks_high_precision(k):
    with mpmath.workdps(60):
        u = mpmath.mpf(0)
        for _ in range(10_000):
            u = 1 / (k * (1 - u))
        ref = float(u)
    assert orbit_float(k, 10_000)[-1] == pytest.approx(ref, abs=1e-15)


@pytest.mark.parametrize("k", KS)
def test_divergence_report(k):
    report = divergence_report(k, 10_000, 2)
    assert report.monotone_increasing
    assert report.bounded_by_gamma
    assert report.witness_missing == 2
    assert abs(report.final_gap) < (1e-3 if k == 4 else 1e-6)


def test_k4_gap_matches_closed_form():
    report = divergence_report(4, 10_000, 1)
    assert report.final_gap == pytest.approx(float(F(1, 2) - k4_orbit(10_000)), rel=1e-9)


def test_witness_must_exceed_gamma():
    with pytest.raises(ValueError, match="witness must exceed gamma"):
        divergence_report(5, 100, F(1, 4))


def test_saturation_rule_rejects_decrease():
    assert not analysis._float_monotone(5, [0.0, 0.2, 0.1])
    assert not analysis._float_monotone(5, [0.0, 0.1, 0.1])
    g = fixed_points(5).gamma
    assert analysis._float_monotone(5, [0.0, g, g])


@pytest.mark.parametrize("kind", list(TreeKind))
def test_small_k_is_not_confined(kind):
    # the same recurrence with k <= 3 reaches 1 within five terms
    assert 1 in terms(kind, 5)
    assert iterate_fk(kind.multiplier, 5, "exact").last > 0
    assert max(orbit_exact(kind.multiplier, 5)) >= 1
