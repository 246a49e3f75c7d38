import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import minimize_scalar

from nrdcsk.analysis import (
    AnalysisPoint,
    ber_bbj,
    ber_from_moments,
    ber_lower_bound,
    ber_ptj,
    decision_moments,
    golden_section_max,
    _jammed_term,
    _unjammed_term,
    optimal_rho,
)

from oracles import ber_ptj_onoff_mp, ber_ptj_mp

# 50-digit evaluation of the closed form at Eb/N0 = 15 dB, beta = 200, P = 20,
# P_j = 10 dB, rho = 0.5 (see oracles.ber_ptj_mp)
FROZEN_PTJ = 0.032586550116992024553


def pt(ebn0=15.0, jsr=10.0, beta=200, p=20, rho=1.0):
    return AnalysisPoint(ebn0, jsr, beta, p, rho)


def test_frozen_high_precision_value():
    assert float(ber_ptj_mp(15, 10, 200, 20, 0.5)) == pytest.approx(FROZEN_PTJ, abs=1e-18)
    assert ber_ptj(pt(rho=0.5)) == pytest.approx(FROZEN_PTJ, abs=1e-12)


@pytest.mark.parametrize("ebn0, jsr, p, rho", [(5, 5, 1, 0.3), (10, 5, 5, 1.0), (15, 5, 20, 0.3), (20, -3, 10, 0.05)])
def test_matches_arbitrary_precision_oracle(ebn0, jsr, p, rho):
    expected = float(ber_ptj_mp(ebn0, jsr, 200, p, rho))
    assert ber_ptj(pt(ebn0, jsr, 200, p, rho)) == pytest.approx(expected, rel=1e-12, abs=1e-15)


def test_unjammed_limit():
    ref = ber_ptj(AnalysisPoint(12.0, None, 200, 10, 1.0))
    for rho in (0.1, 0.5, 1.0):
        assert ber_ptj(AnalysisPoint(12.0, None, 200, 10, rho)) == pytest.approx(ref, rel=1e-14)
    assert ber_ptj(pt(12.0, 5.0, 200, 10, 1e-6)) == pytest.approx(ref, abs=1e-6)


def test_bbj_is_ptj_at_rho_one():
    for ebn0 in (0, 5, 10, 15, 25):
        for p in (1, 4, 20, 200):
            point = pt(ebn0, 5.0, 200, p, 1.0)
            assert ber_bbj(point) == ber_ptj(point)


def test_bbj_limits_and_noiseless():
    point = pt(10.0, 5.0, 200, 200)
    e_b, n0, p_j = point.powers()
    limit = 0.5 * math.erfc((8 * (p_j + n0 / 2) / e_b) ** -0.5)
    assert ber_bbj(point) > limit
    assert ber_bbj(AnalysisPoint(math.inf, None, 200, 20)) == 0.0
    assert ber_bbj(AnalysisPoint(60.0, None, 200, 20)) < 1e-300


def test_p_monotonicity_spot_value():
    assert ber_bbj(pt(10, 5, 200, 20)) < ber_bbj(pt(10, 5, 200, 1))


def test_lower_bound_is_large_p_limit():
    # beta / p -> 0 at fixed E_b, N0, P_j; the private terms accept a non-integral ratio
    rng = np.random.default_rng(3)
    for _ in range(100):
        ebn0, jsr, rho = rng.uniform(-5, 25), rng.uniform(-20, 20), rng.uniform(1e-3, 1)
        point = AnalysisPoint(ebn0, jsr, 200, 1, rho)
        e_b, n0, p_j = point.powers()
        p = 1e12
        far = rho * _jammed_term(e_b, n0, p_j, 200, p, rho) + (1 - rho) * _unjammed_term(e_b, n0, 200, p)
        assert abs(far - ber_lower_bound(point)) < 1e-9


def test_lower_bound_closed_form_unjammed():
    point = AnalysisPoint(8.0, None, 100, 10)
    e_b, n0, _ = point.powers()
    assert ber_lower_bound(point) == pytest.approx(0.5 * math.erfc((4 * n0 / e_b) ** -0.5), rel=1e-14)


valid_points = st.builds(
    lambda ebn0, jsr, p_exp, rho: AnalysisPoint(ebn0, jsr, 240, [1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 40, 60, 120, 240][p_exp], rho),
    st.floats(-10, 30), st.floats(-30, 30), st.integers(0, 16), st.floats(1e-4, 1.0),
)


@settings(max_examples=200, deadline=None)
@given(valid_points)
def test_bounds(point):
    b = ber_ptj(point)
    assert ber_lower_bound(point) <= b + 1e-15
    assert 0.0 <= b <= 0.5


@settings(max_examples=100, deadline=None)
@given(valid_points, st.floats(0.1, 5.0))
def test_decreasing_in_ebn0(point, step):
    higher = AnalysisPoint(point.ebn0_db + step, point.jsr_db, point.beta, point.p, point.rho)
    assert ber_ptj(higher) <= ber_ptj(point)


def test_strictly_decreasing_in_ebn0_and_nonincreasing_in_p_on_grid():
    for jsr in (-10.0, 0.0, 5.0, 10.0):
        for rho in (0.05, 0.3, 1.0):
            by_ebn0 = [ber_ptj(pt(e, jsr, 200, 10, rho)) for e in np.arange(-5, 20, 2.5)]
            assert all(a > b for a, b in zip(by_ebn0, by_ebn0[1:]))
            by_p = [ber_ptj(pt(10.0, jsr, 200, p, rho)) for p in (1, 2, 5, 10, 20, 50, 100, 200)]
            assert all(a >= b for a, b in zip(by_p, by_p[1:]))


def test_decision_moments():
    mean, var = decision_moments(AnalysisPoint(math.inf, 5.0, 200, 10, 0.5), jammed=False)
    assert mean == pytest.approx(20.0) and var == 0.0
    point = pt(12.0, 3.0, 200, 10, 0.4)
    assert decision_moments(point, True)[1] > decision_moments(point, False)[1]


@pytest.mark.parametrize("ebn0, jsr, p, rho", [(5, 5, 1, 0.3), (12, 3, 10, 0.4), (15, 10, 20, 0.5), (20, -10, 40, 1.0)])
def test_moments_reassemble_closed_form(ebn0, jsr, p, rho):
    point = pt(ebn0, jsr, 200, p, rho)
    on = ber_from_moments(*decision_moments(point, True))
    off = ber_from_moments(*decision_moments(point, False))
    expected = float(ber_ptj_onoff_mp(ebn0, jsr, 200, p, rho))
    assert rho * on + (1 - rho) * off == pytest.approx(expected, rel=1e-12, abs=1e-15)
    assert rho * on + (1 - rho) * off == pytest.approx(ber_ptj(point), rel=1e-12, abs=1e-15)


def test_golden_section_against_brent():
    f = lambda x: -(x - 0.3137) ** 2 + math.sin(3 * x) * 0.01
    ours = golden_section_max(f, 0.0, 1.0, tol=1e-12)
    ref = minimize_scalar(lambda x: -f(x), bounds=(0, 1), method="bounded", options={"xatol": 1e-12}).x
    assert ours == pytest.approx(ref, abs=1e-7)


def test_optimal_rho_reference_point():
    rho, ber = optimal_rho(15.0, 10.0, 200, 20)
    assert rho == pytest.approx(0.24576, abs=1e-3)
    # independent check of the maximizer with a bounded Brent search on the oracle
    ref = minimize_scalar(lambda r: -float(ber_ptj_mp(15, 10, 200, 20, r)), bounds=(0.1, 0.5), method="bounded",
                          options={"xatol": 1e-9}).x
    assert rho == pytest.approx(ref, abs=1e-4)
    assert ber == pytest.approx(ber_ptj(pt(rho=rho)), rel=1e-15)


def test_optimal_rho_extremes():
    assert optimal_rho(15.0, 30.0, 200, 20)[0] == pytest.approx(1.0, abs=1e-6)
    assert optimal_rho(15.0, -30.0, 200, 20)[0] < 1e-3
