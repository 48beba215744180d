"""Acceptance criteria, one test each, at their stated tolerances.

Run with ``pytest tests/test_acceptance.py``; a PASS/FAIL line per
criterion is printed in the terminal summary.
"""

import math

import numpy as np
import pytest

from helpers import random_config
from satgame import (
    OutcomeKind,
    Point2,
    SimulationParams,
    TargetPolicy,
    analysis,
    distance,
    load_scenario,
    oracle_escape_time,
    oracle_interception,
    simulate,
)
from satgame.strategy import target_heading

DEG = math.pi / 180
DT = 1e-4
N_RANDOM = 100


def scenario(name, **over):
    c, _ = load_scenario(name)
    return c.with_target_speed(over["v_t"]) if "v_t" in over else c


@pytest.mark.criterion(1, "Reference heading escape distances and times (+-1e-3)")
def test_ac1_table_one():
    c = scenario("headings")
    rows = [
        (TargetPolicy.parse("away-attacker"), 4.3020, 12.2914),
        (TargetPolicy.fixed(45 * DEG), 0.3613, 1.0321),
        (TargetPolicy.fixed(60 * DEG), 0.3778, 1.0794),
    ]
    for policy, dist, time in rows:
        sol = analysis.escape_distance(c, target_heading(policy, c))
        assert sol.escape_distance == pytest.approx(dist, abs=1e-3), policy
        assert sol.escape_time == pytest.approx(time, abs=1e-3), policy


@pytest.mark.criterion(2, "Lower speed bound 0.3217 and capture/escape at 0.32/0.35/0.325")
def test_ac2_lower_bound():
    c = scenario("capture")
    assert analysis.speed_bounds(c).v_lower == pytest.approx(0.3217, abs=1e-3)
    params = SimulationParams(dt=DT)
    assert simulate(c.with_target_speed(0.32), "best-escape", params).kind is OutcomeKind.CAPTURE
    assert simulate(c.with_target_speed(0.35), "best-escape", params).kind is OutcomeKind.ESCAPE
    assert simulate(c.with_target_speed(0.325), "best-escape", params).kind is OutcomeKind.CAPTURE


@pytest.mark.criterion(3, "Upper speed bound 0.5181; breach and escape at 0.5190")
def test_ac3_upper_bound():
    c = scenario("escape")
    assert analysis.speed_bounds(c).v_upper == pytest.approx(0.5181, abs=1e-3)
    fast = c.with_target_speed(0.5190)
    assert not analysis.capture_guaranteed(fast).contained
    assert simulate(fast, "best-escape", SimulationParams(dt=DT)).kind is OutcomeKind.ESCAPE


@pytest.mark.criterion(4, "Tangency quadratic roots 0.1765/0.4896, 0.4896 selected in [0.3879, 0.5181]")
def test_ac4_tangent_quadratic():
    c = scenario("tangent")
    roots = sorted(analysis.tangent_quadratic(c).roots())
    assert roots == pytest.approx([0.1765, 0.4896], abs=1e-3)
    assert analysis.tangent_escape_speed(c) == pytest.approx(0.4896, abs=1e-3)
    b = analysis.speed_bounds(c)
    assert b.v_lower == pytest.approx(0.3879, abs=1e-3)
    assert b.v_upper == pytest.approx(0.5181, abs=1e-3)
    assert b.v_lower <= analysis.tangent_escape_speed(c) <= b.v_upper


@pytest.mark.criterion(5, "Simulated vs closed-form escape time, 100 random configs, <= v_t dt + 1e-6")
def test_ac5_oracle_equivalence():
    rng = np.random.default_rng(2025)
    params = SimulationParams(dt=DT)
    for _ in range(N_RANDOM):
        c = random_config(rng)
        h = rng.uniform(-math.pi, math.pi)
        analytic = analysis.escape_distance(c, h).escape_time
        simulated = oracle_escape_time(c, h, params)
        assert abs(simulated - analytic) <= c.v_t * DT + 1e-6


@pytest.mark.criterion(6, "Apollonius ratio at 32 samples (1e-9) and center offset (1e-9 rel)")
def test_ac6_apollonius_properties():
    rng = np.random.default_rng(6)
    for c in [scenario(n) for n in ("headings", "capture", "escape", "tangent")] + [random_config(rng) for _ in range(20)]:
        circle = analysis.apollonius(c)
        mu, d_at = c.geometry.mu, c.geometry.d_at0
        for p in circle.sample(32):
            p = Point2(*p)
            assert abs(distance(p, c.t0) / distance(p, c.a0) - mu) < 1e-9
        assert distance(circle.center, c.t0) == pytest.approx(mu**2 / (1 - mu**2) * d_at, rel=1e-9)


@pytest.mark.criterion(7, "Containment verdict matches best-escape simulation, 100 non-tangent configs")
def test_ac7_lemma_consistency():
    rng = np.random.default_rng(7)
    params = SimulationParams(dt=1e-3)
    checked = contained = 0
    while checked < N_RANDOM:
        c = random_config(rng)
        verdict = analysis.capture_guaranteed(c)
        eps = 1e-6 * c.r
        if abs(verdict.min_margin) < 10 * eps:
            continue
        checked += 1
        contained += verdict.contained
        out = simulate(c, "best-escape", params)
        expected = OutcomeKind.CAPTURE if verdict.contained else OutcomeKind.ESCAPE
        assert out.kind is expected, c
    assert 0 < contained < N_RANDOM  # both verdicts exercised


@pytest.mark.criterion(8, "Faster target: Apollonius radius grows, sensable distances shrink (20 configs)")
def test_ac8_monotone_nesting():
    rng = np.random.default_rng(8)
    for _ in range(20):
        c = random_config(rng)
        v1, v2 = np.sort(rng.uniform(c.v_s, c.v_a, size=2))
        if v2 - v1 < 1e-6 or v1 <= c.v_s:
            continue
        c1, c2 = c.with_target_speed(v1), c.with_target_speed(v2)
        assert analysis.apollonius(c2).radius > analysis.apollonius(c1).radius
        b1 = analysis.sensable_boundary(c1, 512)
        b2 = analysis.sensable_boundary(c2, 512)
        assert np.all(b2.escape_distances <= b1.escape_distances)


@pytest.mark.criterion(9, "Bisection critical speed vs tangency speed on the tangent scenario (<= 5e-3)")
def test_ac9_bisection_quadratic_agreement():
    c = scenario("tangent")
    bisected = analysis.critical_speed(c, tol=1e-4, n=512)
    tangent = analysis.tangent_escape_speed(c)
    assert abs(bisected - tangent) <= 5e-3, (bisected, tangent)


@pytest.mark.criterion(10, "Tail-chase intercept time d_at0/(v_a - v_t) within dt (20 configs)")
def test_ac10_tail_chase():
    rng = np.random.default_rng(10)
    params = SimulationParams(dt=DT)
    for _ in range(20):
        c = random_config(rng)
        g = c.geometry
        res = oracle_interception(c, g.theta_at0, params)
        assert res.intercept_time == pytest.approx(g.d_at0 / (c.v_a - c.v_t), abs=DT)
        assert res.miss_distance <= params.capture_tol
