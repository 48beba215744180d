import math

import numpy as np
import pytest

from helpers import SCENARIO_A, SCENARIO_B, SCENARIO_C, cfg, random_config
from satgame import (
    OutcomeKind,
    SimulationParams,
    TargetPolicy,
    analysis,
    distance,
    oracle_escape_time,
    oracle_interception,
    simulate,
    strategy,
)
from satgame.geometry import Point2

DEG = math.pi / 180
ORACLE = SimulationParams(dt=1e-4)


def test_params_validation():
    with pytest.raises(ValueError):
        SimulationParams(dt=0)
    with pytest.raises(ValueError):
        SimulationParams(capture_tol=-1)


def test_escape_forty_five_degrees():
    out = simulate(cfg(SCENARIO_A), "away-sensor", ORACLE)
    assert out.kind is OutcomeKind.ESCAPE
    assert out.t_final == pytest.approx(1.0321, abs=1e-3)


def test_capture_fleeing_attacker():
    c = cfg(SCENARIO_A)
    out = simulate(c, "away-attacker", ORACLE)
    assert out.kind is OutcomeKind.CAPTURE
    assert out.t_final < 12.2914
    assert out.t_final == pytest.approx(c.geometry.d_at0 / (c.v_a - c.v_t), abs=1e-4)


def test_capture_below_threshold():
    c = cfg(SCENARIO_B)
    assert simulate(c, TargetPolicy.fixed(c.geometry.theta_st0)).kind is OutcomeKind.CAPTURE


def test_escape_section_c():
    assert simulate(cfg(SCENARIO_C), "best-escape").kind is OutcomeKind.ESCAPE


def test_trajectory_exact_straight_lines():
    c = cfg(SCENARIO_A)
    out = simulate(c, "fixed:60", ORACLE)
    s = out.strategy
    tr = out.trajectory
    assert np.all(np.diff(tr.times) > 0)
    for pos, p0, v, g in ((tr.s, c.s0, c.v_s, s.gamma_s), (tr.a, c.a0, c.v_a, s.gamma_a), (tr.t, c.t0, c.v_t, s.gamma_t)):
        expect = np.column_stack((p0.x + v * tr.times * math.cos(g), p0.y + v * tr.times * math.sin(g)))
        np.testing.assert_allclose(pos, expect, rtol=1e-12, atol=1e-12)
        steps = np.hypot(*np.diff(pos[:-1], axis=0).T)
        np.testing.assert_allclose(steps, v * ORACLE.dt, rtol=1e-9)


def test_outcome_invariants():
    rng = np.random.default_rng(31)
    for _ in range(30):
        c = random_config(rng)
        out = simulate(c, TargetPolicy.fixed(rng.uniform(-math.pi, math.pi)))
        tr = out.trajectory
        d_st = np.hypot(*(tr.t - tr.s).T)
        d_at = np.hypot(*(tr.t - tr.a).T)
        if out.kind is OutcomeKind.CAPTURE:
            assert d_at[-1] <= 1e-6 + 1e-12
            assert np.all(d_st < c.r)
        else:
            assert out.kind is OutcomeKind.ESCAPE
            assert d_st[-1] == pytest.approx(c.r, abs=1e-9)
            assert np.all(d_at[:-1] > 1e-6)


def test_lemma1_collinearity():
    c = cfg(SCENARIO_A)
    out = simulate(c, "fixed:60", ORACLE)
    s_f, t_f = Point2(*out.trajectory.s[-1]), Point2(*out.trajectory.t[-1])
    assert distance(s_f, t_f) == pytest.approx(c.r, abs=1e-9)
    assert distance(c.s0, s_f) + distance(s_f, t_f) == pytest.approx(distance(c.s0, t_f), abs=1e-9)


@pytest.mark.parametrize("heading, time", [(45, 1.0321), (60, 1.0794)])
def test_oracle_escape_time_table(heading, time):
    assert oracle_escape_time(cfg(SCENARIO_A), heading * DEG) == pytest.approx(time, abs=1e-3)


def test_oracle_escape_time_at_boundary():
    c = cfg(SCENARIO_B, t0=(2 - 1e-9, 0.0))
    assert oracle_escape_time(c, 0.0) == pytest.approx(0.0, abs=1e-6)


def test_oracle_interception_tail_chase_section_a():
    c = cfg(SCENARIO_A)
    res = oracle_interception(c, c.geometry.theta_at0)
    assert res.intercept_time == pytest.approx(1.7678 / 0.65, abs=1e-3)
    assert res.miss_distance <= 1e-6


def test_oracle_interception_inside_sensable():
    c = cfg(SCENARIO_B)
    for h in np.linspace(-math.pi, math.pi, 24, endpoint=False):
        res = oracle_interception(c, h)
        assert res.miss_distance <= 1e-6
        s = float(analysis.apollonius(c).ray_distance(c.t0, h))
        assert res.intercept_time == pytest.approx(s / c.v_t, abs=1e-4)


def test_best_escape_breaches_section_b():
    c = cfg(SCENARIO_B, v_t=0.35)
    out = simulate(c, "best-escape", ORACLE)
    assert out.kind is OutcomeKind.ESCAPE
    d_at = np.hypot(*(out.trajectory.t - out.trajectory.a).T)
    assert d_at.min() > 1e-6


def test_timeout():
    out = simulate(cfg(SCENARIO_A), "away-attacker", SimulationParams(max_time=0.5))
    assert out.kind is OutcomeKind.TIMEOUT
    assert out.t_final == pytest.approx(0.5)


def test_no_timeout_with_double_escape_time():
    rng = np.random.default_rng(32)
    for _ in range(20):
        c = random_config(rng)
        h = rng.uniform(-math.pi, math.pi)
        tf = analysis.escape_distance(c, h).escape_time
        out = simulate(c, TargetPolicy.fixed(h), SimulationParams(max_time=2 * tf + 1e-3))
        assert out.kind is not OutcomeKind.TIMEOUT


def test_tie_goes_to_capture():
    """Place the attacker so it meets the target exactly on the sensing circle."""
    base = cfg(SCENARIO_A)
    h = 45 * DEG
    esc = analysis.escape_distance(base, h)
    t_f = esc.escape_time
    # attacker starts on the far side of the escape point, head-on, same arrival time
    a0 = esc.escape_point + Point2(math.cos(h), math.sin(h)) * (base.v_a * t_f)
    c = cfg(SCENARIO_A, a0=(a0.x, a0.y))
    out = simulate(c, TargetPolicy.fixed(h), ORACLE)
    assert out.kind is OutcomeKind.CAPTURE
    assert out.t_final == pytest.approx(t_f, abs=1e-6)


def test_trajectory_csv_stride():
    out = simulate(cfg(SCENARIO_A), "away-sensor", SimulationParams(dt=1e-2))
    text = out.trajectory.to_csv(stride=10)
    lines = text.strip().splitlines()
    assert lines[0] == "time,sx,sy,ax,ay,tx,ty"
    n = len(out.trajectory)
    assert len(lines) - 1 == len(range(0, n, 10)) + (0 if (n - 1) % 10 == 0 else 1)
    assert float(lines[-1].split(",")[0]) == pytest.approx(out.t_final)
