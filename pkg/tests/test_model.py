import json
import math

import numpy as np
import pytest

from helpers import SCENARIO_A, SCENARIO_B, SCENARIO_C, cfg, random_config
from satgame import ConfigError, EngagementConfig, derive_geometry, load_scenario
from satgame.model import bundled_scenarios, config_from_dict


def test_derive_geometry_section_c():
    g = derive_geometry(cfg(SCENARIO_C))
    assert g.d_st0 == pytest.approx(1.5811, abs=1e-3)
    assert math.degrees(g.theta_st0) == pytest.approx(18.43, abs=0.02)
    assert g.d_at0 == pytest.approx(2.9155, abs=1e-3)
    assert math.degrees(g.theta_at0) == pytest.approx(-120.96, abs=0.02)


def test_speed_ratios():
    g = derive_geometry(cfg(SCENARIO_B))
    assert g.nu == pytest.approx(0.390625, rel=1e-15)
    assert g.mu == pytest.approx(0.32, rel=1e-15)


def test_section_a_geometry():
    g = cfg(SCENARIO_A).geometry
    assert g.d_st0 == pytest.approx(1.7678, abs=1e-4)
    assert g.d_at0 == pytest.approx(1.7678, abs=1e-4)
    assert math.degrees(g.theta_st0) == pytest.approx(45.0)
    assert math.degrees(g.theta_at0) == pytest.approx(-81.86, abs=0.02)


@pytest.mark.parametrize(
    "over, field",
    [
        (dict(v_t=1.0), "v_t"),
        (dict(v_s=0.4), "v_t"),
        (dict(v_s=0.0), "v_t"),
        (dict(t0=(3, 0)), "t0"),
        (dict(t0=(2, 0)), "t0"),
        (dict(t0=(0, 0)), "t0"),
        (dict(a0=(1, 0.5)), "a0"),
        (dict(r=-1.0), "r"),
    ],
)
def test_validation_errors(over, field):
    with pytest.raises(ConfigError) as err:
        cfg(SCENARIO_B, **over)
    assert field in [f for f, _ in err.value.problems]


def test_validation_reports_each_problem():
    with pytest.raises(ConfigError) as err:
        cfg(SCENARIO_B, v_t=2.0, t0=(5, 0))
    fields = [f for f, _ in err.value.problems]
    assert "v_t" in fields and "t0" in fields


def test_product_identity():
    rng = np.random.default_rng(3)
    for _ in range(50):
        c = random_config(rng)
        g = c.geometry
        assert g.nu * g.mu == pytest.approx(c.v_s / c.v_a, rel=1e-14)


def test_config_from_dict_field_errors():
    with pytest.raises(ConfigError) as err:
        config_from_dict({"s0": [0, 0], "a0": [1], "t0": "x", "v_s": "fast", "v_t": 0.3, "v_a": 1})
    fields = {f for f, _ in err.value.problems}
    assert fields == {"a0", "t0", "v_s", "r"}


def test_bundled_scenarios_load():
    assert bundled_scenarios() == ["capture", "escape", "headings", "tangent"]
    for name in bundled_scenarios():
        c, doc = load_scenario(name)
        assert isinstance(c, EngagementConfig)
        assert not any("deg" in k or "heading" in k for k in doc)


def test_load_scenario_from_path(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps(cfg(SCENARIO_A).to_dict()))
    c, _ = load_scenario(path)
    assert c == cfg(SCENARIO_A)


def test_tab1_uses_consistent_target_start():
    c, _ = load_scenario("headings")
    assert (c.t0.x, c.t0.y) == (1.25, 1.25)
