import math

import numpy as np

from satgame import EngagementConfig

SCENARIO_A = dict(s0=(0, 0), a0=(1, 3), t0=(1.25, 1.25), v_s=0.125, v_t=0.35, v_a=1.0, r=2.0)
SCENARIO_B = dict(s0=(0, 0), a0=(-2, 1), t0=(1, 0.5), v_s=0.125, v_t=0.32, v_a=1.0, r=2.0)
SCENARIO_C = dict(s0=(0, 0), a0=(3, 3), t0=(1.5, 0.5), v_s=0.3, v_t=0.519, v_a=1.0, r=2.0)
SCENARIO_D = dict(SCENARIO_C, v_t=0.4896)


def cfg(base, **over):
    return EngagementConfig(**{**base, **over})


def random_config(rng: np.random.Generator) -> EngagementConfig:
    r = rng.uniform(1.0, 3.0)
    s0 = rng.uniform(-2, 2, size=2)
    phi, psi = rng.uniform(-math.pi, math.pi, size=2)
    t0 = s0 + rng.uniform(0.1, 0.9) * r * np.array([math.cos(phi), math.sin(phi)])
    a0 = t0 + rng.uniform(0.3, 4.0) * r * np.array([math.cos(psi), math.sin(psi)])
    v_a = rng.uniform(0.8, 1.5)
    v_t = v_a * rng.uniform(0.15, 0.9)
    v_s = v_t * rng.uniform(0.1, 0.9)
    return EngagementConfig(s0=tuple(s0), a0=tuple(a0), t0=tuple(t0), v_s=v_s, v_t=v_t, v_a=v_a, r=r)
