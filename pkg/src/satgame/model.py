"""Engagement configuration, validation and derived initial geometry."""

from __future__ import annotations

import dataclasses
import json
import math
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from pathlib import Path

from .geometry import COINCIDENCE_TOL, Point2, distance, los_angle


class ConfigError(ValueError):
    """Invalid engagement configuration.

    ``problems`` holds one ``(field, message)`` pair per violated condition.
    """

    def __init__(self, problems: list[tuple[str, str]]):
        self.problems = list(problems)
        super().__init__("; ".join(f"{f}: {m}" for f, m in self.problems))


@dataclass(frozen=True)
class DerivedGeometry:
    d_st0: float
    d_at0: float
    theta_st0: float
    theta_at0: float
    nu: float
    mu: float


@dataclass(frozen=True)
class EngagementConfig:
    """Initial positions (m), speeds (m/s) and sensing radius (m).

    Validated on construction: ``0 < v_s < v_t < v_a``, the target starts
    strictly inside the sensing radius, and no two agents that need a line
    of sight coincide.
    """

    s0: Point2
    a0: Point2
    t0: Point2
    v_s: float
    v_t: float
    v_a: float
    r: float

    def __post_init__(self):
        for name in ("s0", "a0", "t0"):
            object.__setattr__(self, name, Point2.of(getattr(self, name)))
        for name in ("v_s", "v_t", "v_a", "r"):
            object.__setattr__(self, name, float(getattr(self, name)))
        problems = validation_problems(self)
        if problems:
            raise ConfigError(problems)

    def with_target_speed(self, v_t: float) -> EngagementConfig:
        return dataclasses.replace(self, v_t=v_t)

    @cached_property
    def geometry(self) -> DerivedGeometry:
        return derive_geometry(self)

    def to_dict(self) -> dict:
        return {
            "s0": list(self.s0),
            "a0": list(self.a0),
            "t0": list(self.t0),
            "v_s": self.v_s,
            "v_t": self.v_t,
            "v_a": self.v_a,
            "r": self.r,
        }


def validation_problems(cfg: EngagementConfig) -> list[tuple[str, str]]:
    problems = []
    speeds = (cfg.v_s, cfg.v_t, cfg.v_a, cfg.r)
    if not all(math.isfinite(v) for v in speeds):
        problems.append(("speeds", "speeds and radius must be finite"))
        return problems
    if cfg.r <= 0:
        problems.append(("r", f"sensing radius must be positive, got {cfg.r}"))
    if not 0 < cfg.v_s < cfg.v_t < cfg.v_a:
        problems.append(
            ("v_t", f"speeds must satisfy 0 < v_s < v_t < v_a, got {cfg.v_s}, {cfg.v_t}, {cfg.v_a}")
        )
    d_st = distance(cfg.s0, cfg.t0)
    if d_st < COINCIDENCE_TOL:
        problems.append(("t0", "target coincides with sensor"))
    elif cfg.r > 0 and d_st >= cfg.r:
        problems.append(("t0", f"target starts outside sensing radius (d_st0={d_st:.6g} >= r={cfg.r:.6g})"))
    if distance(cfg.a0, cfg.t0) < COINCIDENCE_TOL:
        problems.append(("a0", "attacker coincides with target"))
    return problems


def derive_geometry(cfg: EngagementConfig) -> DerivedGeometry:
    return DerivedGeometry(
        d_st0=distance(cfg.s0, cfg.t0),
        d_at0=distance(cfg.a0, cfg.t0),
        theta_st0=los_angle(cfg.s0, cfg.t0),
        theta_at0=los_angle(cfg.a0, cfg.t0),
        nu=cfg.v_s / cfg.v_t,
        mu=cfg.v_t / cfg.v_a,
    )


CONFIG_KEYS = ("s0", "a0", "t0", "v_s", "v_t", "v_a", "r")


def config_from_dict(data: dict) -> EngagementConfig:
    """Build a config from a scenario mapping, reporting bad fields by name."""
    problems = []
    values = {}
    for key in CONFIG_KEYS:
        if key not in data:
            problems.append((key, "missing"))
            continue
        raw = data[key]
        try:
            if key in ("s0", "a0", "t0"):
                if len(raw) != 2:
                    raise ValueError
                values[key] = Point2(float(raw[0]), float(raw[1]))
            else:
                if isinstance(raw, bool):
                    raise ValueError
                values[key] = float(raw)
        except (TypeError, ValueError):
            kind = "a two-element array" if key in ("s0", "a0", "t0") else "a number"
            problems.append((key, f"expected {kind}, got {raw!r}"))
    if problems:
        raise ConfigError(problems)
    return EngagementConfig(**values)


def load_scenario(source: str | Path) -> tuple[EngagementConfig, dict]:
    """Read a JSON scenario file; returns the config and the full document.

    ``source`` may be a path or the bare name of a bundled scenario
    (``headings``, ``capture``, ``escape``, ``tangent``).
    """
    path = Path(source)
    if path.exists():
        text = path.read_text()
    else:
        name = path.name if path.suffix == ".json" else f"{path.name}.json"
        bundled = resources.files("satgame.scenarios") / name
        if not bundled.is_file():
            raise FileNotFoundError(f"no scenario file or bundled scenario named {source!r}")
        text = bundled.read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ConfigError([("<file>", f"invalid JSON: {err}")]) from err
    if not isinstance(doc, dict):
        raise ConfigError([("<file>", "top level must be an object")])
    return config_from_dict(doc), doc


def bundled_scenarios() -> list[str]:
    root = resources.files("satgame.scenarios")
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))
