"""Constant heading laws for the sensor, attacker and target.

Every agent commits to its heading at t = 0. The sensor steers for the
point where the target will leave sensing range; the attacker steers for
the point on the target's ray where both arrive together.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum

from . import analysis
from .geometry import los_angle, wrap_angle
from .model import EngagementConfig

log = logging.getLogger(__name__)


class PolicyKind(str, Enum):
    FIXED = "fixed"
    AWAY_SENSOR = "away-sensor"
    AWAY_ATTACKER = "away-attacker"
    TOWARD_ATTACKER = "toward-attacker"
    BEST_ESCAPE = "best-escape"


@dataclass(frozen=True)
class TargetPolicy:
    kind: PolicyKind
    heading: float | None = None  # radians, FIXED only

    def __post_init__(self):
        object.__setattr__(self, "kind", PolicyKind(self.kind))
        if (self.kind is PolicyKind.FIXED) != (self.heading is not None):
            raise ValueError("a heading is required for, and only for, the fixed policy")

    @classmethod
    def fixed(cls, heading: float) -> TargetPolicy:
        return cls(PolicyKind.FIXED, wrap_angle(heading))

    @classmethod
    def parse(cls, text: str) -> TargetPolicy:
        """Parse ``fixed:<degrees>`` or one of the named policies."""
        text = text.strip()
        if text.startswith("fixed:"):
            try:
                deg = float(text[len("fixed:"):])
            except ValueError:
                raise ValueError(f"bad fixed heading in policy {text!r}") from None
            return cls.fixed(math.radians(deg))
        try:
            kind = PolicyKind(text)
        except ValueError:
            names = ", ".join(k.value for k in PolicyKind if k is not PolicyKind.FIXED)
            raise ValueError(f"unknown policy {text!r}; expected fixed:<deg> or one of {names}") from None
        if kind is PolicyKind.FIXED:
            raise ValueError("fixed policy needs a heading, e.g. fixed:30")
        return cls(kind)

    def __str__(self):
        if self.kind is PolicyKind.FIXED:
            return f"fixed:{math.degrees(self.heading):g}"
        return self.kind.value


@dataclass(frozen=True)
class StrategyAssignment:
    gamma_s: float
    gamma_a: float
    gamma_t: float
    target_policy: TargetPolicy


def sensor_heading(cfg: EngagementConfig, gamma_t: float) -> float:
    """Head straight for the target's escape point."""
    point = analysis.escape_distance(cfg, gamma_t).escape_point
    return los_angle(cfg.s0, point)


def attacker_heading(cfg: EngagementConfig, gamma_t: float) -> float:
    """Collision-course heading onto the target's constant-heading ray.

    Solves ``sin(theta_at0 - gamma_a) = mu sin(theta_at0 - gamma_t)`` on the
    principal branch, which is the minimum-time interception.
    """
    g = cfg.geometry
    return wrap_angle(g.theta_at0 - math.asin(g.mu * math.sin(g.theta_at0 - gamma_t)))


def target_heading(policy: TargetPolicy, cfg: EngagementConfig, n: int = analysis.DEFAULT_SAMPLES) -> float:
    g = cfg.geometry
    kind = policy.kind
    if kind is PolicyKind.FIXED:
        return policy.heading
    if kind is PolicyKind.AWAY_SENSOR:
        return g.theta_st0
    if kind is PolicyKind.AWAY_ATTACKER:
        return g.theta_at0
    if kind is PolicyKind.TOWARD_ATTACKER:
        return wrap_angle(g.theta_at0 + math.pi)
    heading = analysis.escape_heading(cfg, n)
    if heading is None:
        # no escape exists; fleeing the attacker delays capture longest
        log.info("best-escape: capture guaranteed, falling back to away-attacker")
        return g.theta_at0
    return heading


def assign(cfg: EngagementConfig, policy: TargetPolicy) -> StrategyAssignment:
    gamma_t = target_heading(policy, cfg)
    return StrategyAssignment(
        gamma_s=sensor_heading(cfg, gamma_t),
        gamma_a=attacker_heading(cfg, gamma_t),
        gamma_t=gamma_t,
        target_policy=policy,
    )
