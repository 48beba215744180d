"""Closed-form game analysis.

Escape distance for a committed target heading, the sensable region (the
Cartesian-oval set of points the target can reach while still sensed), the
Apollonius circle between attacker and target, the containment test that
decides capture, and the speed thresholds built on top of them.

All functions take a validated :class:`~satgame.model.EngagementConfig`.
Speed-threshold functions treat ``cfg.v_t`` as free and ignore its value.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .geometry import Point2, distance, los_angle, point_along
from .model import EngagementConfig

log = logging.getLogger(__name__)

DEFAULT_SAMPLES = 512
DEFAULT_SPEED_TOL = 1e-4
MAX_BISECTIONS = 60


class AnalysisError(RuntimeError):
    """A diagnostic the theory says should not occur."""


class BracketError(AnalysisError):
    pass


class TangencyError(AnalysisError):
    """No admissible root of the tangency quadratic."""


# -- escape distance ---------------------------------------------------------


def escape_lengths(d_st, theta_st, r, nu, headings):
    """Distance the target covers on each heading before leaving sensing range.

    Positive root of
    ``(1 - nu^2) L^2 + 2 (d_st cos(h - theta_st) - nu r) L + d_st^2 - r^2 = 0``.
    Vectorised over ``headings``. Requires ``d_st <= r``; the discriminant
    is then non-negative and the smaller-magnitude root is taken from the
    product of roots when the textbook form would cancel.
    """
    headings = np.asarray(headings, dtype=float)
    k = 1.0 - nu * nu
    omega = nu * r - d_st * np.cos(headings - theta_st)
    c = r * r - d_st * d_st
    disc = omega * omega + k * c
    assert np.all(disc >= -1e-12 * max(r * r, 1.0)), "negative discriminant with target inside radius"
    root = np.sqrt(np.maximum(disc, 0.0))
    with np.errstate(divide="ignore", invalid="ignore"):
        large = (omega + root) / k
        small = np.where(root - omega > 0, c / (root - omega), 0.0)
    out = np.where(omega > 0, large, small)
    return np.maximum(out, 0.0)


@dataclass(frozen=True)
class EscapeSolution:
    heading: float
    omega: float
    escape_distance: float
    escape_time: float
    escape_point: Point2
    sensor_final: Point2


def escape_distance(cfg: EngagementConfig, gamma_t: float) -> EscapeSolution:
    """Escape distance, time and point for a target committed to ``gamma_t``.

    The sensor is assumed to head straight at the escape point; its final
    position is returned as ``sensor_final`` and lies at distance ``r`` from
    the escape point.
    """
    g = cfg.geometry
    length = float(escape_lengths(g.d_st0, g.theta_st0, cfg.r, g.nu, gamma_t))
    point = point_along(cfg.t0, gamma_t, length)
    if distance(cfg.s0, point) > 0:
        sensor_final = point_along(cfg.s0, los_angle(cfg.s0, point), g.nu * length)
    else:
        sensor_final = cfg.s0
    return EscapeSolution(
        heading=gamma_t,
        omega=g.nu * cfg.r - g.d_st0 * math.cos(gamma_t - g.theta_st0),
        escape_distance=length,
        escape_time=length / cfg.v_t,
        escape_point=point,
        sensor_final=sensor_final,
    )


def min_escape_distance(cfg: EngagementConfig) -> float:
    g = cfg.geometry
    return (cfg.r - g.d_st0) / (1.0 - g.nu)


def min_escape(cfg: EngagementConfig) -> EscapeSolution:
    """Escape straight away from the sensor: the shortest way out."""
    sol = escape_distance(cfg, cfg.geometry.theta_st0)
    closed = min_escape_distance(cfg)
    if not math.isclose(sol.escape_distance, closed, rel_tol=1e-9, abs_tol=1e-15):
        raise AnalysisError(f"minimum escape mismatch: root {sol.escape_distance!r} vs closed form {closed!r}")
    return sol


@dataclass(frozen=True)
class SensableBoundary:
    headings: np.ndarray
    escape_distances: np.ndarray
    points: np.ndarray  # (n, 2)

    @property
    def resolution(self) -> int:
        return len(self.headings)


def sensable_boundary(cfg: EngagementConfig, n: int = DEFAULT_SAMPLES) -> SensableBoundary:
    """Sample the sensable-region boundary at ``n`` uniform headings in [0, 2pi)."""
    if n < 16:
        raise ValueError(f"need at least 16 samples, got {n}")
    g = cfg.geometry
    headings = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    lengths = escape_lengths(g.d_st0, g.theta_st0, cfg.r, g.nu, headings)
    points = np.column_stack(
        (cfg.t0.x + lengths * np.cos(headings), cfg.t0.y + lengths * np.sin(headings))
    )
    return SensableBoundary(headings, lengths, points)


def sensable_outline(sensor, target, v_s, v_t, r, n=DEFAULT_SAMPLES):
    """Unvalidated boundary polyline for arbitrary positions, for drawing.

    Works at the terminal instant too, where the target may sit on (or a
    hair outside) the sensing circle; unreachable headings collapse to the
    target position.
    """
    sx, sy = sensor
    tx, ty = target
    d = math.hypot(tx - sx, ty - sy)
    theta = math.atan2(ty - sy, tx - sx) if d > 0 else 0.0
    nu = v_s / v_t
    h = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
    k = 1.0 - nu * nu
    omega = nu * r - d * np.cos(h - theta)
    disc = np.maximum(omega * omega + k * (r * r - d * d), 0.0)
    lengths = np.maximum((omega + np.sqrt(disc)) / k, 0.0)
    return np.column_stack((tx + lengths * np.cos(h), ty + lengths * np.sin(h)))


# -- Apollonius circle -------------------------------------------------------


@dataclass(frozen=True)
class ApolloniusCircle:
    """Points the target and attacker reach at the same time."""

    center: Point2
    radius: float

    def sample(self, n: int) -> np.ndarray:
        phi = np.linspace(0.0, 2.0 * np.pi, n, endpoint=False)
        return np.column_stack(
            (self.center.x + self.radius * np.cos(phi), self.center.y + self.radius * np.sin(phi))
        )

    def ray_distance(self, origin: Point2, heading):
        """Distance from an interior ``origin`` to the circle along ``heading``."""
        heading = np.asarray(heading, dtype=float)
        ox, oy = origin.x - self.center.x, origin.y - self.center.y
        b = ox * np.cos(heading) + oy * np.sin(heading)
        c = ox * ox + oy * oy - self.radius * self.radius
        return -b + np.sqrt(b * b - c)


def apollonius_circle(target, attacker, mu: float) -> ApolloniusCircle:
    target, attacker = Point2.of(target), Point2.of(attacker)
    k = mu * mu / (1.0 - mu * mu)
    center = target + (target - attacker) * k
    return ApolloniusCircle(center, mu * distance(target, attacker) / (1.0 - mu * mu))


def apollonius(cfg: EngagementConfig) -> ApolloniusCircle:
    return apollonius_circle(cfg.t0, cfg.a0, cfg.geometry.mu)


# -- containment -------------------------------------------------------------


def point_in_sensable(cfg: EngagementConfig, p) -> float:
    """Signed radial margin of ``p`` inside the initial sensable region.

    Positive inside, negative outside. The region is star-shaped about the
    target start, so one escape distance per heading settles it.
    """
    p = Point2.of(p)
    g = cfg.geometry
    reach = distance(cfg.t0, p)
    if reach < 1e-12:
        return min_escape_distance(cfg)
    h = los_angle(cfg.t0, p)
    return float(escape_lengths(g.d_st0, g.theta_st0, cfg.r, g.nu, h)) - reach


def _circle_margins(cfg: EngagementConfig, n: int):
    g = cfg.geometry
    pts = apollonius(cfg).sample(n)
    rel = pts - np.array([cfg.t0.x, cfg.t0.y])
    headings = np.arctan2(rel[:, 1], rel[:, 0])
    reach = np.hypot(rel[:, 0], rel[:, 1])
    lengths = escape_lengths(g.d_st0, g.theta_st0, cfg.r, g.nu, headings)
    return headings, reach, lengths


@dataclass(frozen=True)
class Containment:
    """Outcome of the capture test.

    ``contained`` means the whole Apollonius circle sits inside the sensable
    region and capture is guaranteed. Otherwise ``heading`` and ``excess``
    describe the sample that pokes out furthest.
    """

    contained: bool
    min_margin: float
    heading: float | None = None
    excess: float | None = None


def capture_guaranteed(cfg: EngagementConfig, n: int = DEFAULT_SAMPLES, eps: float | None = None) -> Containment:
    if n < 64:
        raise ValueError(f"need at least 64 samples, got {n}")
    if eps is None:
        eps = 1e-6 * cfg.r
    headings, reach, lengths = _circle_margins(cfg, n)
    margins = lengths - reach
    i = int(np.argmin(margins))
    worst = float(margins[i])
    if worst > eps:
        return Containment(True, worst)
    return Containment(False, worst, float(headings[i]), -worst)


def escape_heading(cfg: EngagementConfig, n: int = DEFAULT_SAMPLES, eps: float | None = None) -> float | None:
    """A heading that lets the target escape, or None when capture is guaranteed.

    Picks the Apollonius sample that overshoots the sensable boundary by the
    largest factor.
    """
    if capture_guaranteed(cfg, n, eps).contained:
        return None
    headings, reach, lengths = _circle_margins(cfg, n)
    with np.errstate(divide="ignore"):
        ratio = np.where(lengths > 0, reach / lengths, np.inf)
    return float(headings[int(np.argmax(ratio))])


# -- speed thresholds --------------------------------------------------------


@dataclass(frozen=True)
class SpeedBounds:
    """Target-speed thresholds for the configured positions.

    Below ``v_lower`` capture is guaranteed; above ``v_upper`` the target
    has an escape heading. ``v_upper`` is None when its denominator is not
    positive. ``admissible`` says whether ``v_upper`` is a usable target
    speed (below the attacker's), equivalently
    ``bound_lhs < bound_rhs`` with ``bound_lhs = 2 (r - d_st0) / d_at0`` and
    ``bound_rhs = 1 - v_s / v_a``.
    """

    v_lower: float
    v_upper: float | None
    admissible: bool
    bound_lhs: float
    bound_rhs: float


def speed_bounds(cfg: EngagementConfig) -> SpeedBounds:
    g = cfg.geometry
    gap = cfg.r - g.d_st0
    numer = gap * cfg.v_a + g.d_at0 * cfg.v_s
    v_lower = numer / (g.d_at0 + gap)
    denom = g.d_at0 - gap
    v_upper = numer / denom if denom > 0 else None
    return SpeedBounds(
        v_lower=v_lower,
        v_upper=v_upper,
        admissible=v_upper is not None and v_upper < cfg.v_a,
        bound_lhs=2.0 * gap / g.d_at0,
        bound_rhs=1.0 - cfg.v_s / cfg.v_a,
    )


def _admissible_bracket(cfg: EngagementConfig) -> tuple[float, float]:
    bounds = speed_bounds(cfg)
    if not bounds.admissible:
        raise BracketError(
            f"escape bound inadmissible: 2(r - d_st0)/d_at0 = {bounds.bound_lhs:.6g} "
            f"is not below 1 - v_s/v_a = {bounds.bound_rhs:.6g}"
        )
    return bounds.v_lower, bounds.v_upper


def critical_speed(
    cfg: EngagementConfig,
    tol: float = DEFAULT_SPEED_TOL,
    n: int = DEFAULT_SAMPLES,
    eps: float | None = None,
    max_iter: int = MAX_BISECTIONS,
) -> float:
    """Smallest target speed at which the Apollonius circle breaks out.

    Bisection on the containment predicate over ``[v_lower, v_upper]``; the
    result is on the breached side and within ``tol`` of the switch.
    """
    lo, hi = _admissible_bracket(cfg)

    def contained(v):
        return capture_guaranteed(cfg.with_target_speed(v), n, eps).contained

    if not contained(lo):
        raise BracketError(f"not contained at the lower bound {lo:.6g}")
    if contained(hi):
        raise BracketError(f"still contained at the upper bound {hi:.6g}")
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if contained(mid):
            lo = mid
        else:
            hi = mid
    return hi


@dataclass(frozen=True)
class QuadraticCoefficients:
    """Tangency quadratic ``a v^2 + b v + c = 0`` in the target speed.

    ``p_theta`` is the cosine entering the law-of-cosines step. The
    interior-angle form uses ``-cos(theta_at0 - theta_st0)``; the literal
    form uses ``cos(theta_at0 - theta_st0)`` and is kept for diagnostics.
    """

    d_ratio: float
    p_theta: float
    q_theta: float
    a: float
    b: float
    c: float

    def roots(self) -> tuple[float, ...]:
        """Real roots in descending order (empty if none)."""
        disc = self.b * self.b - 4.0 * self.a * self.c
        if disc < 0:
            return ()
        sq = math.sqrt(disc)
        # numerically stable pair
        q = -0.5 * (self.b + math.copysign(sq, self.b))
        if q == 0:
            return (0.0,)
        pair = sorted({q / self.a, self.c / q}, reverse=True)
        return tuple(pair)


def tangent_quadratic(cfg: EngagementConfig, literal: bool = False) -> QuadraticCoefficients:
    g = cfg.geometry
    d = (cfg.r - g.d_st0) / g.d_at0
    delta = g.theta_at0 - g.theta_st0
    p = math.cos(delta) if literal else -math.cos(delta)
    return QuadraticCoefficients(
        d_ratio=d,
        p_theta=p,
        q_theta=math.sin(delta),
        a=1.0 - 2.0 * d * p + d * d,
        b=-2.0 * cfg.v_s * (1.0 - d * p),
        c=cfg.v_s**2 - d * d * cfg.v_a**2,
    )


def tangent_escape_speed(cfg: EngagementConfig) -> float:
    """Target speed at which the Apollonius circle passes through the
    minimum-escape point; above it the target can escape.

    Raises TangencyError if no root of the tangency quadratic lies in
    ``[v_lower, v_upper]``.
    """
    lo, hi = _admissible_bracket(cfg)
    roots = tangent_quadratic(cfg).roots()
    slack = 1e-12 * max(hi, 1.0)
    inside = sorted(v for v in roots if lo - slack <= v <= hi + slack)
    if not inside:
        raise TangencyError(
            f"tangency not at min-escape point: roots {roots} outside [{lo:.6g}, {hi:.6g}]"
        )
    if len(inside) > 1:
        log.warning("both tangency roots %s are admissible; taking the smaller", inside)
    return inside[0]


def tangency_residual(cfg: EngagementConfig) -> float:
    """Distance from the Apollonius circle to the minimum-escape point."""
    circle = apollonius(cfg)
    point = min_escape(cfg).escape_point
    return distance(circle.center, point) - circle.radius


__all__ = [
    "AnalysisError",
    "ApolloniusCircle",
    "BracketError",
    "Containment",
    "EscapeSolution",
    "QuadraticCoefficients",
    "SensableBoundary",
    "SpeedBounds",
    "TangencyError",
    "apollonius",
    "apollonius_circle",
    "capture_guaranteed",
    "critical_speed",
    "escape_distance",
    "escape_heading",
    "escape_lengths",
    "min_escape",
    "min_escape_distance",
    "point_in_sensable",
    "sensable_boundary",
    "sensable_outline",
    "speed_bounds",
    "tangency_residual",
    "tangent_escape_speed",
    "tangent_quadratic",
]
