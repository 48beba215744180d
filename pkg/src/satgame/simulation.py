"""Fixed-step simulation of the three agents.

Constant headings make every trajectory a straight line, so positions are
evaluated in closed form at ``k * dt`` and never accumulate error; the step
size only limits how the terminal events are bracketed. Each event is then
located inside its step: sensing loss by linear interpolation of the range
followed by Newton refinement on the squared range, capture by the closest
approach of the attacker-target relative motion within the step.

The simulator never calls the closed-form escape or containment results,
which makes it an independent check on them.
"""

from __future__ import annotations

import csv
import io
import logging
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import strategy
from .geometry import Point2
from .model import EngagementConfig
from .strategy import StrategyAssignment, TargetPolicy

log = logging.getLogger(__name__)

CHUNK = 8192


@dataclass(frozen=True)
class SimulationParams:
    dt: float = 1e-3
    capture_tol: float = 1e-6
    max_time: float = 1000.0

    def __post_init__(self):
        for name in ("dt", "capture_tol", "max_time"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"{name} must be positive, got {value}")


ORACLE_PARAMS = SimulationParams(dt=1e-4)


class OutcomeKind(str, Enum):
    CAPTURE = "capture"
    ESCAPE = "escape"
    TIMEOUT = "timeout"


@dataclass
class Trajectory:
    times: np.ndarray
    s: np.ndarray  # (n, 2)
    a: np.ndarray
    t: np.ndarray

    def __len__(self):
        return len(self.times)

    def to_csv(self, stride: int = 1) -> str:
        """CSV text with header ``time,sx,sy,ax,ay,tx,ty``.

        Every ``stride``-th row is kept; the terminal row always is.
        """
        if stride < 1:
            raise ValueError("stride must be >= 1")
        idx = list(range(0, len(self.times), stride))
        if idx[-1] != len(self.times) - 1:
            idx.append(len(self.times) - 1)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["time", "sx", "sy", "ax", "ay", "tx", "ty"])
        for i in idx:
            writer.writerow(
                [f"{self.times[i]:.9g}"]
                + [f"{v:.12g}" for v in (*self.s[i], *self.a[i], *self.t[i])]
            )
        return buf.getvalue()


@dataclass
class EngagementOutcome:
    kind: OutcomeKind
    t_final: float
    terminal_point: Point2
    trajectory: Trajectory
    strategy: StrategyAssignment | None = None
    tie: bool = False

    @property
    def captured(self) -> bool:
        return self.kind is OutcomeKind.CAPTURE

    @property
    def escaped(self) -> bool:
        return self.kind is OutcomeKind.ESCAPE


def _velocity(speed, heading):
    return np.array([speed * math.cos(heading), speed * math.sin(heading)])


def _sensing_loss_time(rel0, w, r, t_lo, t_hi):
    """Time in [t_lo, t_hi] where |rel0 + w t| first reaches r."""
    d_lo = np.linalg.norm(rel0 + w * t_lo)
    d_hi = np.linalg.norm(rel0 + w * t_hi)
    t = t_lo + (r - d_lo) / (d_hi - d_lo) * (t_hi - t_lo) if d_hi != d_lo else t_hi
    for _ in range(4):
        q = rel0 + w * t
        g = q @ q - r * r
        dg = 2.0 * (q @ w)
        if dg == 0:
            break
        step = g / dg
        t -= step
        if abs(step) <= 1e-15 * max(1.0, abs(t)):
            break
    return min(max(t, t_lo), t_hi)


def _first_contact(q_start, u, tol, dt):
    """Earliest offset in [0, dt] where |q_start + u s| <= tol, or None."""
    uu = u @ u
    qq = q_start @ q_start
    if qq <= tol * tol:
        return 0.0
    if uu == 0:
        return None
    b = q_start @ u
    disc = b * b - uu * (qq - tol * tol)
    if disc < 0:
        return None
    s = (-b - math.sqrt(disc)) / uu
    return s if 0.0 <= s <= dt else None


def _run(cfg, gamma_s, gamma_a, gamma_t, params, use_sensor=True, use_attacker=True, stop_at_closest=False):
    """March until the first terminal event; returns (kind, t_final, times, S, A, T, tie, miss)."""
    dt, tol = params.dt, params.capture_tol
    p_s = np.array([cfg.s0.x, cfg.s0.y])
    p_a = np.array([cfg.a0.x, cfg.a0.y])
    p_t = np.array([cfg.t0.x, cfg.t0.y])
    v_s = _velocity(cfg.v_s, gamma_s)
    v_a = _velocity(cfg.v_a, gamma_a)
    v_t = _velocity(cfg.v_t, gamma_t)
    rel_st, w_st = p_t - p_s, v_t - v_s
    rel_at, w_at = p_t - p_a, v_t - v_a
    n_steps = int(math.ceil(params.max_time / dt - 1e-9))
    r2 = cfg.r * cfg.r

    chunks_k = []
    k0 = 0
    while k0 < n_steps:
        k = np.arange(k0, min(k0 + CHUNK, n_steps) + 1)
        tk = k * dt
        chunks_k.append(k[:-1])

        esc_idx = None
        if use_sensor:
            q = rel_st + np.outer(tk, w_st)
            hit = np.nonzero(np.einsum("ij,ij->i", q, q)[1:] >= r2)[0]
            if hit.size:
                esc_idx = int(hit[0])

        cap_idx = cap_off = None
        closest = None
        if use_attacker:
            # closest approach of the relative motion inside each step
            q = rel_at + np.outer(tk[:-1], w_at)
            uu = w_at @ w_at
            s_star = np.clip(-(q @ w_at) / uu, 0.0, dt) if uu > 0 else np.zeros(len(q))
            m = q + np.outer(s_star, w_at)
            near = np.nonzero(np.einsum("ij,ij->i", m, m) <= tol * tol)[0]
            if near.size and not stop_at_closest:
                cap_idx = int(near[0])
                cap_off = _first_contact(q[cap_idx], w_at, tol, dt)
                if cap_off is None:  # rounding at the threshold
                    cap_off = float(s_star[cap_idx])
            if stop_at_closest:
                inside = np.nonzero(s_star < dt)[0]
                if inside.size:
                    j = int(inside[0])
                    closest = (float(k[j] * dt + s_star[j]), float(np.linalg.norm(m[j])), j)

        t_esc = t_cap = None
        if esc_idx is not None:
            t_esc = _sensing_loss_time(rel_st, w_st, cfg.r, tk[esc_idx], tk[esc_idx + 1])
        if cap_idx is not None:
            t_cap = tk[cap_idx] + cap_off

        if closest is not None:
            t_min, miss, j = closest
            chunks_k[-1] = k[: j + 1]
            return _finish(chunks_k, dt, t_min, p_s, p_a, p_t, v_s, v_a, v_t, "closest", False, miss)

        if t_esc is not None or t_cap is not None:
            tie = False
            if t_cap is not None and (t_esc is None or t_cap <= t_esc):
                kind, t_final, idx = OutcomeKind.CAPTURE, t_cap, cap_idx
                tie = t_esc is not None and t_cap == t_esc
                if tie:
                    log.warning("capture and sensing loss at the same instant %.9g; counted as capture", t_cap)
            else:
                kind, t_final, idx = OutcomeKind.ESCAPE, t_esc, esc_idx
            chunks_k[-1] = k[: idx + 1]
            miss = float(np.linalg.norm(rel_at + w_at * t_final))
            return _finish(chunks_k, dt, t_final, p_s, p_a, p_t, v_s, v_a, v_t, kind, tie, miss)
        k0 += CHUNK

    t_final = n_steps * dt
    chunks_k.append(np.array([], dtype=int))
    miss = float(np.linalg.norm(rel_at + w_at * t_final))
    return _finish(chunks_k, dt, t_final, p_s, p_a, p_t, v_s, v_a, v_t, OutcomeKind.TIMEOUT, False, miss)


def _finish(chunks_k, dt, t_final, p_s, p_a, p_t, v_s, v_a, v_t, kind, tie, miss):
    k = np.concatenate(chunks_k)
    times = k * dt
    if not times.size or times[-1] < t_final:
        times = np.append(times, t_final)
    S = p_s + np.outer(times, v_s)
    A = p_a + np.outer(times, v_a)
    T = p_t + np.outer(times, v_t)
    return kind, float(t_final), Trajectory(times, S, A, T), tie, miss


def simulate(
    cfg: EngagementConfig,
    strat: StrategyAssignment | TargetPolicy | str,
    params: SimulationParams = SimulationParams(),
) -> EngagementOutcome:
    """Run one engagement to capture, escape or ``params.max_time``.

    ``strat`` may be a full assignment, or a target policy (object or CLI
    string) in which case the sensor and attacker play their optimal laws.
    """
    if isinstance(strat, str):
        strat = TargetPolicy.parse(strat)
    if isinstance(strat, TargetPolicy):
        strat = strategy.assign(cfg, strat)
    kind, t_final, traj, tie, _ = _run(cfg, strat.gamma_s, strat.gamma_a, strat.gamma_t, params)
    if kind is OutcomeKind.TIMEOUT:
        log.error("no terminal event within %.6g s", params.max_time)
    end = traj.t[-1]
    return EngagementOutcome(kind, t_final, Point2(float(end[0]), float(end[1])), traj, strat, tie)


def oracle_escape_time(cfg: EngagementConfig, gamma_t: float, params: SimulationParams = ORACLE_PARAMS) -> float:
    """Simulated time for the target to leave sensing range, attacker ignored."""
    gamma_s = strategy.sensor_heading(cfg, gamma_t)
    kind, t_final, _, _, _ = _run(cfg, gamma_s, 0.0, gamma_t, params, use_attacker=False)
    if kind is OutcomeKind.TIMEOUT:
        raise RuntimeError(f"target still sensed after {params.max_time} s")
    return t_final


@dataclass(frozen=True)
class Interception:
    intercept_time: float
    miss_distance: float


def oracle_interception(cfg: EngagementConfig, gamma_t: float, params: SimulationParams = ORACLE_PARAMS) -> Interception:
    """Closest approach of the attacker on its collision course, sensor ignored."""
    gamma_a = strategy.attacker_heading(cfg, gamma_t)
    kind, t_final, _, _, miss = _run(
        cfg, 0.0, gamma_a, gamma_t, params, use_sensor=False, stop_at_closest=True
    )
    if kind is OutcomeKind.TIMEOUT:
        raise RuntimeError(f"no closest approach within {params.max_time} s")
    return Interception(t_final, miss)
