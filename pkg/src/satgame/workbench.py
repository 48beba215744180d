"""Report, sweep and region builders behind the command-line interface.

Everything here returns plain Python data (dicts, lists, floats) so that a
report can be dumped to JSON and compared value-for-value on reload.
Degrees appear only in these outputs.
"""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import analysis
from .analysis import AnalysisError
from .geometry import Point2
from .model import ConfigError, EngagementConfig
from .simulation import EngagementOutcome, SimulationParams, simulate
from .strategy import TargetPolicy
from .svg import COLORS, PALETTE, Figure


def _xy(p: Point2) -> list[float]:
    return [float(p.x), float(p.y)]


def analysis_report(cfg: EngagementConfig, n: int = analysis.DEFAULT_SAMPLES) -> dict:
    g = cfg.geometry
    m = analysis.min_escape(cfg)
    circle = analysis.apollonius(cfg)
    cont = analysis.capture_guaranteed(cfg, n)
    bounds = analysis.speed_bounds(cfg)

    report = {
        "config": cfg.to_dict(),
        "geometry": {
            "d_st0": g.d_st0,
            "d_at0": g.d_at0,
            "theta_st0_deg": math.degrees(g.theta_st0),
            "theta_at0_deg": math.degrees(g.theta_at0),
            "nu": g.nu,
            "mu": g.mu,
        },
        "min_escape": {
            "heading_deg": math.degrees(m.heading),
            "distance": m.escape_distance,
            "time": m.escape_time,
            "point": _xy(m.escape_point),
        },
        "apollonius": {"center": _xy(circle.center), "radius": circle.radius},
        "containment": {
            "contained": cont.contained,
            "min_margin": cont.min_margin,
            "breach_heading_deg": None if cont.heading is None else math.degrees(cont.heading),
            "excess": cont.excess,
        },
        "speed_bounds": {
            "v_lower": bounds.v_lower,
            "v_upper": bounds.v_upper,
            "admissible": bounds.admissible,
            "bound_lhs": bounds.bound_lhs,
            "bound_rhs": bounds.bound_rhs,
        },
    }

    crit = {"value": None, "error": None}
    try:
        crit["value"] = analysis.critical_speed(cfg, n=n)
    except AnalysisError as err:
        crit["error"] = str(err)
    report["critical_speed"] = crit

    quad = analysis.tangent_quadratic(cfg)
    literal = analysis.tangent_quadratic(cfg, literal=True)
    tangent = {
        "d_ratio": quad.d_ratio,
        "p_theta": quad.p_theta,
        "q_theta": quad.q_theta,
        "a": quad.a,
        "b": quad.b,
        "c": quad.c,
        "roots": list(quad.roots()),
        "literal_roots": list(literal.roots()),
        "selected": None,
        "error": None,
    }
    try:
        tangent["selected"] = analysis.tangent_escape_speed(cfg)
    except AnalysisError as err:
        tangent["error"] = str(err)
    report["tangent_speed"] = tangent
    return report


def format_report(rep: dict) -> str:
    g, m, ap, ct, sb = (rep[k] for k in ("geometry", "min_escape", "apollonius", "containment", "speed_bounds"))
    cfg = rep["config"]
    lines = [
        f"S0={tuple(cfg['s0'])}  A0={tuple(cfg['a0'])}  T0={tuple(cfg['t0'])}  "
        f"v_s={cfg['v_s']:g} v_t={cfg['v_t']:g} v_a={cfg['v_a']:g}  R={cfg['r']:g}",
        f"d_st0 = {g['d_st0']:.4f} m   theta_st0 = {g['theta_st0_deg']:.2f} deg",
        f"d_at0 = {g['d_at0']:.4f} m   theta_at0 = {g['theta_at0_deg']:.2f} deg",
        f"nu = {g['nu']:.6f}   mu = {g['mu']:.6f}",
        f"min escape: {m['distance']:.4f} m in {m['time']:.4f} s at heading {m['heading_deg']:.2f} deg",
        f"Apollonius circle: center ({ap['center'][0]:.4f}, {ap['center'][1]:.4f}), radius {ap['radius']:.4f} m",
    ]
    if ct["contained"]:
        lines.append(f"containment: contained (min margin {ct['min_margin']:.4f} m), capture guaranteed")
    else:
        lines.append(
            f"containment: breached by {ct['excess']:.4f} m at heading {ct['breach_heading_deg']:.2f} deg, escape exists"
        )
    lines.append(f"v_lower (capture below) = {sb['v_lower']:.4f} m/s")
    if sb["admissible"]:
        lines.append(f"v_upper (escape above)  = {sb['v_upper']:.4f} m/s")
    else:
        vu = "undefined" if sb["v_upper"] is None else f"{sb['v_upper']:.4f} m/s"
        lines.append(
            f"v_upper = {vu}: escape bound inadmissible "
            f"(2(R - d_st0)/d_at0 = {sb['bound_lhs']:.4f} is not < 1 - v_s/v_a = {sb['bound_rhs']:.4f})"
        )
    crit = rep["critical_speed"]
    lines.append(
        f"critical speed (bisection) = {crit['value']:.4f} m/s"
        if crit["value"] is not None
        else f"critical speed: {crit['error']}"
    )
    tg = rep["tangent_speed"]
    roots = ", ".join(f"{v:.4f}" for v in tg["roots"]) or "none"
    lines.append(f"tangency quadratic roots: {roots}")
    lines.append(
        f"tangency speed (selected) = {tg['selected']:.4f} m/s"
        if tg["selected"] is not None
        else f"tangency speed: {tg['error']}"
    )
    return "\n".join(lines) + "\n"


# -- figures -----------------------------------------------------------------


def engagement_figure(cfg: EngagementConfig, outcome: EngagementOutcome, n: int = 256) -> str:
    traj = outcome.trajectory
    fig = Figure(f"{outcome.strategy.target_policy}: {outcome.kind.value} at t = {outcome.t_final:.4f} s")
    mu = cfg.geometry.mu
    s_f, a_f, t_f = traj.s[-1], traj.a[-1], traj.t[-1]
    fig.polyline(analysis.sensable_outline(cfg.s0, cfg.t0, cfg.v_s, cfg.v_t, cfg.r, n), COLORS["grey"], dash="6,4", closed=True)
    fig.polyline(analysis.sensable_outline(s_f, t_f, cfg.v_s, cfg.v_t, cfg.r, n), COLORS["grey"], closed=True)
    fig.polyline(analysis.apollonius(cfg).sample(n), COLORS["attacker"], width=1, dash="6,4", closed=True)
    if np.hypot(*(t_f - a_f)) > 1e-9:
        final_circle = analysis.apollonius_circle(t_f, a_f, mu)
        fig.polyline(final_circle.sample(n), COLORS["attacker"], width=1, closed=True)
    for name, path in (("sensor", traj.s), ("attacker", traj.a), ("target", traj.t)):
        step = max(1, len(path) // 2000)
        fig.polyline(np.vstack([path[::step], path[-1:]]), COLORS[name], width=2, label=name[0].upper())
        fig.marker(path[0], COLORS[name])
    return fig.render()


# -- sweeps ------------------------------------------------------------------


@dataclass
class SweepResult:
    axis: str
    values: list[float]
    rows: list[dict] = field(default_factory=list)

    COLUMNS = {
        "heading": [
            "heading_deg", "escape_distance", "escape_time", "intercept_distance",
            "margin", "predicted", "outcome", "t_final",
        ],
        "speed": [
            "v_t", "valid", "contained", "min_margin", "min_escape_distance",
            "predicted", "outcome", "t_final",
        ],
    }

    def to_csv(self) -> str:
        buf = io.StringIO()
        cols = self.COLUMNS[self.axis]
        writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        writer.writeheader()
        for row in self.rows:
            writer.writerow({k: _fmt(row.get(k)) for k in cols})
        return buf.getvalue()


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return f"{v:.10g}"
    return v


def grid(lo: float, hi: float, n: int) -> list[float]:
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1 or lo == hi:
        return [float(lo)]
    return [float(v) for v in np.linspace(lo, hi, n)]


def _heading_cell(args):
    cfg, deg, params = args
    h = math.radians(deg)
    esc = analysis.escape_distance(cfg, h)
    hit = float(analysis.apollonius(cfg).ray_distance(cfg.t0, h))
    out = simulate(cfg, TargetPolicy.fixed(h), params)
    margin = esc.escape_distance - hit
    return {
        "heading_deg": deg,
        "escape_distance": esc.escape_distance,
        "escape_time": esc.escape_time,
        "intercept_distance": hit,
        "margin": margin,
        "predicted": "capture" if margin > 0 else "escape",
        "outcome": out.kind.value,
        "t_final": out.t_final,
    }


def _speed_cell(args):
    cfg, v, params, n = args
    try:
        c = cfg.with_target_speed(v)
    except ConfigError:
        return {"v_t": v, "valid": False, "outcome": "invalid", "predicted": "invalid"}
    cont = analysis.capture_guaranteed(c, n)
    out = simulate(c, TargetPolicy.parse("best-escape"), params)
    return {
        "v_t": v,
        "valid": True,
        "contained": cont.contained,
        "min_margin": cont.min_margin,
        "min_escape_distance": analysis.min_escape_distance(c),
        "predicted": "capture" if cont.contained else "escape",
        "outcome": out.kind.value,
        "t_final": out.t_final,
    }


def sweep(
    cfg: EngagementConfig,
    axis: str,
    lo: float,
    hi: float,
    n: int,
    params: SimulationParams = SimulationParams(),
    samples: int = analysis.DEFAULT_SAMPLES,
    jobs: int = 1,
) -> SweepResult:
    """Classify a grid of target headings (degrees) or target speeds (m/s)."""
    values = grid(lo, hi, n)
    if axis == "heading":
        fn, tasks = _heading_cell, [(cfg, v, params) for v in values]
    elif axis == "speed":
        fn, tasks = _speed_cell, [(cfg, v, params, samples) for v in values]
    else:
        raise ValueError(f"axis must be 'heading' or 'speed', got {axis!r}")
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(fn, tasks))
    else:
        rows = [fn(t) for t in tasks]
    return SweepResult(axis, values, rows)


# -- regions -----------------------------------------------------------------


@dataclass
class RegionSet:
    speeds: list[float]
    sensable: list[np.ndarray]  # boundary points per speed
    escape_distances: list[np.ndarray]
    circles: list[analysis.ApolloniusCircle]
    samples: int
    anchors: dict = field(default_factory=dict)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["v_t", "region", "index", "x", "y"])
        for v, pts, circle in zip(self.speeds, self.sensable, self.circles):
            for i, (x, y) in enumerate(pts):
                writer.writerow([f"{v:.10g}", "sensable", i, f"{x:.10g}", f"{y:.10g}"])
            for i, (x, y) in enumerate(circle.sample(self.samples)):
                writer.writerow([f"{v:.10g}", "apollonius", i, f"{x:.10g}", f"{y:.10g}"])
        return buf.getvalue()

    def nesting_violations(self, tol: float = 1e-12) -> list[str]:
        """Check that faster targets get a smaller sensable region and a
        larger Apollonius circle, pairwise over increasing speed."""
        problems = []
        order = np.argsort(self.speeds)
        for i, j in zip(order[:-1], order[1:]):
            v1, v2 = self.speeds[i], self.speeds[j]
            if v2 == v1:
                continue
            grow = self.escape_distances[j] - self.escape_distances[i]
            if np.any(grow > tol):
                problems.append(f"sensable region grows from v={v1:g} to v={v2:g} (by {grow.max():.3g} m)")
            c1, c2 = self.circles[i], self.circles[j]
            gap = math.hypot(c1.center.x - c2.center.x, c1.center.y - c2.center.y) + c1.radius - c2.radius
            if c2.radius <= c1.radius or gap > tol:
                problems.append(f"Apollonius circle at v={v1:g} not inside the one at v={v2:g}")
        return problems

    def figure(self) -> str:
        fig = Figure("sensable regions (solid) and Apollonius circles (dashed)")
        for k, (v, pts, circle) in enumerate(zip(self.speeds, self.sensable, self.circles)):
            color = PALETTE[k % len(PALETTE)]
            fig.polyline(pts, color, closed=True, label=f"v_t={v:g}")
            fig.polyline(circle.sample(self.samples), color, width=1, dash="6,4", closed=True)
        for name, p in self.anchors.items():
            fig.marker(p, COLORS[name], label=name[0].upper())
        return fig.render()


def regions(cfg: EngagementConfig, speeds: list[float], samples: int = analysis.DEFAULT_SAMPLES) -> RegionSet:
    sens, dists, circles = [], [], []
    for v in speeds:
        c = cfg.with_target_speed(v)
        b = analysis.sensable_boundary(c, samples)
        sens.append(b.points)
        dists.append(b.escape_distances)
        circles.append(analysis.apollonius(c))
    anchors = {"sensor": _xy(cfg.s0), "attacker": _xy(cfg.a0), "target": _xy(cfg.t0)}
    return RegionSet(list(map(float, speeds)), sens, dists, circles, samples, anchors)
