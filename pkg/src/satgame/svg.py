"""Minimal self-contained SVG figures (no renderer dependencies)."""

from __future__ import annotations

from xml.sax.saxutils import escape

import numpy as np

COLORS = {"sensor": "#1f77b4", "attacker": "#d62728", "target": "#2ca02c", "grey": "#7f7f7f"}
PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"]


class Figure:
    """Collects polylines and markers in world coordinates (y up)."""

    def __init__(self, title: str = ""):
        self.title = title
        self._items = []  # (kind, points, style)

    def polyline(self, points, color, width=1.5, dash=None, closed=False, label=None):
        pts = np.asarray(points, dtype=float).reshape(-1, 2)
        if closed and len(pts):
            pts = np.vstack([pts, pts[:1]])
        self._items.append(("line", pts, dict(color=color, width=width, dash=dash, label=label)))

    def marker(self, point, color, label=None, radius_px=3.5):
        pts = np.asarray(point, dtype=float).reshape(1, 2)
        self._items.append(("dot", pts, dict(color=color, label=label, radius=radius_px)))

    def bounds(self):
        pts = np.vstack([p for _, p, _ in self._items if len(p)])
        lo, hi = pts.min(axis=0), pts.max(axis=0)
        span = np.maximum(hi - lo, 1e-9)
        return lo - 0.1 * span, hi + 0.1 * span

    def render(self, width_px: int = 640) -> str:
        lo, hi = self.bounds()
        span = hi - lo
        scale = width_px / span[0]
        height_px = max(int(round(span[1] * scale)), 1)

        def tx(p):
            return (p[:, 0] - lo[0]) * scale, (hi[1] - p[:, 1]) * scale

        out = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width_px}" height="{height_px}" '
            f'viewBox="0 0 {width_px} {height_px}">',
            f'<rect x="0" y="0" width="{width_px}" height="{height_px}" style="fill:#ffffff"/>',
        ]
        if self.title:
            out.append(
                f'<text x="8" y="16" style="font-family:sans-serif;font-size:12px;fill:#000000">'
                f"{escape(self.title)}</text>"
            )
        for kind, pts, st in self._items:
            xs, ys = tx(pts)
            if kind == "line":
                coords = " ".join(f"{x:.2f},{y:.2f}" for x, y in zip(xs, ys))
                dash = f";stroke-dasharray:{st['dash']}" if st["dash"] else ""
                out.append(
                    f'<polyline points="{coords}" style="fill:none;stroke:{st["color"]};'
                    f'stroke-width:{st["width"]}{dash}"/>'
                )
            else:
                out.append(
                    f'<circle cx="{xs[0]:.2f}" cy="{ys[0]:.2f}" r="{st["radius"]}" '
                    f'style="fill:{st["color"]};stroke:none"/>'
                )
            if st.get("label"):
                out.append(
                    f'<text x="{xs[-1] + 5:.2f}" y="{ys[-1] - 5:.2f}" '
                    f'style="font-family:sans-serif;font-size:11px;fill:{st["color"]}">'
                    f"{escape(st['label'])}</text>"
                )
        out.append("</svg>")
        return "\n".join(out) + "\n"
