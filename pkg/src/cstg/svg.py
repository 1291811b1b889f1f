"""Deterministic SVG 1.1 rendering for the geometric families.

Output is byte-stable: fixed canvas, fixed decimal formatting, edges drawn
in rank order.  Vertices are labeled dots; an optional certificate overlay
re-strokes the pattern edges on top.
"""

from __future__ import annotations

import math
from typing import List, Optional, Tuple

from .drawing import Certificate, Drawing
from .errors import GeometryMissing

CANVAS = 640.0
MARGIN = 40.0
SAMPLES_PER_TURN = 96


def _positions(d: Drawing) -> List[Tuple[float, float]]:
    if d.model == "convex":
        return [
            (math.cos(2 * math.pi * v / d.n), math.sin(2 * math.pi * v / d.n))
            for v in range(d.n)
        ]
    if d.model == "points":
        return [(float(x), float(y)) for x, y in d.points]
    if d.model == "halfcircle":
        return [(v + 1.0, 0.0) for v in range(d.n)]
    if d.model == "twisted":
        return [(float(r), 0.0) for r in d.radii]
    raise GeometryMissing(f"model {d.model!r} carries no geometry to render")


def _edge_polyline(d: Drawing, pos, i: int, j: int) -> List[Tuple[float, float]]:
    if d.model in ("convex", "points"):
        return [pos[i], pos[j]]
    if d.model == "halfcircle":
        xi, xj = pos[i][0], pos[j][0]
        c = (xi + xj) / 2.0
        r = abs(xj - xi) / 2.0
        up = d.signs[d.rank(i, j)] == "U"
        pts = []
        for t in range(SAMPLES_PER_TURN + 1):
            th = math.pi * t / SAMPLES_PER_TURN
            y = r * math.sin(th)
            pts.append((c + r * math.cos(th), y if up else -y))
        return pts
    # twisted spiral arc: radius linear in the sweep angle
    a, b = (i, j) if i < j else (j, i)
    ra, rb = float(d.radii[a]), float(d.radii[b])
    pts = []
    for t in range(SAMPLES_PER_TURN + 1):
        s = t / SAMPLES_PER_TURN
        rho = ra + (rb - ra) * s
        th = 2 * math.pi * s
        pts.append((rho * math.cos(th), rho * math.sin(th)))
    return pts


def _transform(all_points):
    xs = [p[0] for p in all_points]
    ys = [p[1] for p in all_points]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    scale = (CANVAS - 2 * MARGIN) / span
    x0, y0 = min(xs), max(ys)

    def to_svg(p):
        # y flips: document coordinates grow downward
        return (MARGIN + (p[0] - x0) * scale, MARGIN + (y0 - p[1]) * scale)

    return to_svg


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def render_svg(
    d: Drawing, out_path: Optional[str] = None, overlay: Optional[Certificate] = None
) -> str:
    """Render the drawing (and optional certificate overlay) as SVG text."""
    pos = _positions(d)
    polylines = {}
    for i in range(d.n):
        for j in range(i + 1, d.n):
            polylines[(i, j)] = _edge_polyline(d, pos, i, j)
    everything = [p for line in polylines.values() for p in line]
    to_svg = _transform(everything)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{CANVAS:.0f}" height="{CANVAS:.0f}" '
        f'viewBox="0 0 {CANVAS:.0f} {CANVAS:.0f}">\n',
        f'<rect width="{CANVAS:.0f}" height="{CANVAS:.0f}" fill="white"/>\n',
    ]
    for (i, j) in sorted(polylines):
        pts = " ".join(
            f"{_fmt(x)},{_fmt(y)}" for x, y in (to_svg(p) for p in polylines[(i, j)])
        )
        parts.append(
            f'<polyline points="{pts}" fill="none" stroke="#888888" stroke-width="1"/>\n'
        )
    if overlay is not None:
        for (u, v) in overlay.edges():
            i, j = (u, v) if u < v else (v, u)
            pts = " ".join(
                f"{_fmt(x)},{_fmt(y)}"
                for x, y in (to_svg(p) for p in polylines[(i, j)])
            )
            parts.append(
                f'<polyline points="{pts}" fill="none" stroke="#cc2222" '
                f'stroke-width="2.5"/>\n'
            )
    for v in range(d.n):
        x, y = to_svg(pos[v])
        parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="#222222"/>\n')
        parts.append(
            f'<text x="{_fmt(x + 6)}" y="{_fmt(y - 6)}" '
            f'font-family="monospace" font-size="12">{v}</text>\n'
        )
    parts.append("</svg>\n")
    text = "".join(parts)
    if out_path is not None:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text
