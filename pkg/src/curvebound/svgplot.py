"""SVG 1.1 rendering of cs paths and adjacent circles.

One group per path segment, four dashed adjacent circles per instance,
and pose arrows at the endpoints. The unit circle renders at 100 px.
"""

from __future__ import annotations

import math

from .geometry import EPS, Arc, CsPath, Line, Pose, ProblemInstance, adjacent_circles

SCALE = 100.0
_COLORS = ["#1f6feb", "#d73a49", "#1a7f37", "#8250df", "#bf5b16", "#0b7285", "#b08800"]


def _fmt(v: float) -> str:
    return f"{v * SCALE:.3f}"


def _fy(v: float) -> str:
    return f"{-v * SCALE:.3f}"


def _segment_d(seg) -> str:
    if isinstance(seg, Line):
        return (
            f"M {_fmt(seg.start[0])} {_fy(seg.start[1])} "
            f"L {_fmt(seg.end[0])} {_fy(seg.end[1])}"
        )
    assert isinstance(seg, Arc)
    p0 = seg.point_at(0.0)
    d = [f"M {_fmt(p0[0])} {_fy(p0[1])}"]
    chunks = max(1, math.ceil(seg.sweep / (math.pi / 2)))
    sweep_flag = 1 if seg.orientation == "L" else 0
    for i in range(1, chunks + 1):
        p = seg.point_at(seg.sweep * i / chunks)
        d.append(f"A {SCALE:.0f} {SCALE:.0f} 0 0 {sweep_flag} {_fmt(p[0])} {_fy(p[1])}")
    return " ".join(d)


def _pose_arrow(pose: Pose, color: str) -> str:
    ax, ay = pose.x, pose.y
    dx, dy = pose.direction
    tip = (ax + 0.6 * dx, ay + 0.6 * dy)
    left = (tip[0] - 0.18 * dx - 0.1 * dy, tip[1] - 0.18 * dy + 0.1 * dx)
    right = (tip[0] - 0.18 * dx + 0.1 * dy, tip[1] - 0.18 * dy - 0.1 * dx)
    return (
        f'<g class="pose"><path d="M {_fmt(ax)} {_fy(ay)} L {_fmt(tip[0])} {_fy(tip[1])} '
        f'M {_fmt(left[0])} {_fy(left[1])} L {_fmt(tip[0])} {_fy(tip[1])} '
        f'L {_fmt(right[0])} {_fy(right[1])}" stroke="{color}" fill="none" stroke-width="2"/></g>'
    )


def _bounds(paths: list[CsPath], instance: ProblemInstance | None) -> tuple[float, float, float, float]:
    xs: list[float] = []
    ys: list[float] = []
    for path in paths:
        for _, (px, py), _ in path.sample(max(path.length / 200.0, 0.05) if path.length > EPS else 1.0):
            xs.append(px)
            ys.append(py)
    if instance is not None:
        for pose in (instance.scaled().start, instance.scaled().end):
            for c in adjacent_circles(pose):
                xs.extend([c[0] - 1.0, c[0] + 1.0])
                ys.extend([c[1] - 1.0, c[1] + 1.0])
    if not xs:
        xs, ys = [0.0], [0.0]
    return min(xs) - 1.0, max(xs) + 1.0, min(ys) - 1.0, max(ys) + 1.0


def render_svg(
    paths: list[CsPath],
    instance: ProblemInstance | None = None,
    labels: list[str] | None = None,
) -> str:
    """Render paths (in the curvature-scaled frame) into an SVG document."""
    x0, x1, y0, y1 = _bounds(paths, instance)
    width = (x1 - x0) * SCALE
    height = (y1 - y0) * SCALE
    view = f"{x0 * SCALE:.3f} {-y1 * SCALE:.3f} {width:.3f} {height:.3f}"
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{view}" '
        f'width="{width:.0f}" height="{height:.0f}">',
    ]
    if instance is not None:
        scaled = instance.scaled()
        for pose in (scaled.start, scaled.end):
            for c in adjacent_circles(pose):
                out.append(
                    f'<circle class="adjacent" cx="{_fmt(c[0])}" cy="{_fy(c[1])}" r="{SCALE:.0f}" '
                    'fill="none" stroke="#999" stroke-width="1" stroke-dasharray="6 4"/>'
                )
    for k, path in enumerate(paths):
        color = _COLORS[k % len(_COLORS)]
        label = labels[k] if labels and k < len(labels) else f"path-{k}"
        out.append(f'<g class="cs-path" data-label="{label}">')
        for seg in path.segments:
            out.append(
                f'<g class="segment"><path d="{_segment_d(seg)}" fill="none" '
                f'stroke="{color}" stroke-width="2.5"/></g>'
            )
        out.append("</g>")
    if instance is not None:
        scaled = instance.scaled()
        out.append(_pose_arrow(scaled.start, "#111"))
        out.append(_pose_arrow(scaled.end, "#111"))
    out.append("</svg>")
    return "\n".join(out)
