"""Deterministic SVG emission of a diagram.

Geometry is produced in a y-up mathematical frame; the flip to the SVG
y-down convention happens here. Coordinates are quantized to 6 decimals
and attributes are emitted in a fixed order, so identical diagrams
render to byte-identical documents.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .geometry import (
    AmplitudeSegment,
    Diagram,
    ProbabilityLabel,
    Semicircle,
    StateTriangle,
    WhiteTriangle,
)

DEFAULT_COLOR_MAP = {
    "cyan": "#24C2CB",
    "red": "#E35D5D",
    "blue": "#4C78C9",
    "almond": "#EFDECD",
    "purple": "#8E6BC0",
    "white": "#FFFFFF",
    "real": "#000000",
    "imaginary": "#8A8A8A",
}


@dataclass(frozen=True)
class RenderTheme:
    color_map: dict = field(default_factory=lambda: dict(DEFAULT_COLOR_MAP))
    stroke_width: float = 1.5
    double_line_gap: float = 3.0
    font_size: float = 14.0

    def __post_init__(self):
        if self.double_line_gap <= 0:
            raise ValueError("double_line_gap must be > 0")
        for role, value in self.color_map.items():
            if not (isinstance(value, str) and len(value) == 7 and value.startswith("#")):
                raise ValueError(f"color for {role!r} must be a 6-digit hex value")


DEFAULT_THEME = RenderTheme()


def _fmt(v: float) -> str:
    s = f"{v:.6f}"
    # avoid the "-0.000000" vs "0.000000" nondeterminism across sign of fp zero
    if s == "-0.000000":
        s = "0.000000"
    return s


def _bounds(diagram: Diagram) -> tuple[float, float, float, float]:
    xs: list[float] = []
    ys: list[float] = []

    def add(pt):
        xs.append(pt[0])
        ys.append(pt[1])

    for p in diagram.primitives:
        if isinstance(p, (WhiteTriangle, StateTriangle)):
            for v in p.vertices:
                add(v)
        elif isinstance(p, Semicircle):
            add((p.center[0] - p.radius, p.center[1] - p.radius))
            add((p.center[0] + p.radius, p.center[1] + p.radius))
        elif isinstance(p, AmplitudeSegment):
            for v in p.endpoints:
                add(v)
        elif isinstance(p, ProbabilityLabel):
            add(p.anchor)
    if not xs:
        return 0.0, 0.0, diagram.scale, diagram.scale
    return min(xs), min(ys), max(xs), max(ys)


class _Frame:
    """Logical y-up coordinates -> SVG y-down document coordinates."""

    def __init__(self, diagram: Diagram):
        min_x, min_y, max_x, max_y = _bounds(diagram)
        margin = 0.05 * max(max_x - min_x, max_y - min_y, diagram.scale)
        self.min_x = min_x - margin
        self.max_y = max_y + margin
        self.width = (max_x - min_x) + 2 * margin
        self.height = (max_y - min_y) + 2 * margin

    def pt(self, p) -> tuple[float, float]:
        return (p[0] - self.min_x, self.max_y - p[1])


def _semicircle_path(p: Semicircle, frame: _Frame) -> str:
    nx, ny = math.cos(p.orientation), math.sin(p.orientation)
    px, py = -ny, nx  # diameter direction
    start = frame.pt((p.center[0] + p.radius * px, p.center[1] + p.radius * py))
    end = frame.pt((p.center[0] - p.radius * px, p.center[1] - p.radius * py))
    r = _fmt(p.radius)
    # the arc bulges toward the outward normal; with this endpoint order
    # that is always the sweep-0 side after the y-flip
    return (
        f"M {_fmt(start[0])} {_fmt(start[1])} "
        f"A {r} {r} 0 0 0 {_fmt(end[0])} {_fmt(end[1])} Z"
    )


def _polygon(vertices, frame: _Frame) -> str:
    return " ".join(
        f"{_fmt(x)},{_fmt(y)}" for x, y in (frame.pt(v) for v in vertices)
    )


def _line(a, b, stroke: str, width: float) -> str:
    return (
        f'<line x1="{_fmt(a[0])}" y1="{_fmt(a[1])}" x2="{_fmt(b[0])}" y2="{_fmt(b[1])}" '
        f'stroke="{stroke}" stroke-width="{_fmt(width)}" stroke-linecap="round" />'
    )


def render(diagram: Diagram, theme: RenderTheme = DEFAULT_THEME) -> str:
    """Render a diagram to an SVG document string."""
    frame = _Frame(diagram)
    colors = {**DEFAULT_COLOR_MAP, **theme.color_map}
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="0 0 {_fmt(frame.width)} {_fmt(frame.height)}" '
        f'width="{_fmt(frame.width)}" height="{_fmt(frame.height)}">',
    ]
    for p in diagram.primitives:
        if isinstance(p, WhiteTriangle):
            parts.append(
                f'<polygon class="white-triangle level-{p.level}" '
                f'points="{_polygon(p.vertices, frame)}" '
                f'fill="{colors["white"]}" fill-opacity="0.0" '
                f'stroke="#555555" stroke-width="{_fmt(theme.stroke_width)}" />'
            )
        elif isinstance(p, Semicircle):
            parts.append(
                f'<path class="semicircle basis-{p.basis_index}" '
                f'd="{_semicircle_path(p, frame)}" '
                f'fill="{colors.get(_role_of(diagram, p.basis_index), "#CCCCCC")}" '
                f'fill-opacity="0.45" stroke="none" />'
            )
        elif isinstance(p, StateTriangle):
            parts.append(
                f'<polygon class="state-triangle basis-{p.basis_index}" '
                f'points="{_polygon(p.vertices, frame)}" '
                f'fill="{colors.get(p.color_role, "#CCCCCC")}" fill-opacity="0.85" '
                f'stroke="none" />'
            )
        elif isinstance(p, AmplitudeSegment):
            stroke = colors["real"] if p.part == "real" else colors["imaginary"]
            a = frame.pt(p.endpoints[0])
            b = frame.pt(p.endpoints[1])
            if p.negative:
                dx, dy = b[0] - a[0], b[1] - a[1]
                norm = math.hypot(dx, dy)
                if norm == 0.0:
                    ox, oy = 0.0, theme.double_line_gap / 2
                else:
                    ox = -dy / norm * theme.double_line_gap / 2
                    oy = dx / norm * theme.double_line_gap / 2
                lines = (
                    _line((a[0] + ox, a[1] + oy), (b[0] + ox, b[1] + oy), stroke,
                          theme.stroke_width)
                    + _line((a[0] - ox, a[1] - oy), (b[0] - ox, b[1] - oy), stroke,
                            theme.stroke_width)
                )
                parts.append(
                    f'<g class="segment {p.part} negative basis-{p.basis_index}">{lines}</g>'
                )
            else:
                parts.append(
                    f'<g class="segment {p.part} basis-{p.basis_index}">'
                    + _line(a, b, stroke, theme.stroke_width)
                    + "</g>"
                )
        elif isinstance(p, ProbabilityLabel):
            x, y = frame.pt(p.anchor)
            parts.append(
                f'<text class="label basis-{p.basis_index}" '
                f'x="{_fmt(x)}" y="{_fmt(y)}" font-size="{_fmt(theme.font_size)}" '
                f'font-family="monospace" text-anchor="middle">{p.text}</text>'
            )
    parts.append("</svg>")
    return "\n".join(parts)


def _role_of(diagram: Diagram, basis_index: int) -> str:
    for p in diagram.primitives:
        if isinstance(p, StateTriangle) and p.basis_index == basis_index:
            return p.color_role
    if diagram.num_qubits == 1:
        return ("cyan", "red")[basis_index]
    return ("blue", "red", "almond", "purple")[basis_index]


def render_frames(frames, theme: RenderTheme = DEFAULT_THEME, scale: float = None,
                  order=None) -> list[str]:
    """Render one SVG document per frame of a circuit run."""
    from .geometry import DEFAULT_SCALE, layout

    scale = DEFAULT_SCALE if scale is None else scale
    return [render(layout(f.state, scale, order), theme) for f in frames]


def frame_filename(index: int) -> str:
    return f"frame_{index:04d}.svg"
