"""Map a quantum state to its triangle-cascade diagram.

The layout is a cascade of right triangles erected on a horizontal unit
base (length = `scale` logical units, y-up frame):

* level 0: a white triangle whose legs are the square roots of the two
  top-level probabilities (single qubit: |amp| per basis state; two
  qubits: the first displayed qubit's marginals), right-angle vertex on
  the circle of diameter AB (Thales).
* level 1 (two qubits only): white triangles on each level-0 leg whose
  legs are the moduli of the two amplitudes under that branch.
* colored state triangles + circumscribed semicircles on each terminal
  leg: the triangle legs are the |real| and |imaginary| parts of the
  amplitude, so the semicircle over the leg has area
  (pi/8) * scale^2 * |amp|^2, proportional to the probability.

Negative real/imaginary parts keep their segment but flag it for
double-line rendering. Legs shorter than EPS_COLLAPSE * scale emit no
child primitives at all.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

from .state import (
    IDENTITY_ORDER_1,
    IDENTITY_ORDER_2,
    QuantumState,
    StateError,
    marginal_probability,
    probability,
    reorder_qubits,
)

DEFAULT_SCALE = 320.0
EPS_COLLAPSE = 1e-6  # relative to the unit base
EPS_SIGN = 1e-12

SINGLE_COLOR_ROLES = ("cyan", "red")
TWO_COLOR_ROLES = ("blue", "red", "almond", "purple")

Point = tuple[float, float]


@dataclass(frozen=True)
class WhiteTriangle:
    vertices: tuple[Point, Point, Point]
    level: int
    tooltip: dict


@dataclass(frozen=True)
class StateTriangle:
    vertices: tuple[Point, Point, Point]
    basis_index: int
    color_role: str


@dataclass(frozen=True)
class Semicircle:
    center: Point
    radius: float
    orientation: float  # outward normal angle, radians
    basis_index: int
    area_value: float
    probability: float


@dataclass(frozen=True)
class AmplitudeSegment:
    endpoints: tuple[Point, Point]
    part: str  # "real" | "imaginary"
    negative: bool
    basis_index: int


@dataclass(frozen=True)
class ProbabilityLabel:
    anchor: Point
    text: str
    basis_index: int


Primitive = WhiteTriangle | StateTriangle | Semicircle | AmplitudeSegment | ProbabilityLabel


@dataclass(frozen=True)
class Diagram:
    scale: float
    num_qubits: int
    order: tuple[int, ...]
    primitives: tuple[Primitive, ...]

    def semicircles(self) -> list[Semicircle]:
        return [p for p in self.primitives if isinstance(p, Semicircle)]

    def to_dict(self) -> dict:
        return diagram_to_dict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def _pt(x: float, y: float) -> Point:
    return (float(x), float(y))


def _rot90(v: Point) -> Point:
    return (-v[1], v[0])


def _unit(v: Point) -> Point:
    n = math.hypot(v[0], v[1])
    if n == 0.0:
        return (1.0, 0.0)
    return (v[0] / n, v[1] / n)


def _outward_normal(p: Point, q: Point, interior: Point) -> Point:
    """Unit normal of segment pq pointing away from the interior point.

    Falls back to the +90-degree rotation of the segment direction when
    the interior reference is collinear (degenerate parent triangle).
    """
    u = _unit((q[0] - p[0], q[1] - p[1]))
    n = _rot90(u)
    mid = ((p[0] + q[0]) / 2, (p[1] + q[1]) / 2)
    d = n[0] * (interior[0] - mid[0]) + n[1] * (interior[1] - mid[1])
    if d > 1e-9:
        return (-n[0], -n[1])
    return n


def _near_baseline_first(p: Point, q: Point) -> tuple[Point, Point]:
    """Order two points so the one nearer the baseline (smaller y, then x) is first."""
    if (q[1], q[0]) < (p[1], p[0]):
        return q, p
    return p, q


def _right_triangle_apex(p: Point, direction: Point, normal: Point,
                         leg_p: float, leg_q: float) -> tuple[Point, Point]:
    """Apex and far hypotenuse endpoint of a right triangle erected on a leg.

    The hypotenuse runs from `p` along `direction` with ideal length
    sqrt(leg_p^2 + leg_q^2); the right-angle vertex sits on the `normal`
    side at the Thales position, so |apex - p| = leg_p exactly.
    """
    hyp = math.hypot(leg_p, leg_q)
    foot = leg_p * leg_p / hyp
    height = leg_p * leg_q / hyp
    apex = _pt(
        p[0] + foot * direction[0] + height * normal[0],
        p[1] + foot * direction[1] + height * normal[1],
    )
    far = _pt(p[0] + hyp * direction[0], p[1] + hyp * direction[1])
    return apex, far


def collapse_policy(length, scale: float) -> str:
    """Classify a leg (or a pair of legs) as keep / degenerate / omit.

    A bare length is 'omit' below EPS_COLLAPSE * scale, else 'keep'.
    A (leg, leg) pair is 'omit' when the implied hypotenuse collapses,
    'degenerate' when only one leg collapses (the surviving segment then
    lies on the semicircle diameter), and 'keep' otherwise.
    """
    if isinstance(length, (tuple, list)):
        l1, l2 = length
        if l1 < 0 or l2 < 0:
            raise ValueError("leg lengths must be >= 0")
        hyp = math.hypot(l1, l2)
        if hyp / scale < EPS_COLLAPSE:
            return "omit"
        if min(l1, l2) / scale < EPS_COLLAPSE:
            return "degenerate"
        return "keep"
    if length < 0:
        raise ValueError("length must be >= 0")
    return "omit" if length / scale < EPS_COLLAPSE else "keep"


def _format_label(basis_index: int, num_qubits: int, prob: float) -> str:
    label = format(basis_index, f"0{num_qubits}b")
    return f"P{label}: {prob:.2f}"


def _state_branch(
    p: Point,
    q: Point,
    amp: complex,
    basis_index: int,
    color_role: str,
    interior: Point,
    scale: float,
    num_qubits: int,
) -> list[Primitive]:
    """Semicircle, colored triangle, amplitude segments and label for one
    basis state, erected on the parent leg p-q (|q - p| ~ scale * |amp|)."""
    modulus = abs(amp)
    if collapse_policy(scale * modulus, scale) == "omit":
        return []
    p, q = _near_baseline_first(p, q)
    direction = _unit((q[0] - p[0], q[1] - p[1]))
    normal = _outward_normal(p, q, interior)

    leg_re = scale * abs(amp.real)
    leg_im = scale * abs(amp.imag)
    apex, far = _right_triangle_apex(p, direction, normal, leg_re, leg_im)

    prob = amp.real**2 + amp.imag**2
    radius = scale * modulus / 2.0
    center = _pt(p[0] + radius * direction[0], p[1] + radius * direction[1])
    orientation = math.atan2(normal[1], normal[0])

    prims: list[Primitive] = [
        Semicircle(
            center=center,
            radius=radius,
            orientation=orientation,
            basis_index=basis_index,
            area_value=(math.pi / 8.0) * scale * scale * prob,
            probability=float(prob),
        )
    ]
    kind = collapse_policy((leg_re, leg_im), scale)
    if kind == "keep":
        prims.append(StateTriangle(vertices=(p, far, apex), basis_index=basis_index,
                                   color_role=color_role))
    if collapse_policy(leg_re, scale) == "keep":
        prims.append(AmplitudeSegment(endpoints=(p, apex), part="real",
                                      negative=amp.real < -EPS_SIGN,
                                      basis_index=basis_index))
    if collapse_policy(leg_im, scale) == "keep":
        prims.append(AmplitudeSegment(endpoints=(apex, far), part="imaginary",
                                      negative=amp.imag < -EPS_SIGN,
                                      basis_index=basis_index))
    anchor = _pt(center[0] + (radius + 0.06 * scale) * normal[0],
                 center[1] + (radius + 0.06 * scale) * normal[1])
    prims.append(ProbabilityLabel(anchor=anchor, text=_format_label(basis_index, num_qubits, prob),
                                  basis_index=basis_index))
    return prims


def layout_single(state: QuantumState, scale: float = DEFAULT_SCALE) -> Diagram:
    """Diagram for a 1-qubit state: white base triangle plus one colored
    branch (triangle, semicircle, segments, label) per basis state."""
    if state.num_qubits != 1:
        raise StateError("layout_single requires a 1-qubit state")
    if scale <= 0:
        raise ValueError("scale must be > 0")
    alpha, beta = complex(state.amps[0]), complex(state.amps[1])
    u, v = abs(alpha), abs(beta)
    a = _pt(0.0, 0.0)
    b = _pt(scale, 0.0)
    c = _pt(scale * u * u, scale * u * v)
    interior = _pt((a[0] + b[0] + c[0]) / 3.0, (a[1] + b[1] + c[1]) / 3.0)

    prims: list[Primitive] = [
        WhiteTriangle(
            vertices=(a, b, c),
            level=0,
            tooltip={
                "kind": "marginal",
                "display_qubit": 0,
                "p0": probability(state, 0),
                "p1": probability(state, 1),
            },
        )
    ]
    prims += _state_branch(a, c, alpha, 0, SINGLE_COLOR_ROLES[0], interior, scale, 1)
    prims += _state_branch(c, b, beta, 1, SINGLE_COLOR_ROLES[1], interior, scale, 1)
    return Diagram(scale=float(scale), num_qubits=1, order=IDENTITY_ORDER_1,
                   primitives=tuple(prims))


def _marginal_branch(
    p: Point,
    q: Point,
    amp_lo: complex,
    amp_hi: complex,
    basis_lo: int,
    basis_hi: int,
    interior: Point,
    scale: float,
) -> list[Primitive]:
    """Level-1 white triangle on a level-0 leg plus the two level-2 state
    branches for the amplitudes beneath it."""
    branch_norm = math.hypot(abs(amp_lo), abs(amp_hi))
    if collapse_policy(scale * branch_norm, scale) == "omit":
        return []
    p, q = _near_baseline_first(p, q)
    direction = _unit((q[0] - p[0], q[1] - p[1]))
    normal = _outward_normal(p, q, interior)
    leg_lo = scale * abs(amp_lo)
    leg_hi = scale * abs(amp_hi)
    apex, far = _right_triangle_apex(p, direction, normal, leg_lo, leg_hi)

    p_lo = abs(amp_lo) ** 2
    p_hi = abs(amp_hi) ** 2
    prims: list[Primitive] = [
        WhiteTriangle(
            vertices=(p, far, apex),
            level=1,
            tooltip={
                "kind": "joint",
                "basis_indices": [basis_lo, basis_hi],
                "probabilities": [float(p_lo), float(p_hi)],
            },
        )
    ]
    child_interior = _pt((p[0] + far[0] + apex[0]) / 3.0, (p[1] + far[1] + apex[1]) / 3.0)
    prims += _state_branch(p, apex, amp_lo, basis_lo, TWO_COLOR_ROLES[basis_lo],
                           child_interior, scale, 2)
    prims += _state_branch(apex, far, amp_hi, basis_hi, TWO_COLOR_ROLES[basis_hi],
                           child_interior, scale, 2)
    return prims


def layout_two(
    state: QuantumState, scale: float = DEFAULT_SCALE, order=IDENTITY_ORDER_2
) -> Diagram:
    """Diagram for a 2-qubit state: three-level cascade under the given
    display order (base marginal triangle, per-branch white triangles,
    colored state triangles with semicircles)."""
    if state.num_qubits != 2:
        raise StateError("layout_two requires a 2-qubit state")
    if scale <= 0:
        raise ValueError("scale must be > 0")
    order = tuple(order)
    displayed = reorder_qubits(state, order)
    amps = [complex(x) for x in displayed.amps]
    m0 = math.hypot(abs(amps[0]), abs(amps[1]))
    m1 = math.hypot(abs(amps[2]), abs(amps[3]))

    a = _pt(0.0, 0.0)
    b = _pt(scale, 0.0)
    c = _pt(scale * m0 * m0, scale * m0 * m1)
    interior = _pt((a[0] + b[0] + c[0]) / 3.0, (a[1] + b[1] + c[1]) / 3.0)

    prims: list[Primitive] = [
        WhiteTriangle(
            vertices=(a, b, c),
            level=0,
            tooltip={
                "kind": "marginal",
                "display_qubit": 0,
                "p0": marginal_probability(state, 0, 0, order),
                "p1": marginal_probability(state, 0, 1, order),
            },
        )
    ]
    prims += _marginal_branch(a, c, amps[0], amps[1], 0, 1, interior, scale)
    prims += _marginal_branch(c, b, amps[2], amps[3], 2, 3, interior, scale)
    return Diagram(scale=float(scale), num_qubits=2, order=order, primitives=tuple(prims))


def layout(state: QuantumState, scale: float = DEFAULT_SCALE, order=None) -> Diagram:
    """Dispatch to layout_single or layout_two by qubit count."""
    if state.num_qubits == 1:
        return layout_single(state, scale)
    return layout_two(state, scale, IDENTITY_ORDER_2 if order is None else order)


def _points(points) -> list[list[float]]:
    return [[float(x), float(y)] for x, y in points]


def diagram_to_dict(diagram: Diagram) -> dict:
    """Normative JSON form of a diagram (field names and order are stable)."""
    prims = []
    for p in diagram.primitives:
        if isinstance(p, WhiteTriangle):
            prims.append({
                "type": "white_triangle",
                "level": p.level,
                "vertices": _points(p.vertices),
                "tooltip": p.tooltip,
            })
        elif isinstance(p, StateTriangle):
            prims.append({
                "type": "state_triangle",
                "basis_index": p.basis_index,
                "color_role": p.color_role,
                "vertices": _points(p.vertices),
            })
        elif isinstance(p, Semicircle):
            prims.append({
                "type": "semicircle",
                "basis_index": p.basis_index,
                "center": [p.center[0], p.center[1]],
                "radius": p.radius,
                "orientation": p.orientation,
                "area_value": p.area_value,
                "probability": p.probability,
            })
        elif isinstance(p, AmplitudeSegment):
            prims.append({
                "type": "amplitude_segment",
                "basis_index": p.basis_index,
                "part": p.part,
                "negative": p.negative,
                "endpoints": _points(p.endpoints),
            })
        elif isinstance(p, ProbabilityLabel):
            prims.append({
                "type": "probability_label",
                "basis_index": p.basis_index,
                "anchor": [p.anchor[0], p.anchor[1]],
                "text": p.text,
            })
        else:  # pragma: no cover
            raise TypeError(f"unknown primitive {p!r}")
    return {
        "schema_version": "1.0",
        "num_qubits": diagram.num_qubits,
        "scale": diagram.scale,
        "order": list(diagram.order),
        "primitives": prims,
    }
