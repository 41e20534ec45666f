"""qcascade: simulate 1- and 2-qubit states and draw them as right-triangle
cascades whose circumscribed semicircle areas encode measurement
probabilities."""

__version__ = "0.1.0"

from .state import (
    QuantumState,
    StateError,
    IDENTITY_ORDER_1,
    IDENTITY_ORDER_2,
    SWAPPED_ORDER,
    probability,
    validate_normalization,
    marginal_probability,
    conditional_probability,
    tensor_product,
    reorder_qubits,
    concurrence,
)
from .circuit import (
    Circuit,
    CircuitError,
    Frame,
    GateInstance,
    apply_gate,
    gate_matrix,
    grover_circuit,
    run,
)
from .parser import (
    ParseDiagnostic,
    ParseResult,
    parse_angle,
    parse_circuit,
    parse_state,
    serialize_circuit,
)
from .geometry import (
    DEFAULT_SCALE,
    Diagram,
    collapse_policy,
    diagram_to_dict,
    layout,
    layout_single,
    layout_two,
)
from .svg import DEFAULT_THEME, RenderTheme, render, render_frames

__all__ = [
    "QuantumState", "StateError",
    "IDENTITY_ORDER_1", "IDENTITY_ORDER_2", "SWAPPED_ORDER",
    "probability", "validate_normalization", "marginal_probability",
    "conditional_probability", "tensor_product", "reorder_qubits", "concurrence",
    "Circuit", "CircuitError", "Frame", "GateInstance",
    "apply_gate", "gate_matrix", "grover_circuit", "run",
    "ParseDiagnostic", "ParseResult", "parse_angle", "parse_circuit",
    "parse_state", "serialize_circuit",
    "DEFAULT_SCALE", "Diagram", "collapse_policy", "diagram_to_dict",
    "layout", "layout_single", "layout_two",
    "DEFAULT_THEME", "RenderTheme", "render", "render_frames",
]
