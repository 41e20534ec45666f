"""Gate matrices and circuit execution with per-step state capture.

Gates act on the state vector by matrix multiplication; single-qubit
gates are lifted to a 2-qubit register by tensoring with the identity
on the untouched qubit (big-endian: qubit 0 is the left tensor factor).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .state import QuantumState, StateError

SQRT2_INV = 1 / np.sqrt(2)

# params arity per gate name
SINGLE_QUBIT_GATES = {
    "i": 0, "x": 0, "y": 0, "z": 0, "h": 0, "s": 0, "t": 0,
    "rx": 1, "ry": 1, "rz": 1, "phase": 1,
}
TWO_QUBIT_GATES = {"cnot": 0, "cz": 0, "swap": 0}
GATE_NAMES = {**SINGLE_QUBIT_GATES, **TWO_QUBIT_GATES}


class CircuitError(ValueError):
    """Raised for malformed gates or circuits."""


@dataclass(frozen=True)
class GateInstance:
    """One gate application: name, angle parameters, target qubit(s).

    For cnot, targets are ordered [control, target]; cz and swap are
    symmetric but keep their given order.
    """

    name: str
    params: tuple[float, ...] = ()
    targets: tuple[int, ...] = (0,)

    def __post_init__(self):
        object.__setattr__(self, "name", self.name.lower())
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))
        object.__setattr__(self, "targets", tuple(int(t) for t in self.targets))
        if self.name not in GATE_NAMES:
            raise CircuitError(f"unknown gate {self.name!r}")
        arity = GATE_NAMES[self.name]
        if len(self.params) != arity:
            raise CircuitError(
                f"gate {self.name!r} takes {arity} parameter(s), got {len(self.params)}"
            )
        if not all(np.isfinite(p) for p in self.params):
            raise CircuitError(f"gate {self.name!r} has a non-finite parameter")
        want = 1 if self.name in SINGLE_QUBIT_GATES else 2
        if len(self.targets) != want:
            raise CircuitError(
                f"gate {self.name!r} takes {want} target(s), got {len(self.targets)}"
            )
        if len(set(self.targets)) != len(self.targets):
            raise CircuitError(f"gate {self.name!r} targets must be distinct")
        if any(t < 0 for t in self.targets):
            raise CircuitError(f"gate {self.name!r} has a negative target")


def _single_matrix(name: str, params: tuple[float, ...]) -> np.ndarray:
    if name == "i":
        return np.eye(2, dtype=complex)
    if name == "x":
        return np.array([[0, 1], [1, 0]], dtype=complex)
    if name == "y":
        return np.array([[0, -1j], [1j, 0]], dtype=complex)
    if name == "z":
        return np.array([[1, 0], [0, -1]], dtype=complex)
    if name == "h":
        return SQRT2_INV * np.array([[1, 1], [1, -1]], dtype=complex)
    if name == "s":
        return np.array([[1, 0], [0, 1j]], dtype=complex)
    if name == "t":
        return np.array([[1, 0], [0, np.exp(1j * np.pi / 4)]], dtype=complex)
    theta = params[0]
    if name == "rx":
        c, s = np.cos(theta / 2), np.sin(theta / 2)
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    if name == "ry":
        c, s = np.cos(theta / 2), np.sin(theta / 2)
        return np.array([[c, -s], [s, c]], dtype=complex)
    if name == "rz":
        # symmetric convention diag(e^{-i t/2}, e^{i t/2})
        return np.array(
            [[np.exp(-1j * theta / 2), 0], [0, np.exp(1j * theta / 2)]], dtype=complex
        )
    if name == "phase":
        return np.array([[1, 0], [0, np.exp(1j * theta)]], dtype=complex)
    raise CircuitError(f"unknown single-qubit gate {name!r}")


# basis permutation that swaps the two qubit labels of a 4-vector
_SWAP = np.array(
    [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
)


def _two_matrix(name: str, targets: tuple[int, int]) -> np.ndarray:
    if name == "cnot":
        m = np.array(
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
        )
    elif name == "cz":
        m = np.diag([1, 1, 1, -1]).astype(complex)
    elif name == "swap":
        m = _SWAP.copy()
    else:
        raise CircuitError(f"unknown two-qubit gate {name!r}")
    if targets == (1, 0):
        m = _SWAP @ m @ _SWAP
    return m


def gate_matrix(g: GateInstance, num_qubits: int) -> np.ndarray:
    """Full-register unitary of a gate, dimension 2**num_qubits."""
    if num_qubits not in (1, 2):
        raise CircuitError("num_qubits must be 1 or 2")
    if any(t >= num_qubits for t in g.targets):
        raise CircuitError(
            f"gate {g.name!r} targets {g.targets} out of range for {num_qubits} qubit(s)"
        )
    if g.name in SINGLE_QUBIT_GATES:
        u = _single_matrix(g.name, g.params)
        if num_qubits == 1:
            return u
        eye = np.eye(2, dtype=complex)
        return np.kron(u, eye) if g.targets[0] == 0 else np.kron(eye, u)
    if num_qubits != 2:
        raise CircuitError(f"gate {g.name!r} needs a 2-qubit register")
    return _two_matrix(g.name, g.targets)  # type: ignore[arg-type]


def apply_gate(state: QuantumState, g: GateInstance) -> QuantumState:
    """Apply one gate to a state (matrix-vector product)."""
    m = gate_matrix(g, state.num_qubits)
    return QuantumState(m @ state.amps)


@dataclass(frozen=True)
class Circuit:
    """Ordered gate list over a fixed 1- or 2-qubit register."""

    num_qubits: int
    gates: tuple[GateInstance, ...] = ()
    initial_state: QuantumState | None = None

    def __post_init__(self):
        if self.num_qubits not in (1, 2):
            raise CircuitError("num_qubits must be 1 or 2")
        object.__setattr__(self, "gates", tuple(self.gates))
        for g in self.gates:
            if any(t >= self.num_qubits for t in g.targets):
                raise CircuitError(
                    f"gate {g.name!r} targets {g.targets} out of range for "
                    f"{self.num_qubits} qubit(s)"
                )
        if self.initial_state is None:
            object.__setattr__(
                self, "initial_state", QuantumState.ket("0" * self.num_qubits)
            )
        elif self.initial_state.num_qubits != self.num_qubits:
            raise CircuitError("initial_state qubit count does not match circuit")


@dataclass(frozen=True)
class Frame:
    """State snapshot after `step` gates; step 0 holds the initial state."""

    step: int
    gate: GateInstance | None
    state: QuantumState


def run(circuit: Circuit) -> list[Frame]:
    """Execute a circuit, returning len(gates) + 1 frames."""
    frames = [Frame(0, None, circuit.initial_state)]
    state = circuit.initial_state
    for k, g in enumerate(circuit.gates, start=1):
        try:
            state = apply_gate(state, g)
        except (CircuitError, StateError) as exc:
            raise CircuitError(f"step {k} ({g.name}): {exc}") from exc
        frames.append(Frame(k, g, state))
    return frames


def grover_circuit(iterations: int = 1) -> Circuit:
    """2-qubit Grover search for |11>: H layer, then per iteration a CZ
    oracle and the diffuser (H,H, X,X, CZ, X,X, H,H)."""
    if iterations < 1:
        raise CircuitError("iterations must be >= 1")
    gates: list[GateInstance] = [
        GateInstance("h", targets=(0,)),
        GateInstance("h", targets=(1,)),
    ]
    for _ in range(iterations):
        gates.append(GateInstance("cz", targets=(0, 1)))
        gates += [
            GateInstance("h", targets=(0,)),
            GateInstance("h", targets=(1,)),
            GateInstance("x", targets=(0,)),
            GateInstance("x", targets=(1,)),
            GateInstance("cz", targets=(0, 1)),
            GateInstance("x", targets=(0,)),
            GateInstance("x", targets=(1,)),
            GateInstance("h", targets=(0,)),
            GateInstance("h", targets=(1,)),
        ]
    return Circuit(num_qubits=2, gates=tuple(gates))
