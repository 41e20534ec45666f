"""Ingest circuits and raw amplitude vectors from JSON text.

Every rejection is reported as a diagnostic with a location: a
(line, column) pair for malformed JSON, a JSON pointer for semantic
violations. Parsing never raises on bad input.

Circuit schema:
    {"qubits": 1|2,
     "initial": [[re, im], ...]?,
     "gates": [{"name": "h", "params": [angle...]?, "targets": [0]}]}

Angles may be numbers (radians) or strings like "pi/2" or "2*pi/3".
"""
from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass, field

from .circuit import Circuit, CircuitError, GateInstance, GATE_NAMES, SINGLE_QUBIT_GATES
from .state import NORM_TOL, QuantumState, StateError, norm_squared


@dataclass(frozen=True)
class ParseDiagnostic:
    severity: str  # "error" | "warning"
    location: str  # "line L, column C" or JSON pointer
    message: str

    def __str__(self):
        return f"{self.severity}: {self.location}: {self.message}"


@dataclass
class ParseResult:
    """Outcome of a parse: a value (or None) plus diagnostics."""

    value: object | None
    diagnostics: list[ParseDiagnostic] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.value is not None and not any(
            d.severity == "error" for d in self.diagnostics
        )

    @property
    def errors(self) -> list[ParseDiagnostic]:
        return [d for d in self.diagnostics if d.severity == "error"]

    @property
    def warnings(self) -> list[ParseDiagnostic]:
        return [d for d in self.diagnostics if d.severity == "warning"]


def parse_angle(token) -> float:
    """Radians from a number or a small expression over numbers, pi, *, /, -."""
    if isinstance(token, bool):
        raise ValueError("angle must be a number or string")
    if isinstance(token, (int, float)):
        return float(token)
    if not isinstance(token, str):
        raise ValueError("angle must be a number or string")
    text = token.strip().lower()
    negative = False
    if text.startswith("-"):
        negative = True
        text = text[1:].strip()
    # left-associative chain of * and /
    parts = re.split(r"([*/])", text)
    if not parts or any(p.strip() == "" for p in parts):
        raise ValueError(f"cannot parse angle {token!r}")

    def term(t: str) -> float:
        t = t.strip()
        if t == "pi":
            return math.pi
        try:
            return float(t)
        except ValueError:
            raise ValueError(f"cannot parse angle term {t!r}") from None

    value = term(parts[0])
    for op, operand in zip(parts[1::2], parts[2::2]):
        if op == "*":
            value *= term(operand)
        else:
            value /= term(operand)
    return -value if negative else value


def _load_json(text: str, diags: list[ParseDiagnostic]):
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            diags.append(ParseDiagnostic("error", f"byte {exc.start}", "invalid UTF-8"))
            return None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        diags.append(
            ParseDiagnostic(
                "error", f"line {exc.lineno}, column {exc.colno}", exc.msg
            )
        )
        return None


def _amp_pairs(node, pointer: str, diags: list[ParseDiagnostic]):
    """Validate a [[re, im], ...] array; returns a complex list or None."""
    if not isinstance(node, list):
        diags.append(ParseDiagnostic("error", pointer, "expected an array of [re, im] pairs"))
        return None
    if len(node) not in (2, 4):
        diags.append(ParseDiagnostic("error", pointer, "length must be 2 or 4"))
        return None
    amps = []
    for i, pair in enumerate(node):
        p = f"{pointer}/{i}"
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or any(isinstance(x, bool) or not isinstance(x, (int, float)) for x in pair)
        ):
            diags.append(ParseDiagnostic("error", p, "expected a [re, im] number pair"))
            return None
        re_part, im_part = float(pair[0]), float(pair[1])
        if not (math.isfinite(re_part) and math.isfinite(im_part)):
            diags.append(ParseDiagnostic("error", p, "amplitude parts must be finite"))
            return None
        amps.append(complex(re_part, im_part))
    return amps


def parse_state(text: str, renormalize: bool = False) -> ParseResult:
    """Parse a JSON amplitude array into a QuantumState.

    With renormalize=False, vectors whose norm is outside 1 +/- 1e-9 are
    rejected; with renormalize=True they are scaled to unit norm and a
    warning carrying the original norm is emitted.
    """
    diags: list[ParseDiagnostic] = []
    node = _load_json(text, diags)
    if node is None:
        return ParseResult(None, diags)
    return parse_state_node(node, renormalize=renormalize)


def parse_state_node(node, renormalize: bool = False, pointer: str = "") -> ParseResult:
    """Like parse_state, but starting from an already-decoded JSON value."""
    diags: list[ParseDiagnostic] = []
    amps = _amp_pairs(node, pointer, diags)
    if amps is None:
        return ParseResult(None, diags)
    nsq = norm_squared(amps)
    if renormalize:
        if nsq < 1e-24:
            diags.append(
                ParseDiagnostic("error", pointer, "cannot renormalize the zero vector")
            )
            return ParseResult(None, diags)
        norm = math.sqrt(nsq)
        if abs(norm - 1.0) > NORM_TOL:
            diags.append(
                ParseDiagnostic(
                    "warning", pointer, f"renormalized input with norm {norm:.12g}"
                )
            )
        amps = [a / norm for a in amps]
    elif abs(nsq - 1.0) > NORM_TOL:
        diags.append(
            ParseDiagnostic(
                "error",
                pointer,
                f"state is not normalized (sum of |amp|^2 = {nsq:.12g}); "
                "pass renormalize to accept",
            )
        )
        return ParseResult(None, diags)
    try:
        state = QuantumState(amps)
    except StateError as exc:
        diags.append(ParseDiagnostic("error", pointer, str(exc)))
        return ParseResult(None, diags)
    return ParseResult(state, diags)


_CIRCUIT_FIELDS = {"qubits", "initial", "gates"}
_GATE_FIELDS = {"name", "params", "targets"}


def parse_circuit(text: str) -> ParseResult:
    """Parse circuit JSON into a Circuit; see the module docstring for the schema."""
    diags: list[ParseDiagnostic] = []
    node = _load_json(text, diags)
    if node is None:
        return ParseResult(None, diags)
    return parse_circuit_node(node)


def parse_circuit_node(node) -> ParseResult:
    """Like parse_circuit, but starting from an already-decoded JSON value."""
    diags: list[ParseDiagnostic] = []
    if not isinstance(node, dict):
        diags.append(ParseDiagnostic("error", "", "circuit must be a JSON object"))
        return ParseResult(None, diags)
    for key in node:
        if key not in _CIRCUIT_FIELDS:
            diags.append(ParseDiagnostic("warning", f"/{key}", "unknown field ignored"))

    qubits = node.get("qubits")
    if isinstance(qubits, bool) or qubits not in (1, 2):
        diags.append(ParseDiagnostic("error", "/qubits", "qubits must be 1 or 2"))
        return ParseResult(None, diags)

    initial = None
    if "initial" in node:
        amps = _amp_pairs(node["initial"], "/initial", diags)
        if amps is None:
            return ParseResult(None, diags)
        if len(amps) != 2**qubits:
            diags.append(
                ParseDiagnostic("error", "/initial", f"length must be {2**qubits}")
            )
            return ParseResult(None, diags)
        try:
            initial = QuantumState(amps)
        except StateError as exc:
            diags.append(ParseDiagnostic("error", "/initial", str(exc)))
            return ParseResult(None, diags)

    gates_node = node.get("gates")
    if not isinstance(gates_node, list):
        diags.append(ParseDiagnostic("error", "/gates", "gates must be an array"))
        return ParseResult(None, diags)

    gates: list[GateInstance] = []
    for i, gnode in enumerate(gates_node):
        p = f"/gates/{i}"
        if not isinstance(gnode, dict):
            diags.append(ParseDiagnostic("error", p, "gate must be an object"))
            return ParseResult(None, diags)
        for key in gnode:
            if key not in _GATE_FIELDS:
                diags.append(ParseDiagnostic("warning", f"{p}/{key}", "unknown field ignored"))
        name = gnode.get("name")
        if not isinstance(name, str) or name.lower() not in GATE_NAMES:
            diags.append(
                ParseDiagnostic("error", f"{p}/name", f"unknown gate name {name!r}")
            )
            return ParseResult(None, diags)
        name = name.lower()
        params_node = gnode.get("params", [])
        if not isinstance(params_node, list):
            diags.append(ParseDiagnostic("error", f"{p}/params", "params must be an array"))
            return ParseResult(None, diags)
        params = []
        for j, tok in enumerate(params_node):
            try:
                params.append(parse_angle(tok))
            except ValueError as exc:
                diags.append(ParseDiagnostic("error", f"{p}/params/{j}", str(exc)))
                return ParseResult(None, diags)
        targets_node = gnode.get("targets")
        if not isinstance(targets_node, list) or any(
            isinstance(t, bool) or not isinstance(t, int) for t in targets_node
        ):
            diags.append(
                ParseDiagnostic("error", f"{p}/targets", "targets must be an array of integers")
            )
            return ParseResult(None, diags)
        if len(set(targets_node)) != len(targets_node):
            diags.append(ParseDiagnostic("error", f"{p}/targets", "targets must be distinct"))
            return ParseResult(None, diags)
        if any(not 0 <= t < qubits for t in targets_node):
            diags.append(
                ParseDiagnostic(
                    "error", f"{p}/targets", f"targets must be in range 0..{qubits - 1}"
                )
            )
            return ParseResult(None, diags)
        want = 1 if name in SINGLE_QUBIT_GATES else 2
        if len(targets_node) != want:
            diags.append(
                ParseDiagnostic(
                    "error", f"{p}/targets", f"gate {name!r} takes {want} target(s)"
                )
            )
            return ParseResult(None, diags)
        try:
            gates.append(GateInstance(name, tuple(params), tuple(targets_node)))
        except CircuitError as exc:
            diags.append(ParseDiagnostic("error", p, str(exc)))
            return ParseResult(None, diags)

    try:
        circuit = Circuit(num_qubits=qubits, gates=tuple(gates), initial_state=initial)
    except CircuitError as exc:
        diags.append(ParseDiagnostic("error", "", str(exc)))
        return ParseResult(None, diags)
    return ParseResult(circuit, diags)


def serialize_circuit(circuit: Circuit) -> str:
    """Canonical JSON for a circuit; reparses to an equal Circuit."""
    doc: dict = {"qubits": circuit.num_qubits}
    default = QuantumState.ket("0" * circuit.num_qubits)
    if not circuit.initial_state.allclose(default):
        doc["initial"] = circuit.initial_state.to_pairs()
    doc["gates"] = [
        {
            "name": g.name,
            **({"params": list(g.params)} if g.params else {}),
            "targets": list(g.targets),
        }
        for g in circuit.gates
    ]
    return json.dumps(doc, separators=(",", ":"))
