// Client-side schema check run before a draft circuit is submitted.
// This is shape validation only; gate semantics stay on the server.
import type { CircuitJson, Diagnostic } from "./types.js";

const GATE_NAMES = new Set([
  "i", "x", "y", "z", "h", "s", "t", "rx", "ry", "rz", "phase",
  "cnot", "cz", "swap",
]);

export function validateCircuit(circuit: CircuitJson): Diagnostic[] {
  const out: Diagnostic[] = [];
  const err = (location: string, message: string) =>
    out.push({ severity: "error", location, message });

  if (circuit.qubits !== 1 && circuit.qubits !== 2) {
    err("/qubits", "qubits must be 1 or 2");
  }
  circuit.gates.forEach((gate, i) => {
    const loc = `/gates/${i}`;
    if (typeof gate.name !== "string" || !GATE_NAMES.has(gate.name.toLowerCase())) {
      err(`${loc}/name`, `unknown gate ${JSON.stringify(gate.name)}`);
      return;
    }
    if (!Array.isArray(gate.targets) || gate.targets.length === 0) {
      err(`${loc}/targets`, "targets must be a non-empty array");
      return;
    }
    for (const t of gate.targets) {
      if (!Number.isInteger(t) || t < 0 || t >= circuit.qubits) {
        err(`${loc}/targets`, `target ${t} out of range for ${circuit.qubits} qubit(s)`);
      }
    }
    if (new Set(gate.targets).size !== gate.targets.length) {
      err(`${loc}/targets`, "targets must be distinct");
    }
  });
  return out;
}
