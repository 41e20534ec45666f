"""Walk through the single-qubit diagram: amplitudes as triangle legs,
probabilities as semicircle areas.

Writes SVGs into demos/out/ and prints the numbers behind each picture.
"""
import math
from pathlib import Path

from qcascade import (
    GateInstance,
    QuantumState,
    apply_gate,
    layout_single,
    probability,
    render,
)

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

# Start at |0>: one cyan semicircle covering the whole base.
state = QuantumState([1, 0])
(OUT / "single_ket0.svg").write_text(render(layout_single(state)))
print(f"|0>           P0={probability(state, 0):.2f}  P1={probability(state, 1):.2f}")

# A Hadamard splits the probability evenly; both semicircles have area
# proportional to 0.50 and the amplitude segments lie on the diameters
# (imaginary parts are zero).
state = apply_gate(state, GateInstance("h"))
(OUT / "single_plus.svg").write_text(render(layout_single(state)))
print(f"H|0>          P0={probability(state, 0):.2f}  P1={probability(state, 1):.2f}")

# RZ changes no probability but rotates phase: the grey imaginary
# segments appear while the semicircle areas stay fixed.
state = apply_gate(state, GateInstance("rz", (0.6797,)))
(OUT / "single_rz.svg").write_text(render(layout_single(state)))
print(f"RZ(0.6797)    P0={probability(state, 0):.2f}  P1={probability(state, 1):.2f}  "
      f"imag parts: {[round(a.imag, 4) for a in state.amps]}")

# A negative real part is drawn as a double line.
state = QuantumState([-math.sqrt(0.69), math.sqrt(0.31)])
(OUT / "single_negative.svg").write_text(render(layout_single(state)))
print(f"(-0.83, 0.56) P0={probability(state, 0):.2f}  P1={probability(state, 1):.2f}  "
      "(negative real part -> double line)")

print(f"\nSVGs written to {OUT}/")
