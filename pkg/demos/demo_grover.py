"""Step through 2-qubit Grover search for |11>, exporting one diagram per
gate. The story to look for in demos/out/grover/:

* frame 2  — uniform superposition: four equal semicircles;
* frame 3  — the CZ oracle flips the phase of |11>: its real segment
  becomes a double line, areas unchanged;
* frame 12 — the diffuser concentrates everything: only the purple
  semicircle remains, probability 1.00.

A second iteration overshoots back to the uniform distribution.
"""
from pathlib import Path

import numpy as np

from qcascade import grover_circuit, layout_two, marginal_probability, render, run
from qcascade.svg import frame_filename

OUT = Path(__file__).parent / "out" / "grover"
OUT.mkdir(parents=True, exist_ok=True)

frames = run(grover_circuit(1))
for f in frames:
    (OUT / frame_filename(f.step)).write_text(render(layout_two(f.state)))
    gate = "(init)" if f.gate is None else f.gate.name
    probs = np.round(np.abs(f.state.amps) ** 2, 4)
    print(f"step {f.step:2d}  {gate:6s}  P = {probs}")

# the hover datum mid-way through the final H layer: after frame 11 the
# first qubit is certainly 1 even though two basis states share the mass
s = frames[11].state
print(f"\nafter step 11, P(first qubit = 1) = "
      f"{marginal_probability(s, 0, 1):.2f}")

final = np.abs(run(grover_circuit(2))[-1].state.amps) ** 2
print(f"two iterations overshoot: P = {np.round(final, 4)}")
print(f"\nSVGs written to {OUT}/")
