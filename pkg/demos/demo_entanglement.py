"""Entanglement in the cascade: product states versus the Bell state.

A product state factors, so its diagram is two independent stories and
the concurrence is 0. The Bell state cannot factor: conditioning on one
qubit pins the other, and the concurrence reaches 1.
"""
import math
from pathlib import Path

from qcascade import (
    QuantumState,
    concurrence,
    conditional_probability,
    layout_two,
    render,
    reorder_qubits,
    tensor_product,
)
from qcascade.state import SWAPPED_ORDER

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)
S = 1 / math.sqrt(2)

product = tensor_product(QuantumState([S, S]), QuantumState([0.6, 0.8]))
(OUT / "product_state.svg").write_text(render(layout_two(product)))
print(f"product state   concurrence = {concurrence(product):.4f}")
print(f"  P(q1=1 | q0=0) = {conditional_probability(product, 0, 0, 1, 1):.2f}  "
      f"P(q1=1 | q0=1) = {conditional_probability(product, 0, 1, 1, 1):.2f}  (independent)")

bell = QuantumState([S, 0, 0, S])
(OUT / "bell_state.svg").write_text(render(layout_two(bell)))
print(f"Bell state      concurrence = {concurrence(bell):.4f}")
print(f"  P(q1=1 | q0=0) = {conditional_probability(bell, 0, 0, 1, 1):.2f}  "
      f"P(q1=1 | q0=1) = {conditional_probability(bell, 0, 1, 1, 1):.2f}  (pinned)")

# Display-order switching: |01> viewed with the qubits swapped becomes |10>.
lopsided = QuantumState([0, 1, 0, 0])
(OUT / "order_01.svg").write_text(render(layout_two(lopsided)))
(OUT / "order_10.svg").write_text(render(layout_two(lopsided, order=SWAPPED_ORDER)))
print(f"|01> reordered  -> amps {list(reorder_qubits(lopsided, SWAPPED_ORDER).amps)}")
print(f"\nSVGs written to {OUT}/")
