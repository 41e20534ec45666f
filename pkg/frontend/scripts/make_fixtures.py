"""Regenerate the test fixtures from the live API.

Run from the repository root after the backend changes:

    python3 frontend/scripts/make_fixtures.py
"""
import json
from pathlib import Path

from fastapi.testclient import TestClient

from qcascade import grover_circuit, serialize_circuit
from qcascade.server import create_app

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"
OUT.mkdir(parents=True, exist_ok=True)
client = TestClient(create_app())


def save(name, payload):
    (OUT / name).write_text(json.dumps(payload, indent=1) + "\n")
    print(f"wrote {name}")


for iters in (1, 2):
    circuit = json.loads(serialize_circuit(grover_circuit(iters)))
    resp = client.post("/api/circuit/frames", json={"circuit": circuit})
    assert resp.status_code == 200, resp.text
    save(f"grover{iters}_circuit.json", circuit)
    save(f"grover{iters}_frames.json", resp.json())

S = 2 ** -0.5
for name, state, order in [
    ("geom_01_identity.json", [[0, 0], [1, 0], [0, 0], [0, 0]], [0, 1]),
    ("geom_01_swapped.json", [[0, 0], [1, 0], [0, 0], [0, 0]], [1, 0]),
    ("geom_bell_identity.json", [[S, 0], [0, 0], [0, 0], [S, 0]], [0, 1]),
    ("geom_bell_swapped.json", [[S, 0], [0, 0], [0, 0], [S, 0]], [1, 0]),
]:
    resp = client.post("/api/state/geometry", json={"state": state, "order": order})
    assert resp.status_code == 200, resp.text
    save(name, resp.json())

resp = client.post("/api/circuit/frames",
                   json={"circuit": {"qubits": 2, "gates": []}})
assert resp.status_code == 200, resp.text
save("empty_frames.json", resp.json())

bad = client.post("/api/circuit/frames", json={
    "circuit": {"qubits": 2, "gates": [{"name": "h", "targets": [5]}]}})
assert bad.status_code == 400
save("frames_bad_target.json", bad.json())
