"""Exercise the JSON API in-process: the same documents the CLI emits are
served over HTTP for the interactive explorer."""
import json

from fastapi.testclient import TestClient

from qcascade.server import create_app

client = TestClient(create_app())

print("GET /api/health ->", client.get("/api/health").json())

resp = client.post("/api/state/geometry",
                   json={"state": [[0.5, 0], [0.5, 0], [0.5, 0], [-0.5, 0]]})
doc = resp.json()
semis = [p for p in doc["diagram"]["primitives"] if p["type"] == "semicircle"]
print(f"\nPOST /api/state/geometry (post-oracle state): {resp.status_code}, "
      f"{len(semis)} semicircles")
for p in semis:
    print(f"  basis {p['basis_index']}: probability {p['probability']:.2f}")

grover = {
    "qubits": 2,
    "gates": [{"name": "h", "targets": [0]}, {"name": "h", "targets": [1]},
              {"name": "cz", "targets": [0, 1]}, {"name": "h", "targets": [0]},
              {"name": "h", "targets": [1]}, {"name": "x", "targets": [0]},
              {"name": "x", "targets": [1]}, {"name": "cz", "targets": [0, 1]},
              {"name": "x", "targets": [0]}, {"name": "x", "targets": [1]},
              {"name": "h", "targets": [0]}, {"name": "h", "targets": [1]}],
}
resp = client.post("/api/circuit/frames", json={"circuit": grover})
frames = resp.json()["frames"]
print(f"\nPOST /api/circuit/frames (Grover): {resp.status_code}, {len(frames)} frames")
print("final probabilities:", [round(p, 4) for p in frames[-1]["probabilities"]])

bad = client.post("/api/state/geometry", json={"state": [[1, 0]]})
print(f"\ninvalid state -> {bad.status_code}:",
      json.dumps(bad.json()["diagnostics"], indent=2))
