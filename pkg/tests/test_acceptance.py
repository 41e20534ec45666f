"""Acceptance suite: every release criterion as one test with a printed
pass/fail line. Run with `pytest tests/test_acceptance.py -s` to see the
per-criterion report."""
import json
import math
import re
import statistics
import threading
import time
import xml.etree.ElementTree as ET

import numpy as np
import pytest
from fastapi.testclient import TestClient

from qcascade.circuit import Circuit, GateInstance, apply_gate, run
from qcascade.cli import main
from qcascade.geometry import (
    DEFAULT_SCALE,
    AmplitudeSegment,
    Semicircle,
    StateTriangle,
    WhiteTriangle,
    layout,
)
from qcascade.parser import parse_circuit
from qcascade.server import create_app
from qcascade.state import QuantumState
from qcascade.svg import render

S = 1 / math.sqrt(2)

GROVER_ONE = json.dumps(
    {
        "qubits": 2,
        "gates": [
            {"name": "h", "targets": [0]},
            {"name": "h", "targets": [1]},
            {"name": "cz", "targets": [0, 1]},
            {"name": "h", "targets": [0]},
            {"name": "h", "targets": [1]},
            {"name": "x", "targets": [0]},
            {"name": "x", "targets": [1]},
            {"name": "cz", "targets": [0, 1]},
            {"name": "x", "targets": [0]},
            {"name": "x", "targets": [1]},
            {"name": "h", "targets": [0]},
            {"name": "h", "targets": [1]},
        ],
    }
)


def report(name, ok):
    print(f"{'PASS' if ok else 'FAIL'}: {name}")
    assert ok, name


def random_state(rng, n):
    v = rng.standard_normal(2**n) + 1j * rng.standard_normal(2**n)
    return QuantumState(v / np.linalg.norm(v))


def grover_frames(iterations=1):
    doc = json.loads(GROVER_ONE)
    if iterations == 2:
        doc = {"qubits": 2, "gates": doc["gates"] + doc["gates"][2:]}
    result = parse_circuit(json.dumps(doc))
    assert result.ok
    return run(result.value)


def test_grover_one_iteration_final_probabilities():
    frames = grover_frames(1)
    probs = np.abs(frames[-1].state.amps) ** 2
    report(
        "Grover 1-iteration final probabilities (0, 0, 0, 1.00) within 1e-9",
        bool(np.all(np.abs(probs - np.array([0, 0, 0, 1.0])) <= 1e-9)),
    )


def test_grover_intermediate_frames():
    frames = grover_frames(1)
    after_h = np.abs(frames[2].state.amps) ** 2
    uniform_ok = bool(np.all(np.abs(after_h - 0.25) <= 1e-9))
    post_oracle = frames[3].state
    negative_ok = post_oracle.amps[3].real < 0
    diagram = layout(post_oracle, DEFAULT_SCALE)
    flagged = [
        p for p in diagram.primitives
        if isinstance(p, AmplitudeSegment) and p.negative
    ]
    segment_ok = len(flagged) == 1 and flagged[0].basis_index == 3 \
        and flagged[0].part == "real"
    report(
        "Grover intermediate frames: uniform 0.25 after H layer; |11> real part "
        "negative with negative-flagged segment after the oracle",
        uniform_ok and negative_ok and segment_ok,
    )


def test_grover_two_iterations():
    frames = grover_frames(2)
    probs = np.abs(frames[-1].state.amps) ** 2
    report(
        "Two-iteration Grover final probabilities (0.25, 0.25, 0.25, 0.25) within 1e-9",
        bool(np.all(np.abs(probs - 0.25) <= 1e-9)),
    )


def test_marginal_tooltip_datum():
    diagram = layout(QuantumState([0, 0, S, S]), DEFAULT_SCALE)
    base = [p for p in diagram.primitives if isinstance(p, WhiteTriangle)
            and p.level == 0][0]
    report(
        "Base-triangle tooltip P(first qubit = 1) = 1.00 within 1e-9 for (0, 0, "
        "1/sqrt2, 1/sqrt2)",
        abs(base.tooltip["p1"] - 1.0) <= 1e-9,
    )


def test_area_law():
    rng = np.random.default_rng(101)
    ok = True
    for _ in range(1000):
        s = random_state(rng, int(rng.integers(1, 3)))
        d = layout(s, DEFAULT_SCALE)
        for p in d.primitives:
            if isinstance(p, Semicircle):
                z = complex(s.amps[p.basis_index])
                brute = z.real * z.real + z.imag * z.imag
                if abs(p.area_value / (math.pi / 8 * DEFAULT_SCALE**2) - brute) >= 1e-9:
                    ok = False
    report("Area law: semicircle area / ((pi/8) scale^2) matches brute-force "
           "modulus squared within 1e-9 on 1000 random states", ok)


def test_pythagorean_closure_and_unit_base():
    rng = np.random.default_rng(102)
    ok = True
    for _ in range(1000):
        s = random_state(rng, int(rng.integers(1, 3)))
        d = layout(s, DEFAULT_SCALE)
        for t in d.primitives:
            if isinstance(t, (WhiteTriangle, StateTriangle)):
                p, q, apex = t.vertices
                h2 = (q[0] - p[0]) ** 2 + (q[1] - p[1]) ** 2
                l1 = (apex[0] - p[0]) ** 2 + (apex[1] - p[1]) ** 2
                l2 = (q[0] - apex[0]) ** 2 + (q[1] - apex[1]) ** 2
                if abs(l1 + l2 - h2) >= 1e-9 * DEFAULT_SCALE**2:
                    ok = False
                if isinstance(t, WhiteTriangle) and t.level == 0:
                    base_len = math.sqrt(h2)
                    if abs(base_len - DEFAULT_SCALE) > 1e-12 * DEFAULT_SCALE:
                        ok = False
    report("Pythagorean closure (1e-9 scale^2) and unit base (1e-12 scale) over "
           "1000 random states", ok)


def test_unitarity_and_matrix_chain():
    rng = np.random.default_rng(103)
    names_1q = ["i", "x", "y", "z", "h", "s", "t", "rx", "ry", "rz", "phase"]
    names_2q = ["cnot", "cz", "swap"]

    def rand_gate(n):
        if n == 2 and rng.random() < 0.3:
            name = names_2q[rng.integers(3)]
            return GateInstance(name, (), (0, 1) if rng.random() < 0.5 else (1, 0))
        name = names_1q[rng.integers(len(names_1q))]
        params = (float(rng.uniform(-6, 6)),) if name in ("rx", "ry", "rz", "phase") else ()
        return GateInstance(name, params, (int(rng.integers(n)),))

    ok = True
    for _ in range(10_000):
        n = int(rng.integers(1, 3))
        s = random_state(rng, n)
        out = apply_gate(s, rand_gate(n))
        if abs(float(np.sum(np.abs(out.amps) ** 2)) - 1.0) > 1e-9:
            ok = False

    report("Unitarity: 10,000 random gate applications preserve the norm within 1e-9",
           ok)


def test_six_gate_matrix_chain_oracle():
    from test_circuit import oracle_matrix, random_gate

    rng = np.random.default_rng(104)
    ok = True
    for _ in range(200):
        gates = tuple(random_gate(rng, 2) for _ in range(6))
        circuit = Circuit(num_qubits=2, gates=gates)
        frames = run(circuit)
        chain = np.eye(4, dtype=complex)
        for g in gates:
            chain = oracle_matrix(g, 2) @ chain
        expected = chain @ circuit.initial_state.amps
        if not np.allclose(frames[-1].state.amps, expected, atol=1e-9):
            ok = False
    report("6-gate circuits match a dense matrix-chain oracle within 1e-9 per "
           "amplitude", ok)


def test_rz_embedding_property():
    rng = np.random.default_rng(105)
    ok = True
    for _ in range(200):
        theta = float(rng.uniform(0.1, math.pi - 0.1))
        phi = float(rng.uniform(0.1, math.pi - 0.1))
        embedded = apply_gate(QuantumState([1, 0]), GateInstance("ry", (theta,)))
        rotated = apply_gate(embedded, GateInstance("rz", (phi,)))
        probs_before = np.abs(embedded.amps) ** 2
        probs_after = np.abs(rotated.amps) ** 2
        if not np.all(np.abs(probs_after - probs_before) <= 1e-12):
            ok = False
        if not np.any(np.abs(rotated.amps.imag) > 1e-9):
            ok = False
    report("RZ after RY leaves probabilities unchanged within 1e-12 while "
           "producing nonzero imaginary parts", ok)


def test_render_determinism_and_well_formedness():
    rng = np.random.default_rng(106)
    ok = True
    for _ in range(50):
        s = random_state(rng, int(rng.integers(1, 3)))
        d1 = layout(s, DEFAULT_SCALE)
        d2 = layout(QuantumState(np.array(s.amps)), DEFAULT_SCALE)
        doc1, doc2 = render(d1), render(d2)
        if doc1.encode() != doc2.encode():
            ok = False
        try:
            ET.fromstring(doc1)
        except ET.ParseError:
            ok = False
    report("Determinism: repeated renders are byte-identical and all documents "
           "are well-formed XML", ok)


def test_cli_api_parity_and_exit_codes(tmp_path):
    client = TestClient(create_app())
    post_oracle = "[[0.5,0],[0.5,0],[0.5,0],[-0.5,0]]"

    ok_exit0 = main(["render-state", "--state", "[[1,0],[0,0]]",
                     "--out", str(tmp_path / "s.svg")]) == 0
    ok_exit2 = main(["render-state", "--state", "[[2,0],[0,0]]",
                     "--out", str(tmp_path / "t.svg")]) == 2
    ok_exit3 = main(["render-state", "--state", "[[1,0],[0,0]]",
                     "--out", str(tmp_path / "no_dir" / "u.svg")]) == 3

    out = tmp_path / "d.json"
    assert main(["render-state", "--state", post_oracle, "--json",
                 "--out", str(out)]) == 0
    cli_doc = json.loads(out.read_text())
    api_doc = client.post(
        "/api/state/geometry", json={"state": json.loads(post_oracle)}
    ).json()
    parity_ok = cli_doc == api_doc

    latencies = []
    lock = threading.Lock()

    def hit():
        t0 = time.perf_counter()
        r = client.get("/api/health")
        dt = time.perf_counter() - t0
        with lock:
            latencies.append((r.status_code, dt))

    threads = [threading.Thread(target=hit) for _ in range(100)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    health_ok = (
        len(latencies) == 100
        and all(code == 200 for code, _ in latencies)
        and statistics.median(dt for _, dt in latencies) < 0.05
    )
    report(
        "CLI/API parity, exit codes 0/2/3, and /api/health under 100 concurrent "
        "requests (median < 50 ms)",
        ok_exit0 and ok_exit2 and ok_exit3 and parity_ok and health_ok,
    )
