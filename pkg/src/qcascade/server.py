"""Stateless JSON-over-HTTP facade for the geometry pipeline.

Endpoints:
    POST /api/state/geometry   amplitude array -> diagram JSON
    POST /api/circuit/frames   circuit JSON -> per-gate frames with diagrams
    GET  /api/health           liveness + version

Handlers are pure functions of the request body; invalid input yields
HTTP 400 with structured diagnostics, never HTML. The same
request-to-document functions back the CLI's --json output, so the two
surfaces stay byte-compatible.
"""
from __future__ import annotations

import math
from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .circuit import CircuitError, run
from .geometry import DEFAULT_SCALE, diagram_to_dict, layout
from .parser import ParseDiagnostic, parse_circuit_node, parse_state_node
from .state import IDENTITY_ORDER_2, probability

SCHEMA_VERSION = "1.0"

_STATE_FIELDS = {"state", "scale", "order", "renormalize"}
_CIRCUIT_FIELDS = {"circuit", "scale", "order"}


def _diag_dicts(diags) -> list[dict]:
    return [
        {"severity": d.severity, "location": d.location, "message": d.message}
        for d in diags
    ]


def _common_options(payload: dict, allowed: set, diags: list) -> tuple[float, tuple | None]:
    """Validate scale/order and warn about unknown fields; returns (scale, order)."""
    for key in payload:
        if key not in allowed:
            diags.append(ParseDiagnostic("warning", f"/{key}", "unknown field ignored"))
    scale = payload.get("scale", DEFAULT_SCALE)
    if isinstance(scale, bool) or not isinstance(scale, (int, float)) \
            or not math.isfinite(scale) or scale <= 0:
        diags.append(ParseDiagnostic("error", "/scale", "scale must be a positive number"))
        return DEFAULT_SCALE, None
    order = payload.get("order")
    if order is not None:
        if not isinstance(order, list) or sorted(order) not in ([0], [0, 1]):
            diags.append(
                ParseDiagnostic("error", "/order", "order must be a permutation of the qubits")
            )
            return float(scale), None
        order = tuple(order)
    return float(scale), order


def state_geometry_document(payload: dict) -> tuple[int, dict]:
    """(http_status, response body) for a state -> geometry request."""
    diags: list[ParseDiagnostic] = []
    scale, order = _common_options(payload, _STATE_FIELDS, diags)
    if any(d.severity == "error" for d in diags):
        return 400, {"schema_version": SCHEMA_VERSION, "diagnostics": _diag_dicts(diags)}
    if "state" not in payload:
        diags.append(ParseDiagnostic("error", "/state", "missing required field"))
        return 400, {"schema_version": SCHEMA_VERSION, "diagnostics": _diag_dicts(diags)}
    renormalize = bool(payload.get("renormalize", False))
    result = parse_state_node(payload["state"], renormalize=renormalize, pointer="/state")
    diags.extend(result.diagnostics)
    if not result.ok:
        return 400, {"schema_version": SCHEMA_VERSION, "diagnostics": _diag_dicts(diags)}
    state = result.value
    if order is not None and len(order) != state.num_qubits:
        diags.append(
            ParseDiagnostic("error", "/order", "order length must match the qubit count")
        )
        return 400, {"schema_version": SCHEMA_VERSION, "diagnostics": _diag_dicts(diags)}
    diagram = layout(state, scale, order)
    return 200, {
        "schema_version": SCHEMA_VERSION,
        "diagram": diagram_to_dict(diagram),
        "diagnostics": _diag_dicts(diags),
    }


def circuit_frames_document(payload: dict) -> tuple[int, dict]:
    """(http_status, response body) for a circuit -> frames request."""
    diags: list[ParseDiagnostic] = []
    scale, order = _common_options(payload, _CIRCUIT_FIELDS, diags)
    if any(d.severity == "error" for d in diags):
        return 400, {"schema_version": SCHEMA_VERSION, "diagnostics": _diag_dicts(diags)}
    if "circuit" not in payload:
        diags.append(ParseDiagnostic("error", "/circuit", "missing required field"))
        return 400, {"schema_version": SCHEMA_VERSION, "diagnostics": _diag_dicts(diags)}
    result = parse_circuit_node(payload["circuit"])
    diags.extend(
        ParseDiagnostic(d.severity, "/circuit" + d.location, d.message)
        for d in result.diagnostics
    )
    if not result.ok:
        return 400, {"schema_version": SCHEMA_VERSION, "diagnostics": _diag_dicts(diags)}
    circuit = result.value
    if order is not None and len(order) != circuit.num_qubits:
        diags.append(
            ParseDiagnostic("error", "/order", "order length must match the qubit count")
        )
        return 400, {"schema_version": SCHEMA_VERSION, "diagnostics": _diag_dicts(diags)}
    try:
        frames = run(circuit)
    except CircuitError as exc:
        diags.append(ParseDiagnostic("error", "/circuit/gates", str(exc)))
        return 400, {"schema_version": SCHEMA_VERSION, "diagnostics": _diag_dicts(diags)}
    frame_docs = []
    for f in frames:
        gate = (
            None
            if f.gate is None
            else {
                "name": f.gate.name,
                "params": list(f.gate.params),
                "targets": list(f.gate.targets),
            }
        )
        frame_docs.append(
            {
                "step": f.step,
                "gate": gate,
                "state": f.state.to_pairs(),
                "probabilities": [
                    probability(f.state, i) for i in range(2**circuit.num_qubits)
                ],
                "diagram": diagram_to_dict(layout(f.state, scale, order)),
            }
        )
    return 200, {
        "schema_version": SCHEMA_VERSION,
        "frames": frame_docs,
        "diagnostics": _diag_dicts(diags),
    }


def create_app(static_dir: str | None = None):
    """Build the FastAPI application; optionally serve a UI bundle at /."""
    app = FastAPI(title="qcascade", version=__version__)

    async def _body(request) -> dict | None:
        try:
            payload = await request.json()
        except Exception:
            return None
        return payload if isinstance(payload, dict) else None

    @app.get("/api/health")
    def health():
        return {"status": "ok", "version": __version__, "schema_version": SCHEMA_VERSION}

    @app.post("/api/state/geometry")
    async def state_geometry(request: Request):
        payload = await _body(request)
        if payload is None:
            return JSONResponse(
                status_code=400,
                content={
                    "schema_version": SCHEMA_VERSION,
                    "diagnostics": [
                        {"severity": "error", "location": "",
                         "message": "request body must be a JSON object"}
                    ],
                },
            )
        status, doc = state_geometry_document(payload)
        return JSONResponse(status_code=status, content=doc)

    @app.post("/api/circuit/frames")
    async def circuit_frames(request: Request):
        payload = await _body(request)
        if payload is None:
            return JSONResponse(
                status_code=400,
                content={
                    "schema_version": SCHEMA_VERSION,
                    "diagnostics": [
                        {"severity": "error", "location": "",
                         "message": "request body must be a JSON object"}
                    ],
                },
            )
        status, doc = circuit_frames_document(payload)
        return JSONResponse(status_code=status, content=doc)

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        root = Path(static_dir)
        if not root.is_dir():
            raise ValueError(f"static dir {static_dir!r} does not exist")
        app.mount("/", StaticFiles(directory=str(root), html=True), name="static")

    return app


def serve(port: int = 8080, static_dir: str | None = None, host: str = "127.0.0.1"):
    """Run the HTTP service until interrupted."""
    import uvicorn

    uvicorn.run(create_app(static_dir), host=host, port=port, log_level="warning")
