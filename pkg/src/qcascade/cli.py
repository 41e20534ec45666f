"""Command-line entry points.

Exit codes: 0 success, 2 parse/validation failure (diagnostics on
stderr), 3 unwritable output path.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .circuit import CircuitError, run
from .geometry import DEFAULT_SCALE, layout
from .parser import parse_circuit, parse_state
from .server import (
    SCHEMA_VERSION,
    circuit_frames_document,
    state_geometry_document,
)
from .svg import DEFAULT_THEME, frame_filename, render

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_UNWRITABLE = 3


def _read_arg_or_file(value: str) -> str | None:
    if value.startswith("@"):
        try:
            return Path(value[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot read {value[1:]}: {exc}", file=sys.stderr)
            return None
    return value


def _print_diags(diags) -> None:
    for d in diags:
        print(str(d), file=sys.stderr)


def _parse_order(text: str | None):
    if text is None:
        return None
    try:
        order = tuple(int(t) for t in text.split(","))
    except ValueError:
        return "invalid"
    if sorted(order) not in ([0], [0, 1]):
        return "invalid"
    return order


def _write(path: str, content: str) -> int:
    try:
        Path(path).write_text(content, encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE
    return EXIT_OK


def cmd_render_state(args) -> int:
    text = _read_arg_or_file(args.state)
    if text is None:
        return EXIT_INVALID
    order = _parse_order(args.order)
    if order == "invalid":
        print("error: --order must be 0 / 0,1 / 1,0", file=sys.stderr)
        return EXIT_INVALID

    if args.json:
        # exact parity with POST /api/state/geometry
        try:
            state_node = json.loads(text)
        except json.JSONDecodeError as exc:
            print(f"error: line {exc.lineno}, column {exc.colno}: {exc.msg}", file=sys.stderr)
            return EXIT_INVALID
        payload = {"state": state_node, "scale": args.scale}
        if order is not None:
            payload["order"] = list(order)
        if args.renormalize:
            payload["renormalize"] = True
        status, doc = state_geometry_document(payload)
        if status != 200:
            for d in doc["diagnostics"]:
                print(f"{d['severity']}: {d['location']}: {d['message']}", file=sys.stderr)
            return EXIT_INVALID
        return _write(args.out, json.dumps(doc, separators=(",", ":")))

    result = parse_state(text, renormalize=args.renormalize)
    _print_diags(result.diagnostics)
    if not result.ok:
        return EXIT_INVALID
    state = result.value
    if order is not None and len(order) != state.num_qubits:
        print("error: --order length must match the qubit count", file=sys.stderr)
        return EXIT_INVALID
    diagram = layout(state, args.scale, order)
    return _write(args.out, render(diagram, DEFAULT_THEME))


def cmd_run_circuit(args) -> int:
    try:
        text = Path(args.circuit).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {args.circuit}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    order = _parse_order(args.order)
    if order == "invalid":
        print("error: --order must be 0 / 0,1 / 1,0", file=sys.stderr)
        return EXIT_INVALID
    result = parse_circuit(text)
    _print_diags(result.diagnostics)
    if not result.ok:
        return EXIT_INVALID
    circuit = result.value
    if order is not None and len(order) != circuit.num_qubits:
        print("error: --order length must match the qubit count", file=sys.stderr)
        return EXIT_INVALID
    try:
        frames = run(circuit)
    except CircuitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID

    out_dir = Path(args.frames_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        print(f"error: cannot create {args.frames_dir}: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE

    manifest = {"schema_version": SCHEMA_VERSION, "frames": []}
    for f in frames:
        diagram = layout(f.state, args.scale, order)
        code = _write(str(out_dir / frame_filename(f.step)), render(diagram, DEFAULT_THEME))
        if code != EXIT_OK:
            return code
        gate = (
            None
            if f.gate is None
            else {"name": f.gate.name, "params": list(f.gate.params),
                  "targets": list(f.gate.targets)}
        )
        manifest["frames"].append(
            {
                "step": f.step,
                "gate": gate,
                "probabilities": [
                    float(abs(a) ** 2) for a in f.state.amps
                ],
            }
        )
    return _write(str(out_dir / "manifest.json"), json.dumps(manifest, indent=2))


def cmd_serve(args) -> int:
    from .server import serve

    try:
        serve(port=args.port, static_dir=args.static_dir, host=args.host)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcascade",
        description="Render 1- and 2-qubit quantum states as triangle-cascade diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rs = sub.add_parser("render-state", help="render one state to SVG or diagram JSON")
    rs.add_argument("--state", required=True,
                    help="amplitude JSON [[re,im],...] or @file")
    rs.add_argument("--out", required=True, help="output path")
    rs.add_argument("--scale", type=float, default=DEFAULT_SCALE)
    rs.add_argument("--order", default=None, help="display order, e.g. 0,1 or 1,0")
    rs.add_argument("--renormalize", action="store_true",
                    help="accept unnormalized input, scaling it to unit norm")
    rs.add_argument("--json", action="store_true",
                    help="emit diagram JSON instead of SVG")
    rs.set_defaults(func=cmd_render_state)

    rc = sub.add_parser("run-circuit", help="run a circuit, writing per-gate frames")
    rc.add_argument("--circuit", required=True, help="circuit JSON file")
    rc.add_argument("--frames-dir", required=True, help="output directory")
    rc.add_argument("--scale", type=float, default=DEFAULT_SCALE)
    rc.add_argument("--order", default=None)
    rc.set_defaults(func=cmd_run_circuit)

    sv = sub.add_parser("serve", help="run the JSON HTTP service")
    sv.add_argument("--port", type=int, default=8080)
    sv.add_argument("--host", default="127.0.0.1")
    sv.add_argument("--static-dir", default=None, help="optional UI bundle directory")
    sv.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
