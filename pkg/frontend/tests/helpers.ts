// Fixture loading and a fetch mock that impersonates the backend.
// Every fixture was captured from the real API by scripts/make_fixtures.py,
// so these tests exercise the genuine wire format end to end.
import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

const HERE = dirname(fileURLToPath(import.meta.url));

export function fixture<T = any>(name: string): T {
  return JSON.parse(readFileSync(join(HERE, "fixtures", name), "utf-8"));
}

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

export interface RecordedRequest {
  url: string;
  body: any;
}

/**
 * Install a fetch mock that answers like the real service, keyed on the
 * request payload. Returns the list of recorded requests. Restore with
 * the returned dispose function (vitest's afterEach).
 */
export function installFetchMock(): {
  requests: RecordedRequest[];
  dispose: () => void;
} {
  const requests: RecordedRequest[] = [];
  const original = globalThis.fetch;

  globalThis.fetch = async (input: any, init?: any): Promise<Response> => {
    const url = String(input);
    const body = init?.body ? JSON.parse(init.body) : null;
    requests.push({ url, body });

    if (url.endsWith("/api/health")) {
      return jsonResponse(200, { status: "ok", version: "0.1.0" });
    }
    if (url.endsWith("/api/circuit/frames")) {
      const gates = body.circuit.gates;
      if (gates.some((g: any) => g.targets.some((t: number) => t > 1))) {
        return jsonResponse(400, fixture("frames_bad_target.json"));
      }
      if (gates.length === 0) return jsonResponse(200, fixture("empty_frames.json"));
      if (gates.length === 12) return jsonResponse(200, fixture("grover1_frames.json"));
      if (gates.length === 22) return jsonResponse(200, fixture("grover2_frames.json"));
      throw new Error(`no fixture for a ${gates.length}-gate circuit`);
    }
    if (url.endsWith("/api/state/geometry")) {
      const swapped = body.order && body.order[0] === 1;
      const probs = body.state.map(([re, im]: [number, number]) => re * re + im * im);
      const isBell = probs[0] > 0.4 && probs[3] > 0.4;
      const name = isBell
        ? swapped ? "geom_bell_swapped.json" : "geom_bell_identity.json"
        : swapped ? "geom_01_swapped.json" : "geom_01_identity.json";
      return jsonResponse(200, fixture(name));
    }
    throw new Error(`unexpected request: ${url}`);
  };

  return {
    requests,
    dispose: () => {
      globalThis.fetch = original;
    },
  };
}
