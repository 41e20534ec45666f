import type {
  AmplitudePair,
  CircuitJson,
  Diagnostic,
  FramesDocument,
  GeometryDocument,
} from "./types.js";

export type ApiResult<T> =
  | { ok: true; doc: T }
  | { ok: false; status: number; diagnostics: Diagnostic[] };

async function post<T>(base: string, path: string, body: unknown): Promise<ApiResult<T>> {
  const resp = await fetch(base + path, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
  const json = await resp.json();
  if (!resp.ok) {
    return { ok: false, status: resp.status, diagnostics: json.diagnostics ?? [] };
  }
  return { ok: true, doc: json as T };
}

/** Thin client for the stateless backend; all endpoints are pure. */
export class ApiClient {
  constructor(readonly base: string = "") {}

  health(): Promise<Response> {
    return fetch(this.base + "/api/health");
  }

  circuitFrames(circuit: CircuitJson): Promise<ApiResult<FramesDocument>> {
    return post(this.base, "/api/circuit/frames", { circuit });
  }

  stateGeometry(
    state: AmplitudePair[],
    order?: number[],
  ): Promise<ApiResult<GeometryDocument>> {
    const body: Record<string, unknown> = { state };
    if (order) body.order = order;
    return post(this.base, "/api/state/geometry", body);
  }
}
