import type { ApiClient } from "./api.js";
import { diffProbabilities, type ProbabilityDiff } from "./diff.js";
import { validateCircuit } from "./validate.js";
import type {
  CircuitJson,
  Diagnostic,
  Diagram,
  FrameJson,
} from "./types.js";

export interface Notice {
  kind: "clamp" | "error";
  message: string;
}

export interface EditResult {
  ok: boolean;
  diagnostics: Diagnostic[];
  diff: ProbabilityDiff[] | null;
}

const IDENTITY: [number, number] = [0, 1];
const SWAPPED: [number, number] = [1, 0];

/**
 * Client-side state of one exploration session. The server is
 * stateless; everything mutable lives here: the draft circuit, the
 * cached frames, the cursor, and the display order. No quantum or
 * geometric math happens in this class.
 */
export class Session {
  draft: CircuitJson;
  frames: FrameJson[] = [];
  currentStep = 0;
  displayOrder: [number, number] = IDENTITY;
  diagnostics: Diagnostic[] = [];
  notice: Notice | null = null;
  /** Diagrams refetched with the swapped order, keyed by step. */
  private swappedDiagrams = new Map<number, Diagram>();
  private requestToken = 0;

  constructor(private api: ApiClient, draft: CircuitJson) {
    this.draft = draft;
  }

  get panelCount(): number {
    return this.frames.length;
  }

  get currentFrame(): FrameJson | null {
    return this.frames[this.currentStep] ?? null;
  }

  /** The diagram to draw for the cursor position, honoring the
   * display-order toggle. */
  currentDiagram(): Diagram | null {
    if (this.displayOrder[0] === 1) {
      return this.swappedDiagrams.get(this.currentStep) ?? null;
    }
    return this.currentFrame?.diagram ?? null;
  }

  /** Fetch frames for the draft. A response that arrives after a newer
   * request has been issued is discarded. */
  async loadFrames(): Promise<boolean> {
    const token = ++this.requestToken;
    const result = await this.api.circuitFrames(this.draft);
    if (token !== this.requestToken) return false; // stale, ignore
    if (!result.ok) {
      this.diagnostics = result.diagnostics;
      this.notice = { kind: "error", message: "circuit rejected by server" };
      return false;
    }
    this.frames = result.doc.frames;
    this.diagnostics = result.doc.diagnostics;
    this.swappedDiagrams.clear();
    this.clampStep();
    this.notice = null;
    return true;
  }

  private clampStep(): void {
    const max = Math.max(0, this.frames.length - 1);
    if (this.currentStep > max) this.currentStep = max;
    if (this.currentStep < 0) this.currentStep = 0;
  }

  step(direction: "forward" | "back"): void {
    this.jump(this.currentStep + (direction === "forward" ? 1 : -1));
  }

  jump(k: number): void {
    const max = Math.max(0, this.frames.length - 1);
    if (k < 0 || k > max) {
      this.currentStep = Math.min(Math.max(k, 0), max);
      this.notice = {
        kind: "clamp",
        message: `step ${k} is out of range, showing step ${this.currentStep}`,
      };
      return;
    }
    this.currentStep = k;
    this.notice = null;
  }

  /**
   * Apply a what-if edit to the draft and refetch. Returns the
   * side-by-side diff of final-frame probabilities against the
   * pre-edit run, or inline diagnostics when the edit is invalid.
   */
  async edit(mutate: (draft: CircuitJson) => void): Promise<EditResult> {
    const candidate: CircuitJson = JSON.parse(JSON.stringify(this.draft));
    mutate(candidate);
    const local = validateCircuit(candidate);
    if (local.some((d) => d.severity === "error")) {
      return { ok: false, diagnostics: local, diff: null };
    }
    const before = this.frames.length
      ? this.frames[this.frames.length - 1].probabilities
      : null;
    this.draft = candidate;
    this.frames = []; // the edit invalidates the cache
    this.swappedDiagrams.clear();
    const loaded = await this.loadFrames();
    if (!loaded) {
      return { ok: false, diagnostics: this.diagnostics, diff: null };
    }
    this.clampStep();
    const after = this.frames[this.frames.length - 1].probabilities;
    return {
      ok: true,
      diagnostics: [],
      diff: before ? diffProbabilities(before, after) : null,
    };
  }

  /** Switch qubit display order. Refetches geometry for every cached
   * frame state from the server; no client-side reordering. */
  async toggleOrder(): Promise<boolean> {
    if (this.draft.qubits !== 2) return false; // disabled for 1 qubit
    const next = this.displayOrder[0] === 0 ? SWAPPED : IDENTITY;
    if (next[0] === 1 && this.swappedDiagrams.size === 0) {
      const token = ++this.requestToken;
      const docs = await Promise.all(
        this.frames.map((f) => this.api.stateGeometry(f.state, [...next])),
      );
      if (token !== this.requestToken) return false;
      for (const doc of docs) {
        if (!doc.ok) {
          this.diagnostics = doc.diagnostics;
          return false;
        }
      }
      docs.forEach((doc, i) => {
        if (doc.ok) this.swappedDiagrams.set(i, doc.doc.diagram);
      });
    }
    this.displayOrder = next;
    return true;
  }
}
