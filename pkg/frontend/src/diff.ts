import { fmt2 } from "./format.js";

export interface ProbabilityDiff {
  basisIndex: number;
  before: number;
  after: number;
  changed: boolean;
}

/** Side-by-side comparison of final-frame probabilities before and
 * after a what-if edit. Values are API fields, untouched. */
export function diffProbabilities(
  before: number[],
  after: number[],
): ProbabilityDiff[] {
  const n = Math.max(before.length, after.length);
  const rows: ProbabilityDiff[] = [];
  for (let i = 0; i < n; i++) {
    const b = before[i] ?? 0;
    const a = after[i] ?? 0;
    rows.push({
      basisIndex: i,
      before: b,
      after: a,
      changed: Math.abs(a - b) > 1e-9,
    });
  }
  return rows;
}

export function diffRowText(row: ProbabilityDiff, numQubits: number): string {
  const bits = row.basisIndex.toString(2).padStart(numQubits, "0");
  const marker = row.changed ? "  *" : "";
  return `P${bits}: ${fmt2(row.before)} -> ${fmt2(row.after)}${marker}`;
}
