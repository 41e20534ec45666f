import { fmt2 } from "./format.js";
import type { AmplitudePair, Primitive } from "./types.js";

/** Branches carrying less probability than this show no tooltip. */
export const TOOLTIP_SUPPRESS = 1e-6;

function bits(index: number, numQubits: number): string {
  return index.toString(2).padStart(numQubits, "0");
}

/**
 * Tooltip text for a hovered primitive, or null when none should pop up.
 *
 * Every number comes from an API field: white-triangle tooltip payloads,
 * the semicircle's probability, and the frame's state pairs. `state` is
 * the amplitude list of the frame the diagram belongs to.
 */
export function tooltipFor(
  primitive: Primitive,
  state: AmplitudePair[],
  numQubits: number,
): string | null {
  if (primitive.type === "white_triangle") {
    const t = primitive.tooltip;
    if (t.kind === "marginal") {
      if (t.p0 + t.p1 < TOOLTIP_SUPPRESS) return null;
      return (
        `P(first qubit = 0) = ${fmt2(t.p0)}  ` +
        `P(first qubit = 1) = ${fmt2(t.p1)}`
      );
    }
    const total = t.probabilities[0] + t.probabilities[1];
    if (total < TOOLTIP_SUPPRESS) return null;
    return t.basis_indices
      .map((i, k) => `P${bits(i, numQubits)}: ${fmt2(t.probabilities[k])}`)
      .join("  ");
  }
  if (primitive.type === "semicircle") {
    if (primitive.probability < TOOLTIP_SUPPRESS) return null;
    const [re, im] = state[primitive.basis_index];
    return (
      `P${bits(primitive.basis_index, numQubits)}: ` +
      `${fmt2(primitive.probability)}  amp = (${fmt2(re)}, ${fmt2(im)})`
    );
  }
  return null;
}
