import { describe, expect, it } from "vitest";

import { diagramToSvg } from "../src/render.js";
import type { FramesDocument, Semicircle } from "../src/types.js";
import { fixture } from "./helpers.js";

const DOC: FramesDocument = fixture("grover1_frames.json");

function count(haystack: string, needle: RegExp): number {
  return (haystack.match(needle) ?? []).length;
}

describe("diagram rendering", () => {
  it("produces one SVG panel per frame of the search circuit", () => {
    const panels = DOC.frames.map((f) => diagramToSvg(f.diagram));
    expect(panels).toHaveLength(13);
    for (const svg of panels) {
      expect(svg.startsWith("<svg ")).toBe(true);
      expect(svg.endsWith("</svg>")).toBe(true);
    }
  });

  it("draws one path per semicircle with the radius from the document", () => {
    const frame = DOC.frames[2];
    const svg = diagramToSvg(frame.diagram);
    const semis = frame.diagram.primitives.filter(
      (p) => p.type === "semicircle",
    ) as Semicircle[];
    expect(count(svg, /<path class="semicircle/g)).toBe(semis.length);
    for (const s of semis) {
      const r = s.radius.toFixed(6);
      expect(svg).toContain(`A ${r} ${r} 0 0 0`);
    }
  });

  it("renders the flipped |11> amplitude as a double line after the oracle", () => {
    const svg = diagramToSvg(DOC.frames[3].diagram);
    const group = svg.match(
      /<g class="segment real negative basis-3"[^>]*>(.*?)<\/g>/s,
    );
    expect(group).not.toBeNull();
    expect(count(group![1], /<line /g)).toBe(2);
  });

  it("uses a single line for positive amplitudes", () => {
    const svg = diagramToSvg(DOC.frames[2].diagram);
    const groups = svg.match(/<g class="segment real basis-\d"[^>]*>.*?<\/g>/gs) ?? [];
    expect(groups.length).toBeGreaterThan(0);
    for (const g of groups) expect(count(g, /<line /g)).toBe(1);
  });

  it("tags every primitive with its index for hover lookup", () => {
    const frame = DOC.frames[12];
    const svg = diagramToSvg(frame.diagram);
    frame.diagram.primitives.forEach((_, i) => {
      expect(svg).toContain(`data-index="${i}"`);
    });
  });

  it("embeds the probability labels verbatim from the document", () => {
    for (const frame of DOC.frames) {
      const svg = diagramToSvg(frame.diagram);
      for (const p of frame.diagram.primitives) {
        if (p.type === "probability_label") {
          expect(svg).toContain(`>${p.text}</text>`);
        }
      }
    }
  });

  it("is deterministic", () => {
    const a = diagramToSvg(DOC.frames[5].diagram);
    const b = diagramToSvg(DOC.frames[5].diagram);
    expect(a).toBe(b);
  });
});
