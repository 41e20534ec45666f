// Renders a Diagram document to SVG markup. This mirrors the server
// renderer's conventions (y-flip, 5% margin, class names, double lines
// for negative segments) and adds data-index attributes so hover
// handlers can map an element back to its primitive. All coordinates
// and colors come straight from the document; nothing is recomputed.
import type { Diagram, Primitive, Point, Semicircle } from "./types.js";

export const COLOR_MAP: Record<string, string> = {
  cyan: "#24C2CB",
  red: "#E35D5D",
  blue: "#4C78C9",
  almond: "#EFDECD",
  purple: "#8E6BC0",
  white: "#FFFFFF",
  real: "#000000",
  imaginary: "#8A8A8A",
};

const STROKE_WIDTH = 1.5;
const DOUBLE_LINE_GAP = 3.0;
const FONT_SIZE = 14;

function fmt(v: number): string {
  const s = v.toFixed(6);
  return s === "-0.000000" ? "0.000000" : s;
}

interface ViewFrame {
  minX: number;
  maxY: number;
  width: number;
  height: number;
}

function bounds(diagram: Diagram): [number, number, number, number] {
  const xs: number[] = [];
  const ys: number[] = [];
  const add = (p: Point) => {
    xs.push(p[0]);
    ys.push(p[1]);
  };
  for (const p of diagram.primitives) {
    if (p.type === "white_triangle" || p.type === "state_triangle") {
      p.vertices.forEach(add);
    } else if (p.type === "semicircle") {
      add([p.center[0] - p.radius, p.center[1] - p.radius]);
      add([p.center[0] + p.radius, p.center[1] + p.radius]);
    } else if (p.type === "amplitude_segment") {
      p.endpoints.forEach(add);
    } else {
      add(p.anchor);
    }
  }
  if (xs.length === 0) return [0, 0, diagram.scale, diagram.scale];
  return [Math.min(...xs), Math.min(...ys), Math.max(...xs), Math.max(...ys)];
}

function viewFrame(diagram: Diagram): ViewFrame {
  const [minX, minY, maxX, maxY] = bounds(diagram);
  const margin = 0.05 * Math.max(maxX - minX, maxY - minY, diagram.scale);
  return {
    minX: minX - margin,
    maxY: maxY + margin,
    width: maxX - minX + 2 * margin,
    height: maxY - minY + 2 * margin,
  };
}

function pt(frame: ViewFrame, p: Point): Point {
  return [p[0] - frame.minX, frame.maxY - p[1]];
}

function semicirclePath(p: Semicircle, frame: ViewFrame): string {
  const nx = Math.cos(p.orientation);
  const ny = Math.sin(p.orientation);
  const start = pt(frame, [p.center[0] - p.radius * ny, p.center[1] + p.radius * nx]);
  const end = pt(frame, [p.center[0] + p.radius * ny, p.center[1] - p.radius * nx]);
  const r = fmt(p.radius);
  return `M ${fmt(start[0])} ${fmt(start[1])} A ${r} ${r} 0 0 0 ${fmt(end[0])} ${fmt(end[1])} Z`;
}

function polygonPoints(vertices: Point[], frame: ViewFrame): string {
  return vertices.map((v) => pt(frame, v)).map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
}

function line(a: Point, b: Point, stroke: string): string {
  return (
    `<line x1="${fmt(a[0])}" y1="${fmt(a[1])}" x2="${fmt(b[0])}" y2="${fmt(b[1])}" ` +
    `stroke="${stroke}" stroke-width="${fmt(STROKE_WIDTH)}" stroke-linecap="round" />`
  );
}

function roleOf(diagram: Diagram, basisIndex: number): string {
  for (const p of diagram.primitives) {
    if (p.type === "state_triangle" && p.basis_index === basisIndex) {
      return p.color_role;
    }
  }
  return diagram.num_qubits === 1
    ? ["cyan", "red"][basisIndex]
    : ["blue", "red", "almond", "purple"][basisIndex];
}

function renderPrimitive(
  p: Primitive,
  index: number,
  diagram: Diagram,
  frame: ViewFrame,
): string {
  const data = `data-index="${index}"`;
  if (p.type === "white_triangle") {
    return (
      `<polygon class="white-triangle level-${p.level}" ${data} ` +
      `points="${polygonPoints(p.vertices, frame)}" ` +
      `fill="${COLOR_MAP.white}" fill-opacity="0.0" ` +
      `stroke="#555555" stroke-width="${fmt(STROKE_WIDTH)}" ` +
      `pointer-events="stroke" />`
    );
  }
  if (p.type === "semicircle") {
    const fill = COLOR_MAP[roleOf(diagram, p.basis_index)] ?? "#CCCCCC";
    return (
      `<path class="semicircle basis-${p.basis_index}" ${data} ` +
      `d="${semicirclePath(p, frame)}" fill="${fill}" ` +
      `fill-opacity="0.45" stroke="none" />`
    );
  }
  if (p.type === "state_triangle") {
    const fill = COLOR_MAP[p.color_role] ?? "#CCCCCC";
    return (
      `<polygon class="state-triangle basis-${p.basis_index}" ${data} ` +
      `points="${polygonPoints(p.vertices, frame)}" ` +
      `fill="${fill}" fill-opacity="0.85" stroke="none" />`
    );
  }
  if (p.type === "amplitude_segment") {
    const stroke = p.part === "real" ? COLOR_MAP.real : COLOR_MAP.imaginary;
    const a = pt(frame, p.endpoints[0]);
    const b = pt(frame, p.endpoints[1]);
    const cls = `segment ${p.part}${p.negative ? " negative" : ""} basis-${p.basis_index}`;
    if (!p.negative) {
      return `<g class="${cls}" ${data}>${line(a, b, stroke)}</g>`;
    }
    const dx = b[0] - a[0];
    const dy = b[1] - a[1];
    const norm = Math.hypot(dx, dy);
    const h = DOUBLE_LINE_GAP / 2;
    const [ox, oy] = norm === 0 ? [0, h] : [(-dy / norm) * h, (dx / norm) * h];
    return (
      `<g class="${cls}" ${data}>` +
      line([a[0] + ox, a[1] + oy], [b[0] + ox, b[1] + oy], stroke) +
      line([a[0] - ox, a[1] - oy], [b[0] - ox, b[1] - oy], stroke) +
      `</g>`
    );
  }
  const [x, y] = pt(frame, p.anchor);
  return (
    `<text class="label basis-${p.basis_index}" ${data} ` +
    `x="${fmt(x)}" y="${fmt(y)}" font-size="${fmt(FONT_SIZE)}" ` +
    `font-family="monospace" text-anchor="middle">${p.text}</text>`
  );
}

/** SVG markup for one diagram. Pure string-in string-out; the caller
 * injects it into the DOM and binds hover handlers via data-index. */
export function diagramToSvg(diagram: Diagram): string {
  const frame = viewFrame(diagram);
  const body = diagram.primitives
    .map((p, i) => renderPrimitive(p, i, diagram, frame))
    .join("\n");
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" ` +
    `viewBox="0 0 ${fmt(frame.width)} ${fmt(frame.height)}" ` +
    `width="${fmt(frame.width)}" height="${fmt(frame.height)}">\n` +
    body +
    `\n</svg>`
  );
}
