// JSON document shapes produced by the backend API. The UI never
// computes probabilities or geometry itself; these fields are the only
// source of every displayed number.

export type Point = [number, number];
export type AmplitudePair = [number, number];

export interface MarginalTooltip {
  kind: "marginal";
  display_qubit: number;
  p0: number;
  p1: number;
}

export interface JointTooltip {
  kind: "joint";
  basis_indices: [number, number];
  probabilities: [number, number];
}

export interface WhiteTriangle {
  type: "white_triangle";
  level: number;
  vertices: [Point, Point, Point];
  tooltip: MarginalTooltip | JointTooltip;
}

export interface StateTriangle {
  type: "state_triangle";
  basis_index: number;
  color_role: string;
  vertices: [Point, Point, Point];
}

export interface Semicircle {
  type: "semicircle";
  basis_index: number;
  center: Point;
  radius: number;
  orientation: number;
  area_value: number;
  probability: number;
}

export interface AmplitudeSegment {
  type: "amplitude_segment";
  basis_index: number;
  part: "real" | "imaginary";
  negative: boolean;
  endpoints: [Point, Point];
}

export interface ProbabilityLabel {
  type: "probability_label";
  basis_index: number;
  anchor: Point;
  text: string;
}

export type Primitive =
  | WhiteTriangle
  | StateTriangle
  | Semicircle
  | AmplitudeSegment
  | ProbabilityLabel;

export interface Diagram {
  schema_version: string;
  num_qubits: number;
  scale: number;
  order: number[];
  primitives: Primitive[];
}

export interface Diagnostic {
  severity: "error" | "warning";
  location: string;
  message: string;
}

export interface GateJson {
  name: string;
  params: (number | string)[];
  targets: number[];
}

export interface CircuitJson {
  qubits: number;
  gates: GateJson[];
}

export interface FrameJson {
  step: number;
  gate: GateJson | null;
  state: AmplitudePair[];
  probabilities: number[];
  diagram: Diagram;
}

export interface FramesDocument {
  schema_version: string;
  frames: FrameJson[];
  diagnostics: Diagnostic[];
}

export interface GeometryDocument {
  schema_version: string;
  diagram: Diagram;
  diagnostics: Diagnostic[];
}

export interface ErrorDocument {
  schema_version: string;
  diagnostics: Diagnostic[];
}
