// Wire types for the engine's JSON command/response protocol.
// The UI never computes geometry: everything drawn comes out of
// UiResponse.render, and everything sent in is one of these commands.

export type PointerKind = "down" | "move" | "up";
export type ButtonName = "left" | "right";

export interface SceneDoc {
  work: { width: number; height: number };
  policy: string;
  objects: Record<string, unknown>[];
}

export type UiCommand =
  | { cmd: "load_scene"; scene: SceneDoc | string }
  | { cmd: "pointer"; kind: "down"; x: number; y: number; button: ButtonName }
  | { cmd: "pointer"; kind: "move" | "up"; x: number; y: number }
  | { cmd: "set_contours"; visible: boolean }
  | { cmd: "set_policy"; policy: string }
  | { cmd: "export"; what: "scene" | "trace" | "svg" };

export interface LinePrim {
  kind: "line";
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  stroke: string;
  width: number;
}

export interface BoxPrim {
  kind: "box";
  x: number;
  y: number;
  w: number;
  h: number;
  stroke: string | null;
  fill: string | null;
  width: number;
}

export interface CirclePrim {
  kind: "circle";
  cx: number;
  cy: number;
  r: number;
  stroke: string | null;
  fill: string | null;
  width: number;
}

export interface PolygonPrim {
  kind: "polygon";
  points: [number, number][];
  stroke: string | null;
  fill: string | null;
  width: number;
}

export interface TextPrim {
  kind: "text";
  x: number;
  y: number;
  text: string;
  fill: string;
  size: number;
}

export type RenderPrim = LinePrim | BoxPrim | CirclePrim | PolygonPrim | TextPrim;

export interface InfoEntry {
  index: number;
  type: string;
  bounds: [number, number, number, number];
  caught: boolean;
}

export interface UiResponse {
  repaint: boolean;
  cursor: string;
  render: RenderPrim[];
  info: InfoEntry[];
  export?: { what: string; text: string };
  error?: string;
}

// One transport = one implementation: HTTP POST in the browser, a stdio
// child process in tests. Commands must be serialized (one outstanding).
export interface CoreClient {
  send(command: UiCommand): Promise<UiResponse>;
}
