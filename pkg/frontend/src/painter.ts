import type { RenderPrim } from "./protocol.js";

// The slice of CanvasRenderingContext2D the painter actually touches.
// Tests hand in a recording fake; the browser hands in the real thing.
export type Canvas2D = Pick<
  CanvasRenderingContext2D,
  | "fillRect"
  | "strokeRect"
  | "beginPath"
  | "moveTo"
  | "lineTo"
  | "closePath"
  | "arc"
  | "fill"
  | "stroke"
  | "fillText"
  | "fillStyle"
  | "strokeStyle"
  | "lineWidth"
  | "font"
>;

const BACKGROUND = "#ffffff";

function pathPolygon(ctx: Canvas2D, points: [number, number][]) {
  ctx.beginPath();
  ctx.moveTo(points[0][0], points[0][1]);
  for (let i = 1; i < points.length; i++) {
    ctx.lineTo(points[i][0], points[i][1]);
  }
  ctx.closePath();
}

// Transcribe one frame. The list arrives back-to-front, so plain iteration
// gives the right stacking; all geometry decisions already happened upstream.
export function paint(ctx: Canvas2D, prims: RenderPrim[], width: number, height: number) {
  ctx.fillStyle = BACKGROUND;
  ctx.fillRect(0, 0, width, height);

  for (const prim of prims) {
    switch (prim.kind) {
      case "line":
        ctx.strokeStyle = prim.stroke;
        ctx.lineWidth = prim.width;
        ctx.beginPath();
        ctx.moveTo(prim.x1, prim.y1);
        ctx.lineTo(prim.x2, prim.y2);
        ctx.stroke();
        break;
      case "box":
        if (prim.fill !== null) {
          ctx.fillStyle = prim.fill;
          ctx.fillRect(prim.x, prim.y, prim.w, prim.h);
        }
        if (prim.stroke !== null) {
          ctx.strokeStyle = prim.stroke;
          ctx.lineWidth = prim.width;
          ctx.strokeRect(prim.x, prim.y, prim.w, prim.h);
        }
        break;
      case "circle":
        ctx.beginPath();
        ctx.arc(prim.cx, prim.cy, prim.r, 0, Math.PI * 2);
        if (prim.fill !== null) {
          ctx.fillStyle = prim.fill;
          ctx.fill();
        }
        if (prim.stroke !== null) {
          ctx.strokeStyle = prim.stroke;
          ctx.lineWidth = prim.width;
          ctx.stroke();
        }
        break;
      case "polygon":
        if (prim.points.length === 0) break;
        pathPolygon(ctx, prim.points);
        if (prim.fill !== null) {
          ctx.fillStyle = prim.fill;
          ctx.fill();
        }
        if (prim.stroke !== null) {
          ctx.strokeStyle = prim.stroke;
          ctx.lineWidth = prim.width;
          ctx.stroke();
        }
        break;
      case "text":
        ctx.fillStyle = prim.fill;
        ctx.font = `${prim.size}px sans-serif`;
        ctx.fillText(prim.text, prim.x, prim.y);
        break;
      default:
        // unknown primitive from a newer core: skip rather than crash
        break;
    }
  }
}
