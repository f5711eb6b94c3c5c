/**
 * Pixel-to-parameter conversions for slice images.
 *
 * The server samples cell centers `min + (i + 0.5) * step` with
 * `step = (max - min) / res`, and encodes images with row 0 on the y-max
 * edge (`row0_y: "max"`).  The functions below reproduce that arithmetic
 * verbatim — the same operations in the same order — so a clicked pixel
 * recovers the exact double the server used for that cell center.
 */
import { AXIS_ORDER, type ParamPoint, type SliceMeta } from "./types.js";

/** Center coordinate of cell i along one axis (the server's expression). */
export function cellCenter(min: number, max: number, res: number, i: number): number {
  const step = (max - min) / res;
  return min + (i + 0.5) * step;
}

/** Parameter value under image column i. */
export function paramForCol(meta: SliceMeta, i: number): number {
  return cellCenter(meta.x.min, meta.x.max, meta.x.res, i);
}

/** Parameter value under image row j; row 0 shows the y-max edge. */
export function paramForRow(meta: SliceMeta, j: number): number {
  return cellCenter(meta.y.min, meta.y.max, meta.y.res, meta.y.res - 1 - j);
}

/** Image column whose cell center is nearest to x, clamped into the image. */
export function colForParam(meta: SliceMeta, x: number): number {
  const step = (meta.x.max - meta.x.min) / meta.x.res;
  return clampIndex(Math.round((x - meta.x.min) / step - 0.5), meta.x.res);
}

/** Image row whose cell center is nearest to y, clamped into the image. */
export function rowForParam(meta: SliceMeta, y: number): number {
  const step = (meta.y.max - meta.y.min) / meta.y.res;
  const fromMin = Math.round((y - meta.y.min) / step - 0.5);
  return clampIndex(meta.y.res - 1 - fromMin, meta.y.res);
}

/** Full four-axis parameter point for a click on image pixel (i, j). */
export function paramPointForPixel(meta: SliceMeta, i: number, j: number): ParamPoint {
  const point: Partial<ParamPoint> = {};
  for (const axis of AXIS_ORDER) {
    const fixedValue = meta.fixed[axis];
    if (fixedValue !== undefined) {
      point[axis] = fixedValue;
    }
  }
  point[meta.x.axis] = paramForCol(meta, i);
  point[meta.y.axis] = paramForRow(meta, j);
  return point as ParamPoint;
}

/** Image pixel under a mouse position, given the element's displayed size. */
export function pixelFromMouse(
  meta: SliceMeta,
  offsetX: number,
  offsetY: number,
  displayWidth: number,
  displayHeight: number,
): { i: number; j: number } {
  const i = clampIndex(Math.floor((offsetX / displayWidth) * meta.x.res), meta.x.res);
  const j = clampIndex(Math.floor((offsetY / displayHeight) * meta.y.res), meta.y.res);
  return { i, j };
}

function clampIndex(i: number, res: number): number {
  return Math.min(res - 1, Math.max(0, i));
}
