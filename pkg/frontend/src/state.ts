/**
 * Explorer state and the pure helpers that manipulate it.
 *
 * A slice fixes two of the four axes; the remaining two span the map.  The
 * slice endpoint accepts one shared [min, max] window for both free axes,
 * so the view window keeps x and y in lockstep.
 */
import type { SliceRequest } from "./api.js";
import { AXIS_ORDER, type AxisName, type ClassifyDoc, type ParamPoint } from "./types.js";

/** One of the six axis-aligned slice families: which two axes are fixed. */
export interface SliceFamily {
  fixed: readonly [AxisName, AxisName];
  free: readonly [AxisName, AxisName];
  label: string;
}

function makeFamily(fixed: readonly [AxisName, AxisName]): SliceFamily {
  const free = AXIS_ORDER.filter((axis) => axis !== fixed[0] && axis !== fixed[1]);
  const freeX = free[0];
  const freeY = free[1];
  if (free.length !== 2 || !freeX || !freeY) {
    throw new Error("a slice family must fix two distinct axes");
  }
  return {
    fixed,
    free: [freeX, freeY],
    label: `${freeX} × ${freeY} (fix ${fixed[0]}, ${fixed[1]})`,
  };
}

/** All six axis-aligned slice families (choose two of four axes to fix). */
export const SLICE_FAMILIES: readonly SliceFamily[] = [
  makeFamily(["re1", "im1"]),
  makeFamily(["re1", "re2"]),
  makeFamily(["re1", "im2"]),
  makeFamily(["im1", "re2"]),
  makeFamily(["im1", "im2"]),
  makeFamily(["re2", "im2"]),
];

export const RESOLUTION_PRESETS: readonly number[] = [128, 256, 512, 1024];

/** Resolution used for the quick preview while a slider is scrubbing. */
export const PREVIEW_RES = 128;

export interface ViewWindow {
  min: number;
  max: number;
}

export interface JuliaView {
  centerRe: number;
  centerIm: number;
  halfWidth: number;
  res: number;
}

export interface ExplorerState {
  /** Index into SLICE_FAMILIES: which two axes are fixed. */
  familyIndex: number;
  /** Values pinned on the family's two fixed axes, in family order. */
  fixedValues: [number, number];
  /** View window per free axis (kept in lockstep by the slice endpoint). */
  window: { x: ViewWindow; y: ViewWindow };
  /** Full-resolution preset for settled renders. */
  resolution: number;
  /** Most recently inspected parameter point, if any. */
  selectedPoint: ParamPoint | null;
  /** Classification document for the selected point, if any. */
  lastClassification: ClassifyDoc | null;
  /** Viewport for the inspector's Julia render. */
  juliaView: JuliaView;
}

export function defaultState(): ExplorerState {
  return {
    familyIndex: 5, // free re1 x im1: the c1 plane with c2 pinned
    fixedValues: [-0.4, 0.0],
    window: { x: { min: -2, max: 2 }, y: { min: -2, max: 2 } },
    resolution: 256,
    selectedPoint: null,
    lastClassification: null,
    juliaView: { centerRe: 0, centerIm: 0, halfWidth: 2, res: 256 },
  };
}

export function familyOf(state: ExplorerState): SliceFamily {
  const fam = SLICE_FAMILIES[state.familyIndex];
  if (!fam) {
    throw new Error(`no slice family #${state.familyIndex}`);
  }
  return fam;
}

/** Fixed and free axes must partition the four coordinates; min < max. */
export function checkState(state: ExplorerState): void {
  const fam = familyOf(state);
  const axes = new Set<AxisName>([...fam.fixed, ...fam.free]);
  if (axes.size !== 4) {
    throw new Error("fixed and free axes must partition the four coordinates");
  }
  for (const w of [state.window.x, state.window.y]) {
    if (!(w.min < w.max)) {
      throw new Error(`window must satisfy min < max, got [${w.min}, ${w.max}]`);
    }
  }
  if (!Number.isFinite(state.fixedValues[0]) || !Number.isFinite(state.fixedValues[1])) {
    throw new Error("fixed values must be finite");
  }
}

/** Slice request for the current state at the given pixel resolution. */
export function sliceRequest(state: ExplorerState, res: number): SliceRequest {
  checkState(state);
  const { x, y } = state.window;
  if (x.min !== y.min || x.max !== y.max) {
    throw new Error("the slice endpoint takes one shared window; x and y must match");
  }
  const fam = familyOf(state);
  return {
    fixed: [
      [fam.fixed[0], state.fixedValues[0]],
      [fam.fixed[1], state.fixedValues[1]],
    ],
    res,
    min: x.min,
    max: x.max,
  };
}

/** Window scaled by `factor` about its center (0.5 zooms in, 2 zooms out). */
export function zoomedWindow(w: ViewWindow, factor: number): ViewWindow {
  const center = (w.min + w.max) / 2;
  const half = ((w.max - w.min) / 2) * factor;
  return { min: center - half, max: center + half };
}
