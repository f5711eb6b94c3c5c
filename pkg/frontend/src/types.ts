/**
 * Shared data shapes for the explorer.
 *
 * Everything here mirrors a service response document: the explorer performs
 * no classification or rendering arithmetic of its own, it only displays what
 * the API returns.
 */

/** The four parameter-space coordinates: Re/Im of c1 and c2. */
export type AxisName = "re1" | "im1" | "re2" | "im2";

/** Canonical axis order; the free axes of a slice follow this order. */
export const AXIS_ORDER: readonly AxisName[] = ["re1", "im1", "re2", "im2"];

/** A parameter point, one value per axis. */
export type ParamPoint = Record<AxisName, number>;

/** One free direction of a slice, as echoed by the server. */
export interface AxisSpan {
  axis: AxisName;
  min: number;
  max: number;
  res: number;
}

/**
 * Parsed `X-Slice-Spec` response header: the authoritative geometry of a
 * slice image.  `row0_y: "max"` records that image row 0 shows the y-max
 * edge.  Every pixel-to-parameter conversion goes through this document.
 */
export interface SliceMeta {
  fixed: Partial<Record<AxisName, number>>;
  x: AxisSpan;
  y: AxisSpan;
  row0_y: "max";
  iters: number;
}

/** Fate document for one critical orbit. */
export interface FateDoc {
  kind: "escaped" | "bounded_periodic" | "bounded_no_cycle_found";
  escape_iter?: number;
  period?: number;
}

/** `/api/classify` response document. */
export interface ClassifyDoc {
  class: string;
  class_code: number;
  fate_zero: FateDoc;
  fate_crit: FateDoc;
  low_confidence: boolean;
  period?: number;
  config?: Record<string, unknown>;
}
