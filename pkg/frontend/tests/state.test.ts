import { describe, expect, it } from "vitest";

import { sliceUrl } from "../src/api.js";
import {
  checkState,
  defaultState,
  familyOf,
  PREVIEW_RES,
  RESOLUTION_PRESETS,
  SLICE_FAMILIES,
  sliceRequest,
  zoomedWindow,
} from "../src/state.js";
import { AXIS_ORDER } from "../src/types.js";

describe("slice families", () => {
  it("enumerates exactly the six axis-aligned families", () => {
    expect(SLICE_FAMILIES).toHaveLength(6);
    const signatures = new Set(SLICE_FAMILIES.map((f) => f.fixed.slice().sort().join("+")));
    expect(signatures.size).toBe(6);
  });

  it("each family partitions the four coordinates", () => {
    for (const fam of SLICE_FAMILIES) {
      const axes = new Set([...fam.fixed, ...fam.free]);
      expect(axes.size).toBe(4);
      for (const axis of AXIS_ORDER) {
        expect(axes.has(axis)).toBe(true);
      }
    }
  });

  it("free axes follow the canonical axis order", () => {
    for (const fam of SLICE_FAMILIES) {
      const expected = AXIS_ORDER.filter((a) => !fam.fixed.includes(a));
      expect(fam.free).toEqual(expected);
    }
  });
});

describe("defaultState", () => {
  it("starts on the c1 plane with c2 pinned and passes validation", () => {
    const state = defaultState();
    checkState(state);
    const fam = familyOf(state);
    expect(fam.free).toEqual(["re1", "im1"]);
    expect(fam.fixed).toEqual(["re2", "im2"]);
    expect(state.fixedValues).toEqual([-0.4, 0]);
    expect(state.window.x).toEqual({ min: -2, max: 2 });
    expect(state.selectedPoint).toBeNull();
    expect(state.lastClassification).toBeNull();
    expect(state.juliaView.halfWidth).toBeGreaterThan(0);
  });

  it("offers the standard resolution presets", () => {
    expect(RESOLUTION_PRESETS).toEqual([128, 256, 512, 1024]);
    expect(RESOLUTION_PRESETS).toContain(PREVIEW_RES);
    expect(RESOLUTION_PRESETS).toContain(defaultState().resolution);
  });
});

describe("checkState", () => {
  it("rejects a window without min < max", () => {
    const state = defaultState();
    state.window = { x: { min: 1, max: 1 }, y: { min: 1, max: 1 } };
    expect(() => checkState(state)).toThrow(/min < max/);
  });

  it("rejects non-finite fixed values", () => {
    const state = defaultState();
    state.fixedValues = [Number.NaN, 0];
    expect(() => checkState(state)).toThrow(/finite/);
  });

  it("rejects an unknown family index", () => {
    const state = defaultState();
    state.familyIndex = 17;
    expect(() => checkState(state)).toThrow(/family/);
  });
});

describe("sliceRequest", () => {
  it("pins the family's fixed axes at the state's values", () => {
    const state = defaultState();
    const req = sliceRequest(state, 256);
    expect(req.fixed).toEqual([["re2", -0.4], ["im2", 0]]);
    expect(req.res).toBe(256);
    expect(req.min).toBe(-2);
    expect(req.max).toBe(2);
  });

  it("builds the exact query string the service expects", () => {
    const url = sliceUrl(sliceRequest(defaultState(), 256));
    expect(url).toBe("/api/slice?fix1=re2%3A-0.4&fix2=im2%3A0&res=256&min=-2&max=2");
  });

  it("refuses mismatched x and y windows (one shared window on the wire)", () => {
    const state = defaultState();
    state.window = { x: { min: -2, max: 2 }, y: { min: -1, max: 1 } };
    expect(() => sliceRequest(state, 64)).toThrow(/shared window/);
  });
});

describe("zoomedWindow", () => {
  it("halves and doubles about the window center", () => {
    expect(zoomedWindow({ min: -2, max: 2 }, 0.5)).toEqual({ min: -1, max: 1 });
    expect(zoomedWindow({ min: -1, max: 1 }, 2)).toEqual({ min: -2, max: 2 });
    expect(zoomedWindow({ min: 0, max: 1 }, 0.5)).toEqual({ min: 0.25, max: 0.75 });
  });
});
