import { describe, expect, it } from "vitest";

import {
  ApiFailure,
  classifyUrl,
  fetchClassify,
  fetchJulia,
  fetchSlice,
  juliaUrl,
  sliceUrl,
  type FetchLike,
} from "../src/api.js";
import { paramForCol } from "../src/coords.js";

// A verbatim X-Slice-Spec header captured from the service.
const REAL_SLICE_SPEC =
  '{"fixed": {"im2": 1.032, "re2": -0.1562}, "iters": 500, "row0_y": "max", '
  + '"x": {"axis": "re1", "max": 0.3438, "min": -0.6562, "res": 16}, '
  + '"y": {"axis": "im1", "max": 0.3438, "min": -0.6562, "res": 16}}';

const PNG_MAGIC = new Uint8Array([0x89, 0x50, 0x4e, 0x47]);

function fetchReturning(resp: Response): FetchLike {
  return async () => resp;
}

describe("url builders", () => {
  it("sliceUrl pins axes as axis:value pairs", () => {
    const url = sliceUrl({
      fixed: [["re2", -0.1562], ["im2", 1.032]],
      res: 256,
      min: -0.6562,
      max: 0.3438,
      iters: 750,
    });
    expect(url).toBe(
      "/api/slice?fix1=re2%3A-0.1562&fix2=im2%3A1.032&res=256"
      + "&min=-0.6562&max=0.3438&iters=750",
    );
  });

  it("classifyUrl spells out the four coordinates", () => {
    const url = classifyUrl({ re1: -0.8046875, im1: 0.2109375, re2: -0.4, im2: 0 }, 500);
    expect(url).toBe(
      "/api/classify?c1re=-0.8046875&c1im=0.2109375&c2re=-0.4&c2im=0&iters=500",
    );
  });

  it("juliaUrl carries parameters and viewport", () => {
    const url = juliaUrl({
      point: { re1: 0, im1: 0, re2: 0, im2: 0 },
      centerRe: 0,
      centerIm: 0,
      halfWidth: 1.5,
      res: 256,
    });
    expect(url).toBe(
      "/api/julia?c1re=0&c1im=0&c2re=0&c2im=0&cre=0&cim=0&hw=1.5&res=256",
    );
  });
});

describe("fetchSlice", () => {
  it("parses the real X-Slice-Spec header shape", async () => {
    const resp = new Response(new Blob([PNG_MAGIC]), {
      status: 200,
      headers: {
        "X-Slice-Spec": REAL_SLICE_SPEC,
        "X-Low-Confidence-Count": "3",
      },
    });
    const result = await fetchSlice(fetchReturning(resp), "/api/slice?x");
    expect(result.meta.x.axis).toBe("re1");
    expect(result.meta.y.axis).toBe("im1");
    expect(result.meta.fixed).toEqual({ im2: 1.032, re2: -0.1562 });
    expect(result.meta.row0_y).toBe("max");
    expect(result.meta.iters).toBe(500);
    expect(result.lowConfidenceCount).toBe(3);
    expect(result.blob.size).toBe(PNG_MAGIC.length);
    // frozen center of column 0 for this geometry, from the sampling backend
    expect(paramForCol(result.meta, 0)).toBe(-0.62495);
  });

  it("rejects a response without geometry metadata", async () => {
    const resp = new Response(new Blob([PNG_MAGIC]), { status: 200 });
    await expect(fetchSlice(fetchReturning(resp), "/u")).rejects.toThrow(/X-Slice-Spec/);
  });

  it("surfaces the service's JSON error message", async () => {
    const resp = new Response('{"error": "min must be < max, got [2, -2]"}', {
      status: 400,
      headers: { "Content-Type": "application/json" },
    });
    const failure = await fetchSlice(fetchReturning(resp), "/u").catch((e: unknown) => e);
    expect(failure).toBeInstanceOf(ApiFailure);
    expect((failure as ApiFailure).message).toBe("min must be < max, got [2, -2]");
    expect((failure as ApiFailure).status).toBe(400);
  });

  it("falls back to the HTTP status for non-JSON errors", async () => {
    const resp = new Response("gateway exploded", { status: 502 });
    const failure = await fetchSlice(fetchReturning(resp), "/u").catch((e: unknown) => e);
    expect((failure as ApiFailure).message).toBe("HTTP 502");
  });
});

describe("fetchClassify", () => {
  it("returns the response document unchanged", async () => {
    const doc = {
      class: "connected",
      class_code: 1,
      fate_zero: { kind: "bounded_periodic", period: 1 },
      fate_crit: { kind: "bounded_periodic", period: 1 },
      low_confidence: false,
      period: 1,
    };
    const resp = new Response(JSON.stringify(doc), {
      status: 200,
      headers: { "Content-Type": "application/json" },
    });
    await expect(fetchClassify(fetchReturning(resp), "/u")).resolves.toEqual(doc);
  });
});

describe("fetchJulia", () => {
  it("keeps the interior-fraction header verbatim", async () => {
    const resp = new Response(new Blob([PNG_MAGIC]), {
      status: 200,
      headers: { "X-Interior-Fraction": "0.350586" },
    });
    const result = await fetchJulia(fetchReturning(resp), "/u");
    expect(result.interiorFraction).toBe("0.350586");
    expect(result.blob.size).toBe(PNG_MAGIC.length);
  });
});
