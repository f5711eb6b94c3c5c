/**
 * Typed fetch wrappers for the service API.
 *
 * URLs are relative, so the explorer works wherever the bundle is served
 * from.  Slice responses carry their resolved geometry in the
 * `X-Slice-Spec` header; everything the UI later shows about a slice
 * derives from that document, never from client-side assumptions.
 */
import type { AxisName, ClassifyDoc, ParamPoint, SliceMeta } from "./types.js";

/** Minimal fetch signature, injectable for tests. */
export type FetchLike = (url: string, init?: { signal?: AbortSignal }) => Promise<Response>;

export class ApiFailure extends Error {
  constructor(message: string, readonly status: number) {
    super(message);
    this.name = "ApiFailure";
  }
}

export interface SliceRequest {
  fixed: ReadonlyArray<readonly [AxisName, number]>;
  res: number;
  min: number;
  max: number;
  iters?: number;
}

export function sliceUrl(req: SliceRequest): string {
  const first = req.fixed[0];
  const second = req.fixed[1];
  if (!first || !second || req.fixed.length !== 2) {
    throw new Error("a slice request must fix exactly two axes");
  }
  const q = new URLSearchParams();
  q.set("fix1", `${first[0]}:${first[1]}`);
  q.set("fix2", `${second[0]}:${second[1]}`);
  q.set("res", String(req.res));
  q.set("min", String(req.min));
  q.set("max", String(req.max));
  if (req.iters !== undefined) {
    q.set("iters", String(req.iters));
  }
  return "/api/slice?" + q.toString();
}

export function classifyUrl(point: ParamPoint, iters?: number): string {
  const q = new URLSearchParams();
  q.set("c1re", String(point.re1));
  q.set("c1im", String(point.im1));
  q.set("c2re", String(point.re2));
  q.set("c2im", String(point.im2));
  if (iters !== undefined) {
    q.set("iters", String(iters));
  }
  return "/api/classify?" + q.toString();
}

export interface JuliaRequest {
  point: ParamPoint;
  centerRe: number;
  centerIm: number;
  halfWidth: number;
  res: number;
  iters?: number;
}

export function juliaUrl(req: JuliaRequest): string {
  const q = new URLSearchParams();
  q.set("c1re", String(req.point.re1));
  q.set("c1im", String(req.point.im1));
  q.set("c2re", String(req.point.re2));
  q.set("c2im", String(req.point.im2));
  q.set("cre", String(req.centerRe));
  q.set("cim", String(req.centerIm));
  q.set("hw", String(req.halfWidth));
  q.set("res", String(req.res));
  if (req.iters !== undefined) {
    q.set("iters", String(req.iters));
  }
  return "/api/julia?" + q.toString();
}

async function failureFrom(resp: Response): Promise<ApiFailure> {
  let message = `HTTP ${resp.status}`;
  try {
    const body: unknown = await resp.json();
    if (body && typeof body === "object" && "error" in body
        && typeof (body as { error: unknown }).error === "string") {
      message = (body as { error: string }).error;
    }
  } catch {
    // not a JSON body; keep the status-line message
  }
  return new ApiFailure(message, resp.status);
}

export interface SliceResult {
  blob: Blob;
  meta: SliceMeta;
  lowConfidenceCount: number;
}

export async function fetchSlice(
  fetchImpl: FetchLike,
  url: string,
  signal?: AbortSignal,
): Promise<SliceResult> {
  const resp = await fetchImpl(url, { signal });
  if (!resp.ok) {
    throw await failureFrom(resp);
  }
  const header = resp.headers.get("X-Slice-Spec");
  if (!header) {
    throw new ApiFailure("slice response is missing X-Slice-Spec", resp.status);
  }
  const meta = JSON.parse(header) as SliceMeta;
  const lowConfidenceCount = Number(resp.headers.get("X-Low-Confidence-Count") ?? "0");
  return { blob: await resp.blob(), meta, lowConfidenceCount };
}

export async function fetchClassify(
  fetchImpl: FetchLike,
  url: string,
  signal?: AbortSignal,
): Promise<ClassifyDoc> {
  const resp = await fetchImpl(url, { signal });
  if (!resp.ok) {
    throw await failureFrom(resp);
  }
  return (await resp.json()) as ClassifyDoc;
}

export interface JuliaResult {
  blob: Blob;
  /** Verbatim `X-Interior-Fraction` header, displayed as-is. */
  interiorFraction: string;
}

export async function fetchJulia(
  fetchImpl: FetchLike,
  url: string,
  signal?: AbortSignal,
): Promise<JuliaResult> {
  const resp = await fetchImpl(url, { signal });
  if (!resp.ok) {
    throw await failureFrom(resp);
  }
  return {
    blob: await resp.blob(),
    interiorFraction: resp.headers.get("X-Interior-Fraction") ?? "",
  };
}
