/**
 * Inspector panel rendering: plain DOM, one row per response field.
 * Every value shown is lifted verbatim from an API response document (the
 * parameter coordinates come from the slice geometry the server echoed).
 */
import type { ClassifyDoc, FateDoc, ParamPoint } from "./types.js";

export function fateText(fate: FateDoc): string {
  switch (fate.kind) {
    case "escaped":
      return `escaped at step ${fate.escape_iter}`;
    case "bounded_periodic":
      return `bounded, period ${fate.period}`;
    case "bounded_no_cycle_found":
      return "bounded, no cycle found";
    default:
      return fate.kind; // unknown kinds display verbatim
  }
}

export function classText(doc: ClassifyDoc): string {
  return `${doc.class.replace(/_/g, " ")} (code ${doc.class_code})`;
}

export function complexText(re: number, im: number): string {
  return im < 0 ? `${re} - ${String(im).slice(1)}i` : `${re} + ${im}i`;
}

export function pointText(point: ParamPoint): string {
  return `c1 = ${complexText(point.re1, point.im1)},  c2 = ${complexText(point.re2, point.im2)}`;
}

export interface JuliaPanelData {
  imageUrl: string;
  interiorFraction: string;
}

/** Rebuild `host` with the classification evidence for `point`. */
export function renderClassification(
  host: HTMLElement,
  point: ParamPoint,
  doc: ClassifyDoc,
  julia: JuliaPanelData | null,
): void {
  host.textContent = "";
  const dl = document.createElement("dl");
  const row = (label: string, field: string, value: string): HTMLElement => {
    const dt = document.createElement("dt");
    dt.textContent = label;
    const dd = document.createElement("dd");
    dd.dataset.field = field;
    dd.textContent = value;
    dl.append(dt, dd);
    return dd;
  };

  row("point", "point", pointText(point));
  row("class", "class", classText(doc));
  row("orbit of 0", "fate-zero", fateText(doc.fate_zero));
  row("critical orbit", "fate-crit", fateText(doc.fate_crit));
  row("period", "period", doc.period !== undefined ? String(doc.period) : "—");
  const confidence = row(
    "confidence", "confidence",
    doc.low_confidence ? "low (no cycle found within budget)" : "normal",
  );
  if (doc.low_confidence) {
    confidence.classList.add("flag-low");
  }
  host.append(dl);

  if (julia) {
    const figure = document.createElement("div");
    figure.className = "julia-view";
    const img = document.createElement("img");
    img.alt = "filled Julia set of the selected parameters";
    img.src = julia.imageUrl;
    const caption = document.createElement("div");
    caption.dataset.field = "interior-fraction";
    caption.textContent = `interior fraction: ${julia.interiorFraction}`;
    figure.append(img, caption);
    host.append(figure);
  }
}
