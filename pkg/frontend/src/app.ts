/**
 * The explorer application: slice-family and window controls, the class
 * map with a click inspector, and the classification evidence panel.
 *
 * Request discipline: slice renders and point inspections each run through
 * a latest-wins channel, so rapid scrubbing can never paint a stale image —
 * superseded requests are aborted and their late responses dropped.  All
 * displayed values originate from API responses; pixel-to-parameter
 * conversion uses only the geometry echoed in the X-Slice-Spec header.
 */
import {
  classifyUrl,
  fetchClassify,
  fetchJulia,
  fetchSlice,
  juliaUrl,
  sliceUrl,
  type FetchLike,
} from "./api.js";
import { colForParam, paramPointForPixel, pixelFromMouse, rowForParam } from "./coords.js";
import { LatestWins } from "./latest.js";
import { renderClassification } from "./panel.js";
import {
  defaultState,
  familyOf,
  PREVIEW_RES,
  RESOLUTION_PRESETS,
  SLICE_FAMILIES,
  sliceRequest,
  zoomedWindow,
  type ExplorerState,
} from "./state.js";
import type { SliceMeta } from "./types.js";

let objectUrlSeq = 0;

/** Object URL for a blob, with a fallback for DOMs that lack the API. */
function makeObjectUrl(blob: Blob): string {
  if (typeof URL !== "undefined" && typeof URL.createObjectURL === "function") {
    return URL.createObjectURL(blob);
  }
  objectUrlSeq += 1;
  return `blob:inline-${objectUrlSeq}`;
}

function dropObjectUrl(url: string | null): void {
  if (url && !url.startsWith("blob:inline-")
      && typeof URL !== "undefined" && typeof URL.revokeObjectURL === "function") {
    URL.revokeObjectURL(url);
  }
}

function isAbort(err: unknown): boolean {
  return err instanceof Error && err.name === "AbortError";
}

function messageOf(err: unknown): string {
  return err instanceof Error ? err.message : String(err);
}

export class ExplorerApp {
  readonly state: ExplorerState;

  private readonly fetchImpl: FetchLike;
  private readonly sliceChannel = new LatestWins();
  private readonly inspectChannel = new LatestWins();

  private readonly familySelect: HTMLSelectElement;
  private readonly fixedSliders: [HTMLInputElement, HTMLInputElement];
  private readonly fixedNumbers: [HTMLInputElement, HTMLInputElement];
  private readonly fixedLabels: [HTMLElement, HTMLElement];
  private readonly presetSelect: HTMLSelectElement;
  private readonly windowMinInput: HTMLInputElement;
  private readonly windowMaxInput: HTMLInputElement;
  readonly mapImg: HTMLImageElement;
  private readonly marker: HTMLElement;
  private readonly banner: HTMLElement;
  private readonly lowConfidenceNote: HTMLElement;
  private readonly panelHost: HTMLElement;

  private meta: SliceMeta | null = null;
  private mapObjectUrl: string | null = null;
  private juliaObjectUrl: string | null = null;

  constructor(root: HTMLElement, fetchImpl?: FetchLike) {
    this.fetchImpl = fetchImpl ?? ((url, init) => fetch(url, init));
    this.state = defaultState();

    root.textContent = "";
    const shell = document.createElement("div");
    shell.className = "explorer";

    // --- map pane: controls, banner, image, legend -----------------------
    const mapPane = document.createElement("div");
    mapPane.className = "map-pane";

    const controls = document.createElement("div");
    controls.className = "controls";

    this.familySelect = document.createElement("select");
    this.familySelect.title = "slice family: which two axes span the map";
    for (const fam of SLICE_FAMILIES) {
      const opt = document.createElement("option");
      opt.textContent = fam.label;
      this.familySelect.append(opt);
    }
    this.familySelect.selectedIndex = this.state.familyIndex;
    this.familySelect.addEventListener("change", () => {
      void this.setFamily(this.familySelect.selectedIndex);
    });
    controls.append(labelled("slice", this.familySelect));

    const sliderRows: HTMLElement[] = [];
    const sliders: HTMLInputElement[] = [];
    const numbers: HTMLInputElement[] = [];
    const labels: HTMLElement[] = [];
    for (const index of [0, 1] as const) {
      const slider = document.createElement("input");
      slider.type = "range";
      slider.min = "-2";
      slider.max = "2";
      slider.step = "0.005";
      const number = document.createElement("input");
      number.type = "number";
      number.step = "0.05";
      // preview while dragging, full resolution once the slider settles
      slider.addEventListener("input", () => {
        void this.setFixedValue(index, Number(slider.value), false);
      });
      slider.addEventListener("change", () => {
        void this.setFixedValue(index, Number(slider.value), true);
      });
      number.addEventListener("change", () => {
        void this.setFixedValue(index, Number(number.value), true);
      });
      const label = document.createElement("span");
      const row = document.createElement("span");
      row.className = "control-row";
      row.append(label, slider, number);
      sliderRows.push(row);
      sliders.push(slider);
      numbers.push(number);
      labels.push(label);
    }
    this.fixedSliders = [sliders[0]!, sliders[1]!];
    this.fixedNumbers = [numbers[0]!, numbers[1]!];
    this.fixedLabels = [labels[0]!, labels[1]!];
    controls.append(sliderRows[0]!, sliderRows[1]!);

    this.presetSelect = document.createElement("select");
    this.presetSelect.title = "map resolution";
    for (const res of RESOLUTION_PRESETS) {
      const opt = document.createElement("option");
      opt.textContent = String(res);
      this.presetSelect.append(opt);
    }
    this.presetSelect.selectedIndex = RESOLUTION_PRESETS.indexOf(this.state.resolution);
    this.presetSelect.addEventListener("change", () => {
      void this.setResolution(Number(this.presetSelect.value));
    });
    controls.append(labelled("resolution", this.presetSelect));

    this.windowMinInput = document.createElement("input");
    this.windowMinInput.type = "number";
    this.windowMinInput.step = "0.1";
    this.windowMaxInput = document.createElement("input");
    this.windowMaxInput.type = "number";
    this.windowMaxInput.step = "0.1";
    const applyWindowInputs = () => {
      void this.setWindow(Number(this.windowMinInput.value), Number(this.windowMaxInput.value));
    };
    this.windowMinInput.addEventListener("change", applyWindowInputs);
    this.windowMaxInput.addEventListener("change", applyWindowInputs);
    const windowRow = document.createElement("span");
    windowRow.className = "control-row";
    const windowLabel = document.createElement("span");
    windowLabel.textContent = "window";
    const zoomIn = button("zoom in", () => void this.zoomBy(0.5));
    const zoomOut = button("zoom out", () => void this.zoomBy(2));
    const reset = button("reset", () => void this.setWindow(-2, 2));
    windowRow.append(windowLabel, this.windowMinInput, this.windowMaxInput, zoomIn, zoomOut, reset);
    controls.append(windowRow);

    this.banner = document.createElement("div");
    this.banner.className = "banner";
    this.banner.setAttribute("role", "alert");

    const frame = document.createElement("div");
    frame.className = "map-frame";
    this.mapImg = document.createElement("img");
    this.mapImg.alt = "connectivity class map of the current slice";
    this.mapImg.addEventListener("click", (event) => {
      if (!this.meta) {
        return;
      }
      const rect = this.mapImg.getBoundingClientRect();
      if (rect.width <= 0 || rect.height <= 0) {
        return;
      }
      const { i, j } = pixelFromMouse(
        this.meta,
        event.clientX - rect.left,
        event.clientY - rect.top,
        rect.width,
        rect.height,
      );
      void this.inspectPixel(i, j);
    });
    this.marker = document.createElement("div");
    this.marker.className = "marker";
    frame.append(this.mapImg, this.marker);

    const legend = document.createElement("div");
    legend.className = "legend";
    legend.append(
      legendEntry("connected", "rgb(255, 0, 0)"),
      legendEntry("disconnected", "rgb(0, 0, 255)"),
      legendEntry("totally disconnected", "transparent"),
    );

    this.lowConfidenceNote = document.createElement("div");
    this.lowConfidenceNote.className = "note";

    mapPane.append(controls, this.banner, frame, legend, this.lowConfidenceNote);

    // --- inspector pane ---------------------------------------------------
    const inspectorPane = document.createElement("div");
    inspectorPane.className = "inspector-pane";
    const heading = document.createElement("h2");
    heading.textContent = "point inspector";
    const hint = document.createElement("div");
    hint.className = "note";
    hint.textContent = "click the map to classify a parameter point";
    this.panelHost = document.createElement("div");
    this.panelHost.className = "panel";
    inspectorPane.append(heading, hint, this.panelHost);

    shell.append(mapPane, inspectorPane);
    root.append(shell);

    this.syncControls();
  }

  /** Geometry of the currently displayed image, from its response header. */
  get displayedMeta(): SliceMeta | null {
    return this.meta;
  }

  async start(): Promise<void> {
    await this.updateSliceView("full");
  }

  /** Fetch and paint the class map for the current state (latest-wins). */
  async updateSliceView(mode: "preview" | "full" = "full"): Promise<void> {
    const res = mode === "preview"
      ? Math.min(PREVIEW_RES, this.state.resolution)
      : this.state.resolution;
    const url = sliceUrl(sliceRequest(this.state, res));
    const { ticket, signal } = this.sliceChannel.begin();
    try {
      const result = await fetchSlice(this.fetchImpl, url, signal);
      if (!this.sliceChannel.isCurrent(ticket)) {
        return; // superseded while in flight: abandon unpainted
      }
      this.meta = result.meta;
      const objectUrl = makeObjectUrl(result.blob);
      dropObjectUrl(this.mapObjectUrl);
      this.mapObjectUrl = objectUrl;
      this.mapImg.src = objectUrl;
      this.mapImg.dataset.sourceUrl = url;
      this.lowConfidenceNote.textContent = result.lowConfidenceCount > 0
        ? `${result.lowConfidenceCount} low-confidence cells in this view`
        : "";
      this.hideBanner();
      this.repositionMarker();
    } catch (err) {
      if (!this.sliceChannel.isCurrent(ticket) || isAbort(err)) {
        return; // a newer request owns the view now
      }
      this.showBanner(`slice request failed: ${messageOf(err)}`); // previous image stays
    }
  }

  /** Classify the parameter point under image pixel (i, j) and render it. */
  async inspectPixel(i: number, j: number): Promise<void> {
    const meta = this.meta;
    if (!meta) {
      return;
    }
    const point = paramPointForPixel(meta, i, j);
    this.state.selectedPoint = point;
    this.repositionMarker();

    const { ticket, signal } = this.inspectChannel.begin();
    const view = this.state.juliaView;
    try {
      const [doc, julia] = await Promise.all([
        fetchClassify(this.fetchImpl, classifyUrl(point, meta.iters), signal),
        fetchJulia(this.fetchImpl, juliaUrl({
          point,
          centerRe: view.centerRe,
          centerIm: view.centerIm,
          halfWidth: view.halfWidth,
          res: view.res,
        }), signal),
      ]);
      if (!this.inspectChannel.isCurrent(ticket)) {
        return;
      }
      this.state.lastClassification = doc;
      const imageUrl = makeObjectUrl(julia.blob);
      dropObjectUrl(this.juliaObjectUrl);
      this.juliaObjectUrl = imageUrl;
      renderClassification(this.panelHost, point, doc, {
        imageUrl,
        interiorFraction: julia.interiorFraction,
      });
      this.hideBanner();
    } catch (err) {
      if (!this.inspectChannel.isCurrent(ticket) || isAbort(err)) {
        return;
      }
      this.showBanner(`inspect failed: ${messageOf(err)}`); // previous panel stays
    }
  }

  /**
   * Move one fixed-axis value.  While scrubbing (settled=false) the map
   * refreshes at preview resolution; the settled call re-renders full-res.
   */
  setFixedValue(index: 0 | 1, value: number, settled = true): Promise<void> {
    this.state.fixedValues[index] = value;
    this.syncControls();
    return this.updateSliceView(settled ? "full" : "preview");
  }

  /** Switch slice family; a pinned point carries over as the new pins. */
  setFamily(index: number): Promise<void> {
    this.state.familyIndex = index;
    const fam = familyOf(this.state);
    const p = this.state.selectedPoint;
    this.state.fixedValues = [
      p ? p[fam.fixed[0]] : 0,
      p ? p[fam.fixed[1]] : 0,
    ];
    this.syncControls();
    return this.updateSliceView("full");
  }

  setResolution(res: number): Promise<void> {
    this.state.resolution = res;
    this.syncControls();
    return this.updateSliceView("full");
  }

  setWindow(min: number, max: number): Promise<void> {
    if (!(min < max)) {
      this.showBanner(`window must satisfy min < max, got [${min}, ${max}]`);
      this.syncControls();
      return Promise.resolve();
    }
    this.state.window = { x: { min, max }, y: { min, max } };
    this.syncControls();
    return this.updateSliceView("full");
  }

  zoomBy(factor: number): Promise<void> {
    const w = zoomedWindow(this.state.window.x, factor);
    return this.setWindow(w.min, w.max);
  }

  private syncControls(): void {
    const fam = familyOf(this.state);
    this.familySelect.selectedIndex = this.state.familyIndex;
    for (const index of [0, 1] as const) {
      this.fixedLabels[index].textContent = fam.fixed[index];
      this.fixedSliders[index].value = String(this.state.fixedValues[index]);
      this.fixedNumbers[index].value = String(this.state.fixedValues[index]);
    }
    this.presetSelect.selectedIndex = RESOLUTION_PRESETS.indexOf(this.state.resolution);
    this.windowMinInput.value = String(this.state.window.x.min);
    this.windowMaxInput.value = String(this.state.window.x.max);
  }

  /**
   * Keep the pin over the selected parameter point.  The point stays pinned
   * only while it lies on the displayed slice: its values on the fixed axes
   * must equal the slice's pins and its free coordinates must fall inside
   * the window.
   */
  private repositionMarker(): void {
    const meta = this.meta;
    const p = this.state.selectedPoint;
    if (!meta || !p) {
      this.marker.style.display = "none";
      return;
    }
    for (const [axis, value] of Object.entries(meta.fixed)) {
      if (p[axis as keyof typeof p] !== value) {
        this.marker.style.display = "none";
        return;
      }
    }
    const x = p[meta.x.axis];
    const y = p[meta.y.axis];
    if (x < meta.x.min || x > meta.x.max || y < meta.y.min || y > meta.y.max) {
      this.marker.style.display = "none";
      return;
    }
    const i = colForParam(meta, x);
    const j = rowForParam(meta, y);
    this.marker.style.left = `${((i + 0.5) / meta.x.res) * 100}%`;
    this.marker.style.top = `${((j + 0.5) / meta.y.res) * 100}%`;
    this.marker.style.display = "block";
  }

  private showBanner(message: string): void {
    this.banner.textContent = message;
    this.banner.classList.add("visible");
  }

  private hideBanner(): void {
    this.banner.textContent = "";
    this.banner.classList.remove("visible");
  }
}

function labelled(text: string, control: HTMLElement): HTMLElement {
  const wrap = document.createElement("label");
  const span = document.createElement("span");
  span.textContent = `${text} `;
  wrap.append(span, control);
  return wrap;
}

function button(text: string, onClick: () => void): HTMLButtonElement {
  const b = document.createElement("button");
  b.type = "button";
  b.textContent = text;
  b.addEventListener("click", onClick);
  return b;
}

function legendEntry(label: string, color: string): HTMLElement {
  const entry = document.createElement("span");
  const chip = document.createElement("span");
  chip.className = "chip";
  chip.style.background = color;
  chip.dataset.classLabel = label;
  entry.append(chip, document.createTextNode(label));
  return entry;
}
