"""Read-only HTTP API over the classifier, slice sampler, and Julia renderer.

Endpoints
---------
* ``GET /api/classify`` — class + orbit fates for one parameter pair.
* ``GET /api/slice``    — PNG class map of a 2D parameter slice; TDL pixels
  are fully transparent; the ``X-Slice-Spec`` header carries the resolved
  geometry so clients can map pixels back to parameter coordinates.
* ``GET /api/julia``    — escape-time grayscale PNG of one filled Julia set.
* ``GET /api/health``   — liveness + version document.
* ``GET /``             — explorer UI bundle when one is configured.

All parameters are validated before any computation (malformed input →
HTTP 400).  Responses depend only on the query string: a small LRU cache
short-circuits repeats, and a semaphore bounds concurrent heavy renders
(over-limit → HTTP 503).  Client disconnects cancel in-flight renders at
row boundaries, best-effort.

Note: endpoint signatures must carry runtime (non-string) annotations for
FastAPI's dependency injection, so this module deliberately does not use
``from __future__ import annotations``.
"""
import dataclasses
import io
import json
import math
import os
import threading
from collections import OrderedDict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional, Tuple

import numpy as np

from . import __version__
from ._parallel import Cancelled
from .dynamics import (
    DEFAULT_CONFIG,
    BoundedNoCycleFound,
    BoundedPeriodic,
    ClassificationResult,
    ConnectivityClass,
    Escaped,
    IterationConfig,
    MapParams,
    classify,
)
from .export import DEFAULT_PALETTE, Palette
from .render import Viewport, render_filled_julia
from .sampler import Axis4, SliceSpec, sample_slice2d

#: Hard ceiling on per-side resolution of HTTP renders.
DEFAULT_RES_CAP = 2048


@dataclass(frozen=True)
class ServiceConfig:
    res_cap: int = DEFAULT_RES_CAP
    cache_size: int = 128
    heavy_limit: int = 2
    threads: Optional[int] = None
    static_dir: Optional[str] = None
    palette: Palette = field(default_factory=lambda: DEFAULT_PALETTE)

    def resolved_threads(self) -> int:
        if self.threads is not None:
            return max(1, int(self.threads))
        return max(1, os.cpu_count() or 1)


class ApiError(Exception):
    """Maps to an HTTP error response with a JSON body."""

    def __init__(self, status: int, message: str):
        super().__init__(message)
        self.status = status
        self.message = message


def _bad(message: str) -> ApiError:
    return ApiError(400, message)


class _LruCache:
    """Tiny thread-safe LRU for rendered responses."""

    def __init__(self, size: int):
        self.size = size
        self._lock = threading.Lock()
        self._data: "OrderedDict[str, object]" = OrderedDict()

    def get(self, key: str):
        with self._lock:
            if key not in self._data:
                return None
            self._data.move_to_end(key)
            return self._data[key]

    def put(self, key: str, value) -> None:
        if self.size <= 0:
            return
        with self._lock:
            self._data[key] = value
            self._data.move_to_end(key)
            while len(self._data) > self.size:
                self._data.popitem(last=False)


def _parse_float(params, name: str) -> float:
    raw = params.get(name)
    if raw is None:
        raise _bad(f"missing required parameter '{name}'")
    try:
        value = float(raw)
    except ValueError:
        raise _bad(f"parameter '{name}' is not a number: {raw!r}") from None
    if not math.isfinite(value):
        raise _bad(f"parameter '{name}' must be finite")
    return value


def _parse_int(params, name: str, lo: int, hi: int,
               default: Optional[int] = None) -> int:
    raw = params.get(name)
    if raw is None:
        if default is None:
            raise _bad(f"missing required parameter '{name}'")
        return default
    try:
        value = int(raw)
    except ValueError:
        raise _bad(f"parameter '{name}' is not an integer: {raw!r}") from None
    if not lo <= value <= hi:
        raise _bad(f"parameter '{name}' must be in [{lo}, {hi}], got {value}")
    return value


def _parse_axis_pin(params, name: str) -> Tuple[Axis4, float]:
    raw = params.get(name)
    if raw is None:
        raise _bad(f"missing required parameter '{name}'")
    axis_name, sep, value_text = raw.partition(":")
    if not sep:
        raise _bad(f"parameter '{name}' must look like re1:-0.4, got {raw!r}")
    try:
        axis = Axis4.from_name(axis_name)
    except ValueError as exc:
        raise _bad(f"parameter '{name}': {exc}") from None
    try:
        value = float(value_text)
    except ValueError:
        raise _bad(f"parameter '{name}': {value_text!r} is not a number") from None
    if not math.isfinite(value):
        raise _bad(f"parameter '{name}': value must be finite")
    return axis, value


def _config_for(params) -> IterationConfig:
    iters = _parse_int(params, "iters", 1, 1_000_000,
                       default=DEFAULT_CONFIG.max_quartic_iters)
    if iters == DEFAULT_CONFIG.max_quartic_iters:
        return DEFAULT_CONFIG
    return IterationConfig(max_quartic_iters=iters)


def _fate_doc(fate) -> dict:
    if isinstance(fate, Escaped):
        return {"kind": "escaped", "escape_iter": fate.escape_iter}
    if isinstance(fate, BoundedPeriodic):
        return {"kind": "bounded_periodic", "period": fate.period}
    if isinstance(fate, BoundedNoCycleFound):
        return {"kind": "bounded_no_cycle_found"}
    raise TypeError(f"unknown fate {fate!r}")


def classification_doc(result: ClassificationResult,
                       config: IterationConfig) -> dict:
    doc = {
        "class": result.connectivity.label,
        "class_code": int(result.connectivity),
        "fate_zero": _fate_doc(result.fate_zero),
        "fate_crit": _fate_doc(result.fate_crit),
        "low_confidence": result.low_confidence,
        "config": dataclasses.asdict(config),
    }
    for fate in (result.fate_zero, result.fate_crit):
        if isinstance(fate, BoundedPeriodic):
            doc["period"] = fate.period
            break
    return doc


def _slice_png(grid_cells: np.ndarray, palette: Palette) -> bytes:
    from PIL import Image

    lut = np.zeros((256, 4), dtype=np.uint8)
    for cls in ConnectivityClass:
        r, g, b = palette.rgb_for(cls)
        alpha = 0 if cls is ConnectivityClass.TOTALLY_DISCONNECTED else 255
        lut[int(cls)] = (r, g, b, alpha)
    rgba = lut[grid_cells[::-1]]  # flip: PNG row 0 shows the y-max edge
    img = Image.fromarray(rgba, mode="RGBA")
    buf = io.BytesIO()
    img.save(buf, format="PNG", optimize=False)
    return buf.getvalue()


def _julia_png(cells: np.ndarray) -> bytes:
    from PIL import Image

    shade = np.clip(cells, 0, 255).astype(np.uint8)
    rgb = np.repeat(shade[:, :, None], 3, axis=2)
    rgb[cells < 0] = (0, 0, 0)  # interior: black
    img = Image.fromarray(rgb, mode="RGB")
    buf = io.BytesIO()
    img.save(buf, format="PNG", optimize=False)
    return buf.getvalue()


@dataclass
class _Rendered:
    content: bytes
    media_type: str
    headers: dict


def _canonical_key(endpoint: str, parsed: dict) -> str:
    return endpoint + "?" + json.dumps(parsed, sort_keys=True, default=repr)


def create_app(config: Optional[ServiceConfig] = None):
    """Build the ASGI application.  Import of FastAPI is deferred so the
    numerical core stays importable without HTTP dependencies."""
    from fastapi import FastAPI, Request
    from fastapi.responses import HTMLResponse, JSONResponse, Response

    cfg = config or ServiceConfig()
    app = FastAPI(title="altjulia", version=__version__, docs_url=None,
                  redoc_url=None, openapi_url=None)
    cache = _LruCache(cfg.cache_size)
    heavy_jobs = threading.BoundedSemaphore(cfg.heavy_limit)
    # Exposed for observability and deterministic load-shedding tests.
    app.state.render_cache = cache
    app.state.heavy_jobs = heavy_jobs

    @app.exception_handler(ApiError)
    async def _api_error_handler(_request, exc: ApiError):
        return JSONResponse({"error": exc.message}, status_code=exc.status)

    async def _render_cancellable(request: Request, key: str,
                                  render: Callable[[threading.Event], _Rendered]):
        """Run a heavy render on a worker thread; poll for client disconnect
        and cancel at row boundaries.  Caches completed renders."""
        import anyio

        cached = cache.get(key)
        if cached is None:
            if not heavy_jobs.acquire(blocking=False):
                raise ApiError(503, "too many concurrent renders; retry shortly")
            cancel = threading.Event()
            try:
                done = threading.Event()
                box: dict = {}

                def work():
                    try:
                        box["value"] = render(cancel)
                    except BaseException as exc:  # propagated below
                        box["error"] = exc
                    finally:
                        done.set()

                worker = threading.Thread(target=work, daemon=True)
                worker.start()
                while not done.is_set():
                    if await request.is_disconnected():
                        cancel.set()
                        break
                    await anyio.sleep(0.02)
                await anyio.to_thread.run_sync(done.wait)
            finally:
                heavy_jobs.release()
            err = box.get("error")
            if isinstance(err, Cancelled):
                raise ApiError(499, "client closed request")
            if err is not None:
                raise err
            cached = box["value"]
            cache.put(key, cached)
        return Response(content=cached.content, media_type=cached.media_type,
                        headers=cached.headers)

    @app.get("/api/health")
    async def health():
        return JSONResponse({"status": "ok", "service": "altjulia",
                             "version": __version__})

    @app.get("/api/classify")
    async def api_classify(request: Request):
        params = request.query_params
        c1 = complex(_parse_float(params, "c1re"), _parse_float(params, "c1im"))
        c2 = complex(_parse_float(params, "c2re"), _parse_float(params, "c2im"))
        iter_config = _config_for(params)
        result = classify(MapParams(c1, c2), iter_config)
        return JSONResponse(classification_doc(result, iter_config))

    @app.get("/api/slice")
    async def api_slice(request: Request):
        params = request.query_params
        fix1 = _parse_axis_pin(params, "fix1")
        fix2 = _parse_axis_pin(params, "fix2")
        if fix1[0] == fix2[0]:
            raise _bad(f"fix1 and fix2 pin the same axis '{fix1[0].short}'")
        res = _parse_int(params, "res", 1, cfg.res_cap)
        lo = _parse_float(params, "min") if "min" in params else -2.0
        hi = _parse_float(params, "max") if "max" in params else 2.0
        if not lo < hi:
            raise _bad(f"min must be < max, got [{lo}, {hi}]")
        iter_config = _config_for(params)
        try:
            spec = SliceSpec.from_fixed((fix1, fix2), res=res, lo=lo, hi=hi)
        except ValueError as exc:
            raise _bad(str(exc)) from None

        meta = {
            "fixed": {axis.short: value for axis, value in spec.fixed},
            "x": {"axis": spec.x_axis.short, "min": spec.x_min,
                  "max": spec.x_max, "res": spec.res_x},
            "y": {"axis": spec.y_axis.short, "min": spec.y_min,
                  "max": spec.y_max, "res": spec.res_y},
            "row0_y": "max",  # PNG row 0 shows the top (y max) edge
            "iters": iter_config.max_quartic_iters,
        }
        key = _canonical_key("slice", meta)

        def render(cancel: threading.Event) -> _Rendered:
            grid = sample_slice2d(spec, iter_config,
                                  threads=cfg.resolved_threads(), cancel=cancel)
            png = _slice_png(grid.cells, cfg.palette)
            return _Rendered(png, "image/png", {
                "X-Slice-Spec": json.dumps(meta, sort_keys=True),
                "X-Low-Confidence-Count": str(grid.low_confidence_count),
            })

        return await _render_cancellable(request, key, render)

    @app.get("/api/julia")
    async def api_julia(request: Request):
        params = request.query_params
        c1 = complex(_parse_float(params, "c1re"), _parse_float(params, "c1im"))
        c2 = complex(_parse_float(params, "c2re"), _parse_float(params, "c2im"))
        center = complex(_parse_float(params, "cre"), _parse_float(params, "cim"))
        hw = _parse_float(params, "hw")
        if hw <= 0:
            raise _bad(f"hw must be > 0, got {hw}")
        res = _parse_int(params, "res", 1, cfg.res_cap)
        iter_config = _config_for(params)

        parsed = {"c1": repr(c1), "c2": repr(c2), "center": repr(center),
                  "hw": hw, "res": res, "iters": iter_config.max_quartic_iters}
        key = _canonical_key("julia", parsed)

        def render(cancel: threading.Event) -> _Rendered:
            vp = Viewport(center=center, half_width=hw, width_px=res,
                          height_px=res)
            grid = render_filled_julia(MapParams(c1, c2), vp, iter_config,
                                       threads=cfg.resolved_threads(),
                                       cancel=cancel)
            return _Rendered(_julia_png(grid.cells), "image/png", {
                "X-Interior-Fraction": f"{grid.interior_fraction():.6f}",
            })

        return await _render_cancellable(request, key, render)

    static_dir = cfg.static_dir
    if static_dir and Path(static_dir).is_dir():
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=static_dir, html=True),
                  name="ui")
    else:
        @app.get("/")
        async def index():
            return HTMLResponse(
                "<!doctype html><title>altjulia</title>"
                "<h1>altjulia service</h1>"
                "<p>No explorer UI bundle is installed. The API lives under "
                "<code>/api/</code>: try <a href='/api/health'>/api/health</a> "
                "or <code>/api/classify?c1re=0&amp;c1im=0&amp;c2re=0&amp;"
                "c2im=0</code>.</p>")

    return app


def default_static_dir() -> Optional[str]:
    """Location of the explorer UI bundle, when built into the repo."""
    here = Path(__file__).resolve()
    for parent in here.parents:
        candidate = parent / "frontend" / "dist"
        if (candidate / "index.html").is_file():
            return str(candidate)
    return None


def run_server(port: Optional[int] = None,
               config: Optional[ServiceConfig] = None,
               host: str = "127.0.0.1") -> None:
    """Blocking uvicorn server; port falls back to ALTJULIA_PORT, then 8000."""
    import uvicorn

    if port is None:
        port = int(os.environ.get("ALTJULIA_PORT", "8000"))
    if config is None:
        config = ServiceConfig(static_dir=default_static_dir())
    uvicorn.run(create_app(config), host=host, port=port, log_level="info")
