"""Filled-set rendering for a fixed parameter pair.

A pixel belongs to the filled set when the alternated orbit of its center
coordinate never crosses the escape radius within budget; escaped pixels
record their escape step.  Rendering samples pixel centers only (no
supersampling) so images are exactly reproducible.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from ._parallel import run_rows
from .dynamics import DEFAULT_CONFIG, IterationConfig, MapParams, resolved_radius

#: Cell value marking a pixel whose orbit stayed bounded for the whole budget.
INTERIOR = -1


@dataclass(frozen=True)
class Viewport:
    """Axis-aligned window in the z0 plane.

    Pixel (0, 0) is the top-left corner; x grows with the real part, y grows
    downward with decreasing imaginary part.  The window's aspect ratio
    equals width_px / height_px, so pixels are square.
    """

    center: complex
    half_width: float
    width_px: int
    height_px: int

    def __post_init__(self):
        object.__setattr__(self, "center", complex(self.center))
        if not (math.isfinite(self.center.real) and math.isfinite(self.center.imag)):
            raise ValueError("center must be finite")
        if not self.half_width > 0.0:
            raise ValueError("half_width must be > 0")
        if self.width_px < 1 or self.height_px < 1:
            raise ValueError("pixel dimensions must be >= 1")

    @property
    def pixel_size(self) -> float:
        return 2.0 * self.half_width / self.width_px

    def x_centers(self) -> np.ndarray:
        # Offsets are exact half-integer multiples of the pixel size, so a
        # window centered on the origin mirrors bit-for-bit under negation.
        i = np.arange(self.width_px, dtype=np.float64)
        return self.center.real + (i - (self.width_px - 1) / 2.0) * self.pixel_size

    def y_centers(self) -> np.ndarray:
        j = np.arange(self.height_px, dtype=np.float64)
        return self.center.imag - (j - (self.height_px - 1) / 2.0) * self.pixel_size

    def pixel_center(self, i: int, j: int) -> complex:
        if not (0 <= i < self.width_px and 0 <= j < self.height_px):
            raise ValueError(f"pixel ({i}, {j}) outside {self.width_px}x{self.height_px}")
        re = self.center.real + (i - (self.width_px - 1) / 2.0) * self.pixel_size
        im = self.center.imag - (j - (self.height_px - 1) / 2.0) * self.pixel_size
        return complex(re, im)


@dataclass
class EscapeGrid:
    """Dense escape-step grid: cells[j, i] is the escape step or INTERIOR."""

    cells: np.ndarray
    params: MapParams
    config: IterationConfig
    viewport: Viewport

    @property
    def width_px(self) -> int:
        return self.cells.shape[1]

    @property
    def height_px(self) -> int:
        return self.cells.shape[0]

    def interior_fraction(self) -> float:
        return float(np.count_nonzero(self.cells == INTERIOR)) / self.cells.size


def membership_steps(config: IterationConfig) -> int:
    """Alternated-step budget: two per quartic iteration, so filled-set
    membership and classification spend equal dynamical effort."""
    return 2 * config.max_quartic_iters


def membership(z0: complex, params: MapParams,
               config: IterationConfig = DEFAULT_CONFIG) -> Optional[int]:
    """Escape step of z0 under the alternated iteration, or None if the
    orbit stays inside the escape radius for the whole budget."""
    r = resolved_radius(params, config)
    k = _kernels.alternated_escape(complex(z0), params.c1, params.c2,
                                   membership_steps(config), r * r)
    return None if k < 0 else int(k)


def render_filled_julia(params: MapParams, vp: Viewport,
                        config: IterationConfig = DEFAULT_CONFIG,
                        threads: int = 1,
                        cancel: Optional[threading.Event] = None) -> EscapeGrid:
    """Evaluate membership at every pixel center of the viewport.

    The output is independent of evaluation order; rows may be computed in
    parallel.
    """
    r = resolved_radius(params, config)
    r2 = r * r
    steps = membership_steps(config)
    xs = vp.x_centers()
    ys = vp.y_centers()
    cells = np.empty((vp.height_px, vp.width_px), dtype=np.int32)

    def row(j: int) -> None:
        _kernels.alternated_escape_row(cells[j], xs, ys[j],
                                       params.c1, params.c2, steps, r2)

    run_rows(vp.height_px, row, threads=threads, cancel=cancel)
    return EscapeGrid(cells=cells, params=params, config=config, viewport=vp)
