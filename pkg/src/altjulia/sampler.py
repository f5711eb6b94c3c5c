"""Sampling the 4D parameter body over axis-aligned slices.

A parameter point is the 4-tuple (Re c1, Im c1, Re c2, Im c2).  Fixing two
coordinates yields a 2D class map, fixing one yields a 3D class volume; cells
hold the connectivity code of their center point.  Cell centers sit at
min + (i + 0.5) * (max - min) / res, so symmetric bounds sample symmetric
point sets.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from . import _kernels
from ._parallel import run_rows
from .dynamics import (
    DEFAULT_CONFIG,
    ConnectivityClass,
    IterationConfig,
    MapParams,
)

#: Resource guard for volume sampling (number of voxels).
DEFAULT_VOXEL_CAP = 512 ** 3


class Axis4(IntEnum):
    """The four parameter-space coordinates."""

    RE1 = 0
    IM1 = 1
    RE2 = 2
    IM2 = 3

    @property
    def short(self) -> str:
        return _AXIS_NAMES[self]

    @classmethod
    def from_name(cls, name: str) -> "Axis4":
        try:
            return _AXIS_BY_NAME[name.lower()]
        except KeyError:
            raise ValueError(
                f"unknown axis {name!r}; expected one of re1, im1, re2, im2"
            ) from None


_AXIS_NAMES = {
    Axis4.RE1: "re1",
    Axis4.IM1: "im1",
    Axis4.RE2: "re2",
    Axis4.IM2: "im2",
}
_AXIS_BY_NAME = {v: k for k, v in _AXIS_NAMES.items()}


def axis_centers(lo: float, hi: float, res: int) -> np.ndarray:
    """Cell-center coordinates: lo + (i + 0.5) * step with step = (hi - lo) / res."""
    step = (hi - lo) / res
    return lo + (np.arange(res, dtype=np.float64) + 0.5) * step


def _check_bounds(name: str, lo: float, hi: float) -> None:
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ValueError(f"{name} bounds must be finite")
    if not lo < hi:
        raise ValueError(f"{name} bounds must satisfy min < max, got [{lo}, {hi}]")


def _normalize_fixed(fixed) -> Tuple[Tuple[Axis4, float], ...]:
    if isinstance(fixed, dict):
        items: Iterable = fixed.items()
    else:
        items = fixed
    out = []
    for axis, value in items:
        axis = Axis4(axis)
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"fixed value for {axis.short} must be finite")
        out.append((axis, value))
    return tuple(out)


@dataclass(frozen=True)
class SliceSpec:
    """2D restriction: two fixed coordinates, two free axes with their own
    bounds and resolutions.  x is the fast (row-major) direction."""

    fixed: Tuple[Tuple[Axis4, float], Tuple[Axis4, float]]
    x_axis: Axis4
    y_axis: Axis4
    x_min: float = -2.0
    x_max: float = 2.0
    y_min: float = -2.0
    y_max: float = 2.0
    res_x: int = 256
    res_y: int = 256

    def __post_init__(self):
        object.__setattr__(self, "fixed", _normalize_fixed(self.fixed))
        if len(self.fixed) != 2:
            raise ValueError("exactly two coordinates must be fixed")
        axes = [a for a, _ in self.fixed] + [Axis4(self.x_axis), Axis4(self.y_axis)]
        if len(set(axes)) != 4:
            raise ValueError(
                "fixed and free axes must partition {re1, im1, re2, im2}, got "
                + ", ".join(a.short for a in axes))
        _check_bounds("x", self.x_min, self.x_max)
        _check_bounds("y", self.y_min, self.y_max)
        if self.res_x < 1 or self.res_y < 1:
            raise ValueError("resolutions must be >= 1")

    @classmethod
    def from_fixed(cls, fixed, res: int = 256, lo: float = -2.0,
                   hi: float = 2.0) -> "SliceSpec":
        """Square window over the two remaining axes, in canonical order."""
        pairs = _normalize_fixed(fixed)
        if len(pairs) != 2:
            raise ValueError("exactly two coordinates must be fixed")
        free = [a for a in Axis4 if a not in {p[0] for p in pairs}]
        if len(free) != 2:
            raise ValueError("fixed axes must be distinct")
        return cls(fixed=pairs, x_axis=free[0], y_axis=free[1],
                   x_min=lo, x_max=hi, y_min=lo, y_max=hi,
                   res_x=res, res_y=res)

    def x_centers(self) -> np.ndarray:
        return axis_centers(self.x_min, self.x_max, self.res_x)

    def y_centers(self) -> np.ndarray:
        return axis_centers(self.y_min, self.y_max, self.res_y)

    def base_coords(self) -> np.ndarray:
        base = np.zeros(4, dtype=np.float64)
        for axis, value in self.fixed:
            base[axis] = value
        return base

    def param_point(self, i: int, j: int) -> MapParams:
        """Parameter pair at the center of cell (i, j)."""
        if not (0 <= i < self.res_x and 0 <= j < self.res_y):
            raise ValueError(f"cell ({i}, {j}) outside {self.res_x}x{self.res_y}")
        coords = self.base_coords()
        coords[self.x_axis] = self.x_centers()[i]
        coords[self.y_axis] = self.y_centers()[j]
        return MapParams(complex(coords[0], coords[1]),
                         complex(coords[2], coords[3]))


@dataclass(frozen=True)
class VolumeSpec:
    """3D restriction: one fixed coordinate; free axes ordered x (fastest),
    y, z (slowest), each with its own bounds and resolution."""

    fixed_axis: Axis4
    fixed_value: float
    free_axes: Tuple[Axis4, Axis4, Axis4]
    bounds: Tuple[Tuple[float, float], Tuple[float, float], Tuple[float, float]] = (
        (-2.0, 2.0), (-2.0, 2.0), (-2.0, 2.0))
    res: Tuple[int, int, int] = (64, 64, 64)

    def __post_init__(self):
        object.__setattr__(self, "fixed_axis", Axis4(self.fixed_axis))
        object.__setattr__(self, "fixed_value", float(self.fixed_value))
        object.__setattr__(self, "free_axes",
                           tuple(Axis4(a) for a in self.free_axes))
        object.__setattr__(self, "bounds",
                           tuple((float(lo), float(hi)) for lo, hi in self.bounds))
        object.__setattr__(self, "res", tuple(int(r) for r in self.res))
        if not math.isfinite(self.fixed_value):
            raise ValueError("fixed value must be finite")
        axes = [self.fixed_axis, *self.free_axes]
        if len(self.free_axes) != 3 or len(set(axes)) != 4:
            raise ValueError("fixed axis and free axes must partition the four axes")
        for name, (lo, hi) in zip("xyz", self.bounds):
            _check_bounds(name, lo, hi)
        if any(r < 1 for r in self.res):
            raise ValueError("resolutions must be >= 1")

    @classmethod
    def from_fixed(cls, fixed_axis, fixed_value: float, res: int = 64,
                   lo: float = -2.0, hi: float = 2.0) -> "VolumeSpec":
        """Cubic window over the three remaining axes, in canonical order."""
        fixed_axis = Axis4(fixed_axis) if not isinstance(fixed_axis, str) \
            else Axis4.from_name(fixed_axis)
        free = tuple(a for a in Axis4 if a != fixed_axis)
        return cls(fixed_axis=fixed_axis, fixed_value=fixed_value,
                   free_axes=free, bounds=((lo, hi),) * 3, res=(res,) * 3)

    def centers(self, dim: int) -> np.ndarray:
        lo, hi = self.bounds[dim]
        return axis_centers(lo, hi, self.res[dim])

    def n_voxels(self) -> int:
        nx, ny, nz = self.res
        return nx * ny * nz

    def plane_slice(self, k: int) -> SliceSpec:
        """The 2D spec matching z plane k; volume plane k equals its sampling."""
        ax_x, ax_y, ax_z = self.free_axes
        z_val = float(self.centers(2)[k])
        return SliceSpec(
            fixed=((self.fixed_axis, self.fixed_value), (ax_z, z_val)),
            x_axis=ax_x, y_axis=ax_y,
            x_min=self.bounds[0][0], x_max=self.bounds[0][1],
            y_min=self.bounds[1][0], y_max=self.bounds[1][1],
            res_x=self.res[0], res_y=self.res[1])


@dataclass
class ClassGrid2D:
    """Dense 2D class map: cells[j, i] is the code of cell (i, j)."""

    spec: SliceSpec
    cells: np.ndarray
    config: IterationConfig
    low_confidence_count: int

    def __eq__(self, other):
        if not isinstance(other, ClassGrid2D):
            return NotImplemented
        return (self.spec == other.spec and self.config == other.config
                and self.low_confidence_count == other.low_confidence_count
                and np.array_equal(self.cells, other.cells))


@dataclass
class ClassVolume:
    """Dense 3D class volume: voxels[k, j, i], x fastest in memory."""

    spec: VolumeSpec
    voxels: np.ndarray
    config: IterationConfig

    def __eq__(self, other):
        if not isinstance(other, ClassVolume):
            return NotImplemented
        return (self.spec == other.spec and self.config == other.config
                and np.array_equal(self.voxels, other.voxels))


def _max_abs_center(lo: float, hi: float, res: int) -> float:
    centers = axis_centers(lo, hi, res)
    return max(abs(float(centers[0])), abs(float(centers[-1])))


def _grid_override_or_zero(config: IterationConfig,
                           extreme: dict[Axis4, float]) -> float:
    """Validated escape-radius override for a whole grid (0.0 when unset).

    extreme maps each axis to the largest |coordinate| it takes over the
    sampled cell centers; the override must dominate max(2, |c1|, |c2|) at
    every sampled point.
    """
    if config.escape_radius_override is None:
        return 0.0
    c1_max = math.hypot(extreme[Axis4.RE1], extreme[Axis4.IM1])
    c2_max = math.hypot(extreme[Axis4.RE2], extreme[Axis4.IM2])
    bound = max(2.0, c1_max, c2_max)
    if config.escape_radius_override < bound:
        raise ValueError(
            f"escape_radius_override {config.escape_radius_override} is below "
            f"the sound bound {bound} for some sampled points")
    return float(config.escape_radius_override)


def _slice_extremes(spec: SliceSpec) -> dict[Axis4, float]:
    extreme = {axis: abs(value) for axis, value in spec.fixed}
    extreme[spec.x_axis] = _max_abs_center(spec.x_min, spec.x_max, spec.res_x)
    extreme[spec.y_axis] = _max_abs_center(spec.y_min, spec.y_max, spec.res_y)
    return extreme


def sample_slice2d(spec: SliceSpec,
                   config: IterationConfig = DEFAULT_CONFIG,
                   threads: int = 1,
                   cancel: Optional[threading.Event] = None) -> ClassGrid2D:
    """Classify every cell center of a 2D slice.

    Each cell equals the pointwise classification of its center parameters;
    rows may be computed in parallel and the result is schedule-independent.
    """
    override = _grid_override_or_zero(config, _slice_extremes(spec))
    xs = spec.x_centers()
    ys = spec.y_centers()
    base = spec.base_coords()
    cells = np.empty((spec.res_y, spec.res_x), dtype=np.uint8)
    low_counts = np.zeros(spec.res_y, dtype=np.int64)

    def row(j: int) -> None:
        low_counts[j] = _kernels.classify_row(
            cells[j], xs, ys[j], base, int(spec.x_axis), int(spec.y_axis),
            config.max_quartic_iters, override,
            config.cycle_tolerance, config.cycle_search_budget)

    run_rows(spec.res_y, row, threads=threads, cancel=cancel)
    return ClassGrid2D(spec=spec, cells=cells, config=config,
                       low_confidence_count=int(low_counts.sum()))


def sample_volume3d(spec: VolumeSpec,
                    config: IterationConfig = DEFAULT_CONFIG,
                    threads: int = 1,
                    cancel: Optional[threading.Event] = None,
                    max_voxels: int = DEFAULT_VOXEL_CAP) -> ClassVolume:
    """Classify every voxel center of a 3D volume.

    Implemented as stacked plane sampling, so plane k always equals
    sample_slice2d(spec.plane_slice(k)).  Volumes larger than max_voxels are
    rejected before any computation.
    """
    if spec.n_voxels() > max_voxels:
        raise ValueError(
            f"volume of {spec.n_voxels()} voxels exceeds the cap of {max_voxels}")
    nx, ny, nz = spec.res
    voxels = np.empty((nz, ny, nx), dtype=np.uint8)
    for k in range(nz):
        plane = sample_slice2d(spec.plane_slice(k), config,
                               threads=threads, cancel=cancel)
        voxels[k] = plane.cells
    return ClassVolume(spec=spec, voxels=voxels, config=config)


def project_volume(vol: ClassVolume, axis: Axis4,
                   target: ConnectivityClass) -> np.ndarray:
    """Binary shadow of one class along a free axis.

    A mask pixel is set when at least one voxel along the projection ray has
    the target class.  Projecting along x gives mask[k, j], along y
    mask[k, i], along z mask[j, i].
    """
    axis = Axis4(axis)
    try:
        pos = vol.spec.free_axes.index(axis)
    except ValueError:
        raise ValueError(
            f"axis {axis.short} is not a free axis of this volume") from None
    dim = 2 - pos  # voxels are stored (z, y, x)
    return np.asarray((vol.voxels == int(target)).any(axis=dim))
