"""File exports: PPM class maps, grayscale escape images, raw volumes.

All writers are atomic: content goes to a temp file in the destination
directory and is moved into place with os.replace, so readers never observe
a partial file.
"""
from __future__ import annotations

import dataclasses
import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

import numpy as np

from .dynamics import ConnectivityClass, IterationConfig
from .render import EscapeGrid
from .sampler import ClassGrid2D, ClassVolume, VolumeSpec

#: Version tag written into volume sidecars.
FORMAT_VERSION = 1

RGB = Tuple[int, int, int]


@dataclass(frozen=True)
class Palette:
    """Class-to-color mapping for rendered class maps."""

    connected: RGB = (255, 0, 0)
    disconnected: RGB = (0, 0, 255)
    totally_disconnected: RGB = (255, 255, 255)

    def rgb_for(self, cls: ConnectivityClass) -> RGB:
        return {
            ConnectivityClass.CONNECTED: self.connected,
            ConnectivityClass.DISCONNECTED: self.disconnected,
            ConnectivityClass.TOTALLY_DISCONNECTED: self.totally_disconnected,
        }[ConnectivityClass(cls)]

    def lut(self) -> np.ndarray:
        """256x3 uint8 lookup table indexed by class code."""
        table = np.zeros((256, 3), dtype=np.uint8)
        for cls in ConnectivityClass:
            table[int(cls)] = self.rgb_for(cls)
        return table


DEFAULT_PALETTE = Palette()


def atomic_write_bytes(path, data: bytes) -> Path:
    """Write data to path atomically (temp file + rename)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".",
                               suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
    return path


def ppm_bytes(rgb: np.ndarray) -> bytes:
    """Encode an (H, W, 3) uint8 array as binary PPM (P6), top row first."""
    rgb = np.ascontiguousarray(rgb, dtype=np.uint8)
    if rgb.ndim != 3 or rgb.shape[2] != 3:
        raise ValueError(f"expected (H, W, 3) array, got shape {rgb.shape}")
    h, w = rgb.shape[:2]
    return b"P6\n%d %d\n255\n" % (w, h) + rgb.tobytes()


def class_map_rgb(grid: ClassGrid2D,
                  palette: Palette = DEFAULT_PALETTE) -> np.ndarray:
    """Color a class map; row j of the image is grid row j (y increases down)."""
    return palette.lut()[grid.cells]


def class_map_ppm(grid: ClassGrid2D,
                  palette: Palette = DEFAULT_PALETTE) -> bytes:
    """Binary PPM (P6) bytes of a class map."""
    return ppm_bytes(class_map_rgb(grid, palette))


def write_ppm(grid: ClassGrid2D, path,
              palette: Palette = DEFAULT_PALETTE) -> Path:
    """Write a class map as a binary PPM image."""
    return atomic_write_bytes(path, class_map_ppm(grid, palette))


def escape_grid_rgb(grid: EscapeGrid,
                    interior_rgb: RGB = (0, 0, 0)) -> np.ndarray:
    """Grayscale escape-time coloring: interior pixels get interior_rgb,
    exterior pixels a ramp where later escapes are brighter (clipped at 255).
    """
    cells = grid.cells
    shade = np.clip(cells, 0, 255).astype(np.uint8)
    rgb = np.repeat(shade[:, :, None], 3, axis=2)
    rgb[cells < 0] = np.asarray(interior_rgb, dtype=np.uint8)
    return rgb


def escape_ppm(grid: EscapeGrid, interior_rgb: RGB = (0, 0, 0)) -> bytes:
    """Binary PPM (P6) bytes of an escape render."""
    return ppm_bytes(escape_grid_rgb(grid, interior_rgb))


def write_escape_ppm(grid: EscapeGrid, path,
                     interior_rgb: RGB = (0, 0, 0)) -> Path:
    """Write a filled-set escape image as a binary PPM."""
    return atomic_write_bytes(path, escape_ppm(grid, interior_rgb))


@dataclass(frozen=True)
class VolumeFilePair:
    """Paths of a written volume: raw voxel payload plus JSON sidecar."""

    raw_path: Path
    sidecar_path: Path


def _volume_sidecar(vol: ClassVolume) -> dict:
    spec = vol.spec
    return {
        "version": FORMAT_VERSION,
        "dims": list(spec.res),
        "axes": [a.short for a in spec.free_axes],
        "bounds": [list(b) for b in spec.bounds],
        "fixed": {"axis": spec.fixed_axis.short, "value": spec.fixed_value},
        "config": dataclasses.asdict(vol.config),
        "codes": {cls.label: int(cls) for cls in ConnectivityClass},
        "order": "x-fastest",
    }


def _volume_paths(base_path) -> Tuple[Path, Path]:
    """Map a base path (or an existing .raw path) to (<base>.raw, <base>.json)."""
    text = str(base_path)
    if text.endswith(".raw"):
        text = text[:-4]
    return Path(text + ".raw"), Path(text + ".json")


def write_raw_volume(vol: ClassVolume, base_path) -> VolumeFilePair:
    """Write <base>.raw (1 byte per voxel, x fastest, no header) plus a
    <base>.json sidecar describing geometry, codes, and configuration."""
    raw_path, sidecar_path = _volume_paths(base_path)
    payload = np.ascontiguousarray(vol.voxels, dtype=np.uint8).tobytes()
    atomic_write_bytes(raw_path, payload)
    sidecar = json.dumps(_volume_sidecar(vol), indent=2) + "\n"
    atomic_write_bytes(sidecar_path, sidecar.encode("utf-8"))
    return VolumeFilePair(raw_path=raw_path, sidecar_path=sidecar_path)


def read_raw_volume(base_path) -> ClassVolume:
    """Round-trip reader for write_raw_volume output; accepts the base path
    or the .raw path."""
    path, sidecar_path = _volume_paths(base_path)
    with open(sidecar_path, "r", encoding="utf-8") as fh:
        meta = json.load(fh)
    if meta.get("version") != FORMAT_VERSION:
        raise ValueError(f"unsupported volume format version {meta.get('version')!r}")
    nx, ny, nz = (int(d) for d in meta["dims"])
    raw = np.fromfile(path, dtype=np.uint8)
    if raw.size != nx * ny * nz:
        raise ValueError(
            f"raw payload holds {raw.size} voxels, sidecar says {nx * ny * nz}")
    from .sampler import Axis4  # local import to avoid cycle at module load

    spec = VolumeSpec(
        fixed_axis=Axis4.from_name(meta["fixed"]["axis"]),
        fixed_value=float(meta["fixed"]["value"]),
        free_axes=tuple(Axis4.from_name(a) for a in meta["axes"]),
        bounds=tuple((float(lo), float(hi)) for lo, hi in meta["bounds"]),
        res=(nx, ny, nz))
    cfg = meta["config"]
    config = IterationConfig(
        max_quartic_iters=int(cfg["max_quartic_iters"]),
        cycle_tolerance=float(cfg["cycle_tolerance"]),
        cycle_search_budget=int(cfg["cycle_search_budget"]),
        escape_radius_override=(None if cfg.get("escape_radius_override") is None
                                else float(cfg["escape_radius_override"])))
    voxels = raw.reshape((nz, ny, nx))
    return ClassVolume(spec=spec, voxels=voxels, config=config)
