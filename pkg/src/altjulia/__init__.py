"""altjulia: connectivity atlas for alternated quadratic Julia sets.

The iteration alternates two quadratic maps, z -> z^2 + c1 on even steps and
z -> z^2 + c2 on odd steps.  Connectivity of the filled set is decided by the
two critical orbits of the composed quartic map w -> (w^2 + c1)^2 + c2:

* both orbits bounded        -> connected
* both orbits escape         -> totally disconnected (Cantor dust)
* exactly one orbit escapes  -> disconnected but not totally disconnected,
                                when the bounded orbit settles on a cycle

The package classifies single parameter pairs, samples dense 2D/3D class
maps over the 4D parameter body, renders filled sets, exports images and
volumes, and serves everything over HTTP.
"""
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
    OrbitFate,
    alternated_step,
    classify,
    critical_points,
    detect_cycle,
    escape_radius,
    orbit_fate,
    quartic_step,
    resolved_radius,
)
from .export import (
    DEFAULT_PALETTE,
    Palette,
    VolumeFilePair,
    class_map_ppm,
    escape_ppm,
    read_raw_volume,
    write_escape_ppm,
    write_ppm,
    write_raw_volume,
)
from .render import (
    INTERIOR,
    EscapeGrid,
    Viewport,
    membership,
    membership_steps,
    render_filled_julia,
)
from .sampler import (
    DEFAULT_VOXEL_CAP,
    Axis4,
    ClassGrid2D,
    ClassVolume,
    SliceSpec,
    VolumeSpec,
    axis_centers,
    project_volume,
    sample_slice2d,
    sample_volume3d,
)

__version__ = "0.1.0"

__all__ = [
    "Axis4",
    "BoundedNoCycleFound",
    "BoundedPeriodic",
    "Cancelled",
    "ClassGrid2D",
    "ClassVolume",
    "ClassificationResult",
    "ConnectivityClass",
    "DEFAULT_CONFIG",
    "DEFAULT_PALETTE",
    "DEFAULT_VOXEL_CAP",
    "Escaped",
    "EscapeGrid",
    "INTERIOR",
    "IterationConfig",
    "MapParams",
    "OrbitFate",
    "Palette",
    "SliceSpec",
    "Viewport",
    "VolumeFilePair",
    "VolumeSpec",
    "alternated_step",
    "axis_centers",
    "class_map_ppm",
    "classify",
    "escape_ppm",
    "critical_points",
    "detect_cycle",
    "escape_radius",
    "membership",
    "membership_steps",
    "orbit_fate",
    "project_volume",
    "quartic_step",
    "read_raw_volume",
    "render_filled_julia",
    "resolved_radius",
    "sample_slice2d",
    "sample_volume3d",
    "write_escape_ppm",
    "write_ppm",
    "write_raw_volume",
    "__version__",
]
