"""Command-line driver.

Subcommands map one-to-one onto library operations:

* ``classify`` — one parameter pair → single-line key=value record.
* ``slice``    — 2D class map → PPM image.
* ``volume``   — 3D class volume → raw voxels + JSON sidecar.
* ``project``  — binary class shadow of a stored volume → PPM image.
* ``julia``    — filled Julia set escape render → PPM image.
* ``serve``    — start the HTTP service.

Complex literals use the grammar ``a``, ``bi``, ``a+bi``, ``a-bi`` (e.g.
``-0.8+0.2i``, ``2``, ``-i``).  Axes are named re1, im1, re2, im2.  Thread
count comes from --threads, then ALTJULIA_THREADS, then the CPU count.
"""
from __future__ import annotations

import argparse
import os
import re
import sys
from typing import List, Optional, Sequence, Tuple

from .dynamics import (
    DEFAULT_CONFIG,
    BoundedNoCycleFound,
    BoundedPeriodic,
    ConnectivityClass,
    Escaped,
    IterationConfig,
    MapParams,
    classify,
)
from .export import (
    DEFAULT_PALETTE,
    atomic_write_bytes,
    ppm_bytes,
    read_raw_volume,
    write_escape_ppm,
    write_ppm,
    write_raw_volume,
)
from .render import Viewport, render_filled_julia
from .sampler import (
    Axis4,
    SliceSpec,
    VolumeSpec,
    project_volume,
    sample_slice2d,
    sample_volume3d,
)

_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(
    rf"^\s*(?:"
    rf"(?P<re_only>[+-]?{_NUM})"
    rf"|(?P<im_only>[+-]?(?:{_NUM})?)i"
    rf"|(?P<re>[+-]?{_NUM})(?P<im>[+-](?:{_NUM})?)i"
    rf")\s*$")

COMPLEX_GRAMMAR = "a, bi, a+bi, or a-bi with decimal reals (e.g. -0.8+0.2i)"


def parse_complex(text: str) -> complex:
    """Parse a complex literal; rejects anything outside the grammar."""
    m = _COMPLEX_RE.match(text)
    if not m:
        raise ValueError(f"bad complex literal {text!r}; expected {COMPLEX_GRAMMAR}")
    if m.group("re_only") is not None:
        return complex(float(m.group("re_only")), 0.0)
    if m.group("im_only") is not None:
        coeff = m.group("im_only")
        if coeff in ("", "+"):
            return complex(0.0, 1.0)
        if coeff == "-":
            return complex(0.0, -1.0)
        return complex(0.0, float(coeff))
    re_part = float(m.group("re"))
    im_text = m.group("im")
    if im_text == "+":
        im_part = 1.0
    elif im_text == "-":
        im_part = -1.0
    else:
        im_part = float(im_text)
    return complex(re_part, im_part)


def _complex_arg(text: str) -> complex:
    try:
        return parse_complex(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def parse_axis_pins(text: str) -> List[Tuple[Axis4, float]]:
    """Parse ``axis=value[,axis=value...]``; axes must be distinct."""
    pins: List[Tuple[Axis4, float]] = []
    for chunk in text.split(","):
        name, sep, value_text = chunk.partition("=")
        if not sep:
            raise ValueError(f"bad fixed-axis entry {chunk!r}; expected axis=value")
        axis = Axis4.from_name(name.strip())
        try:
            value = float(value_text)
        except ValueError:
            raise ValueError(
                f"bad value {value_text!r} for axis {axis.short}") from None
        pins.append((axis, value))
    seen = [a for a, _ in pins]
    if len(set(seen)) != len(seen):
        raise ValueError("fixed axes must be distinct: " + text)
    return pins


def resolve_threads(flag_value: Optional[int]) -> int:
    if flag_value is not None:
        return max(1, flag_value)
    env = os.environ.get("ALTJULIA_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"ALTJULIA_THREADS is not an integer: {env!r}") from None
    return max(1, os.cpu_count() or 1)


def _iteration_config(args) -> IterationConfig:
    return IterationConfig(
        max_quartic_iters=args.iters,
        cycle_tolerance=args.tol,
        cycle_search_budget=args.cycle_budget)


def _add_iteration_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--iters", type=int, default=DEFAULT_CONFIG.max_quartic_iters,
                   help="max quartic iterations before an orbit counts as bounded")
    p.add_argument("--tol", type=float, default=DEFAULT_CONFIG.cycle_tolerance,
                   help="relative tolerance for cycle detection")
    p.add_argument("--cycle-budget", type=int,
                   default=DEFAULT_CONFIG.cycle_search_budget,
                   help="extra quartic steps available to cycle detection")


def _add_threads_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--threads", type=int, default=None,
                   help="worker threads (default: ALTJULIA_THREADS or CPU count; "
                        "1 forces serial)")


def fate_record(prefix: str, fate) -> str:
    if isinstance(fate, Escaped):
        return f"{prefix}=escaped {prefix}_escape_iter={fate.escape_iter}"
    if isinstance(fate, BoundedPeriodic):
        return f"{prefix}=bounded_periodic {prefix}_period={fate.period}"
    if isinstance(fate, BoundedNoCycleFound):
        return f"{prefix}=bounded_no_cycle_found"
    raise TypeError(f"unknown fate {fate!r}")


def classify_record(result, include_params: str = "") -> str:
    parts = []
    if include_params:
        parts.append(include_params)
    parts.append(f"class={result.connectivity.label}")
    parts.append(fate_record("fate_zero", result.fate_zero))
    parts.append(fate_record("fate_crit", result.fate_crit))
    for fate in (result.fate_zero, result.fate_crit):
        if isinstance(fate, BoundedPeriodic):
            parts.append(f"period={fate.period}")
            break
    parts.append(f"low_confidence={'true' if result.low_confidence else 'false'}")
    return " ".join(parts)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altjulia",
        description="Connectivity atlas for alternated quadratic Julia sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser(
        "classify", help="classify one parameter pair")
    p_classify.add_argument("--c1", type=_complex_arg, required=True,
                            metavar="Z", help=f"first constant ({COMPLEX_GRAMMAR})")
    p_classify.add_argument("--c2", type=_complex_arg, required=True,
                            metavar="Z", help="second constant")
    _add_iteration_flags(p_classify)

    p_slice = sub.add_parser(
        "slice", help="sample a 2D class map and write a PPM image")
    p_slice.add_argument("--fix", required=True, metavar="AXIS=V,AXIS=V",
                         help="two fixed coordinates, e.g. re2=-0.4,im2=0")
    p_slice.add_argument("--res", type=int, required=True,
                         help="cells per side")
    p_slice.add_argument("--min", type=float, default=-2.0, dest="lo",
                         help="lower bound of both free axes (default -2)")
    p_slice.add_argument("--max", type=float, default=2.0, dest="hi",
                         help="upper bound of both free axes (default 2)")
    p_slice.add_argument("--out", required=True, help="output PPM path")
    _add_iteration_flags(p_slice)
    _add_threads_flag(p_slice)

    p_volume = sub.add_parser(
        "volume", help="sample a 3D class volume and write raw voxels + sidecar")
    p_volume.add_argument("--fix", required=True, metavar="AXIS=V",
                          help="one fixed coordinate, e.g. re1=0")
    p_volume.add_argument("--res", type=int, required=True,
                          help="voxels per side")
    p_volume.add_argument("--min", type=float, default=-2.0, dest="lo",
                          help="lower bound of the free axes (default -2)")
    p_volume.add_argument("--max", type=float, default=2.0, dest="hi",
                          help="upper bound of the free axes (default 2)")
    p_volume.add_argument("--out", required=True,
                          help="output path for the raw voxel file")
    _add_iteration_flags(p_volume)
    _add_threads_flag(p_volume)

    p_project = sub.add_parser(
        "project", help="project one class of a stored volume to a PPM mask")
    p_project.add_argument("--in", dest="input", required=True,
                           help="raw voxel file written by `volume`")
    p_project.add_argument("--axis", required=True,
                           help="free axis to project along (re1|im1|re2|im2)")
    p_project.add_argument("--class", dest="target", required=True,
                           choices=sorted(ConnectivityClass.short_names()),
                           help="connectivity class to project")
    p_project.add_argument("--out", required=True, help="output PPM path")

    p_julia = sub.add_parser(
        "julia", help="render one filled Julia set to a PPM image")
    p_julia.add_argument("--c1", type=_complex_arg, required=True, metavar="Z")
    p_julia.add_argument("--c2", type=_complex_arg, required=True, metavar="Z")
    p_julia.add_argument("--center", type=_complex_arg, default=0j, metavar="Z",
                         help="window center (default 0)")
    p_julia.add_argument("--half-width", type=float, required=True,
                         help="half of the rendered window width")
    p_julia.add_argument("--res", type=int, required=True,
                         help="pixels per side")
    p_julia.add_argument("--out", required=True, help="output PPM path")
    _add_iteration_flags(p_julia)
    _add_threads_flag(p_julia)

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--port", type=int, default=None,
                         help="TCP port (default: ALTJULIA_PORT or 8000)")
    p_serve.add_argument("--host", default="127.0.0.1")
    _add_threads_flag(p_serve)

    return parser


def _cmd_classify(args) -> int:
    result = classify(MapParams(args.c1, args.c2), _iteration_config(args))
    print(classify_record(result))
    return 0


def _cmd_slice(args, parser) -> int:
    pins = parse_axis_pins(args.fix)
    if len(pins) != 2:
        parser.error("slice needs exactly two fixed axes, e.g. --fix re2=-0.4,im2=0")
    spec = SliceSpec.from_fixed(pins, res=args.res, lo=args.lo, hi=args.hi)
    grid = sample_slice2d(spec, _iteration_config(args),
                          threads=resolve_threads(args.threads))
    write_ppm(grid, args.out, DEFAULT_PALETTE)
    print(f"wrote {args.out} ({spec.res_x}x{spec.res_y}; "
          f"low_confidence={grid.low_confidence_count})")
    return 0


def _cmd_volume(args, parser) -> int:
    pins = parse_axis_pins(args.fix)
    if len(pins) != 1:
        parser.error("volume needs exactly one fixed axis, e.g. --fix re1=0")
    axis, value = pins[0]
    spec = VolumeSpec.from_fixed(axis, value, res=args.res,
                                 lo=args.lo, hi=args.hi)
    vol = sample_volume3d(spec, _iteration_config(args),
                          threads=resolve_threads(args.threads))
    pair = write_raw_volume(vol, args.out)
    print(f"wrote {pair.raw_path} + {pair.sidecar_path} "
          f"({'x'.join(str(r) for r in spec.res)})")
    return 0


def _cmd_project(args, parser) -> int:
    vol = read_raw_volume(args.input)
    axis = Axis4.from_name(args.axis)
    target = ConnectivityClass.from_short(args.target)
    mask = project_volume(vol, axis, target)
    import numpy as np

    rgb = np.full(mask.shape + (3,), 255, dtype=np.uint8)
    rgb[mask] = DEFAULT_PALETTE.rgb_for(target)
    atomic_write_bytes(args.out, ppm_bytes(rgb))
    print(f"wrote {args.out} ({mask.shape[1]}x{mask.shape[0]}; "
          f"{int(mask.sum())} set pixels)")
    return 0


def _cmd_julia(args) -> int:
    vp = Viewport(center=args.center, half_width=args.half_width,
                  width_px=args.res, height_px=args.res)
    grid = render_filled_julia(MapParams(args.c1, args.c2), vp,
                               _iteration_config(args),
                               threads=resolve_threads(args.threads))
    write_escape_ppm(grid, args.out)
    print(f"wrote {args.out} ({args.res}x{args.res}; "
          f"interior_fraction={grid.interior_fraction():.4f})")
    return 0


def _cmd_serve(args) -> int:
    from .service import ServiceConfig, default_static_dir, run_server

    config = ServiceConfig(threads=resolve_threads(args.threads),
                           static_dir=default_static_dir())
    run_server(port=args.port, config=config, host=args.host)
    return 0


#: Flags whose values are complex literals and may start with '-'.
_COMPLEX_FLAGS = ("--c1", "--c2", "--center")


def _join_complex_flags(argv: Sequence[str]) -> List[str]:
    """Rewrite ``--c1 -0.4+0.2i`` as ``--c1=-0.4+0.2i`` so argparse does not
    mistake a negative complex literal for an option."""
    out: List[str] = []
    i = 0
    while i < len(argv):
        arg = argv[i]
        if arg in _COMPLEX_FLAGS and i + 1 < len(argv):
            out.append(f"{arg}={argv[i + 1]}")
            i += 2
        else:
            out.append(arg)
            i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_complex_flags(argv))
    try:
        if args.command == "classify":
            return _cmd_classify(args)
        if args.command == "slice":
            return _cmd_slice(args, parser)
        if args.command == "volume":
            return _cmd_volume(args, parser)
        if args.command == "project":
            return _cmd_project(args, parser)
        if args.command == "julia":
            return _cmd_julia(args)
        if args.command == "serve":
            return _cmd_serve(args)
        parser.error(f"unknown command {args.command!r}")
    except ValueError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
    except OSError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
