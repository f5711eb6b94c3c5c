"""Shared fixtures.

The compiled kernels are warmed once per session so that individual tests —
including the wall-clock budget assertions — never pay JIT compilation cost.
"""

import numpy as np
import pytest

import altjulia as aj


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger every compiled code path once before any test runs."""
    params = aj.MapParams(-0.4 + 0.2j, -0.4)
    aj.classify(params)
    aj.orbit_fate(0, params)
    spec = aj.SliceSpec.from_fixed({aj.Axis4.RE2: -0.4, aj.Axis4.IM2: 0.0}, res=4)
    aj.sample_slice2d(spec)
    aj.render_filled_julia(params, aj.Viewport(0j, 1.5, 4, 4))
    vspec = aj.VolumeSpec.from_fixed(aj.Axis4.RE1, 0.0, res=2)
    aj.sample_volume3d(vspec)


@pytest.fixture()
def rng():
    """Deterministic RNG; reseeded per test so ordering cannot leak state."""
    return np.random.default_rng(20240817)
