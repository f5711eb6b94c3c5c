"""Filled-set rendering: viewport geometry, membership, and the escape grid."""

import math
import threading

import numpy as np
import pytest

from altjulia import (
    INTERIOR,
    Cancelled,
    ConnectivityClass,
    IterationConfig,
    MapParams,
    Viewport,
    classify,
    membership,
    membership_steps,
    render_filled_julia,
)


class TestViewport:
    def test_rejects_degenerate(self):
        with pytest.raises(ValueError):
            Viewport(0j, 0.0, 4, 4)
        with pytest.raises(ValueError):
            Viewport(0j, -1.0, 4, 4)
        with pytest.raises(ValueError):
            Viewport(0j, 1.0, 0, 4)
        with pytest.raises(ValueError):
            Viewport(0j, 1.0, 4, 0)
        with pytest.raises(ValueError):
            Viewport(complex("nan"), 1.0, 4, 4)

    def test_pixel_size(self):
        vp = Viewport(0j, 2.0, 256, 128)
        assert vp.pixel_size == 4.0 / 256

    def test_centers_are_cell_midpoints(self):
        vp = Viewport(0j, 2.0, 4, 4)
        assert np.array_equal(vp.x_centers(), [-1.5, -0.5, 0.5, 1.5])
        # Row 0 is the top edge: y decreases with the row index.
        assert np.array_equal(vp.y_centers(), [1.5, 0.5, -0.5, -1.5])

    def test_pixel_center_top_left(self):
        vp = Viewport(0j, 2.0, 4, 4)
        assert vp.pixel_center(0, 0) == complex(-1.5, 1.5)
        assert vp.pixel_center(3, 3) == complex(1.5, -1.5)

    def test_off_center_viewport(self):
        vp = Viewport(1 + 1j, 0.5, 2, 2)
        assert np.array_equal(vp.x_centers(), [0.75, 1.25])
        assert np.array_equal(vp.y_centers(), [1.25, 0.75])


class TestMembership:
    def test_interior_point(self):
        assert membership(0, MapParams(0, 0)) is None

    def test_escaping_points(self):
        # |1.5| <= 2, then 1.5^2 = 2.25 > 2 at step 1.
        assert membership(1.5, MapParams(0, 0)) == 1
        # Already outside the radius before any step.
        assert membership(3, MapParams(0, 0)) == 0

    def test_budget_is_two_alternated_steps_per_quartic_iter(self):
        cfg = IterationConfig(max_quartic_iters=7)
        assert membership_steps(cfg) == 14

    def test_alternation_order_first_step_uses_c1(self):
        # From z0 = 0: with (c1, c2) = (1.5, 0) the orbit runs 0, 1.5, 2.25
        # and escapes at step 2; with the roles swapped it runs 0, 0, 1.5,
        # 2.25 and escapes a step later.  The pair pins the step order.
        assert membership(0, MapParams(1.5, 0)) == 2
        assert membership(0, MapParams(0, 1.5)) == 3

    def test_even_symmetry(self, rng):
        for _ in range(500):
            p = MapParams(
                complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
            )
            z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            assert membership(z, p) == membership(-z, p)


class TestRenderFilledJulia:
    def test_single_pixel_matches_membership(self):
        p = MapParams(-0.4 + 0.2j, -0.4)
        vp = Viewport(0.3 + 0.1j, 0.25, 1, 1)
        grid = render_filled_julia(p, vp)
        k = membership(vp.pixel_center(0, 0), p)
        expect = INTERIOR if k is None else k
        assert grid.cells.shape == (1, 1)
        assert grid.cells[0, 0] == expect

    def test_cells_match_membership_pointwise(self, rng):
        p = MapParams(-0.5 + 0.1j, 0.2j)
        vp = Viewport(0j, 1.8, 32, 24)
        grid = render_filled_julia(p, vp)
        assert grid.cells.shape == (24, 32)
        for _ in range(100):
            i = int(rng.integers(0, 32))
            j = int(rng.integers(0, 24))
            k = membership(vp.pixel_center(i, j), p)
            expect = INTERIOR if k is None else k
            assert grid.cells[j, i] == expect

    def test_unit_disk_interior_area(self):
        grid = render_filled_julia(MapParams(0, 0), Viewport(0j, 1.5, 64, 64))
        frac = grid.interior_fraction()
        target = math.pi / 9  # disk of radius 1 in a 3x3 window
        assert abs(frac - target) / target < 0.02

    def test_central_symmetry_of_grid(self):
        # A window centred on the origin renders a 180°-rotation-invariant
        # escape pattern because membership is even.
        grid = render_filled_julia(MapParams(-0.3 + 0.4j, 0.1 - 0.2j),
                                   Viewport(0j, 1.7, 64, 64))
        assert np.array_equal(grid.cells, grid.cells[::-1, ::-1])

    def test_connected_parameters_show_interior(self):
        p = MapParams(-0.4 + 0.2j, -0.4)
        assert classify(p).connectivity is ConnectivityClass.CONNECTED
        grid = render_filled_julia(p, Viewport(0j, 2.0, 256, 256))
        assert grid.interior_fraction() > 0

    def test_serial_parallel_bit_identity(self):
        p = MapParams(-0.62 + 0.43j, -0.08 + 0.33j)
        vp = Viewport(0j, 2.0, 64, 64)
        a = render_filled_julia(p, vp, threads=1)
        b = render_filled_julia(p, vp, threads=4)
        assert np.array_equal(a.cells, b.cells)

    def test_cancellation(self):
        cancel = threading.Event()
        cancel.set()
        with pytest.raises(Cancelled):
            render_filled_julia(MapParams(0, 0), Viewport(0j, 1.5, 64, 64),
                                threads=2, cancel=cancel)

    def test_interior_fraction_extremes(self):
        # Far-field parameters leave no interior pixels.
        grid = render_filled_julia(MapParams(12, 0), Viewport(0j, 2.0, 32, 32))
        assert grid.interior_fraction() == 0.0
        assert (grid.cells >= 0).all()
