"""Parameter-space sampling: slice/volume specs, class grids, projections."""

import threading

import numpy as np
import pytest

from altjulia import (
    Axis4,
    Cancelled,
    ClassVolume,
    ConnectivityClass,
    IterationConfig,
    MapParams,
    SliceSpec,
    VolumeSpec,
    axis_centers,
    classify,
    project_volume,
    sample_slice2d,
    sample_volume3d,
)


class TestAxis4:
    def test_order_and_shorts(self):
        assert [a.short for a in Axis4] == ["re1", "im1", "re2", "im2"]
        assert Axis4.from_name("re1") is Axis4.RE1
        assert Axis4.from_name("IM2") is Axis4.IM2
        with pytest.raises(ValueError):
            Axis4.from_name("re3")


class TestAxisCenters:
    def test_cell_midpoints(self):
        assert np.array_equal(axis_centers(-2.0, 2.0, 4), [-1.5, -0.5, 0.5, 1.5])
        assert np.array_equal(axis_centers(0.0, 1.0, 2), [0.25, 0.75])

    def test_mirror_symmetry_bitwise(self):
        # Centers of a symmetric range mirror exactly in floating point.
        for res in (2, 8, 64, 256):
            c = axis_centers(-2.0, 2.0, res)
            assert np.array_equal(c, -c[::-1])

    def test_single_cell(self):
        assert np.array_equal(axis_centers(-1.0, 3.0, 1), [1.0])


class TestSliceSpec:
    def test_from_fixed_canonical_free_axes(self):
        spec = SliceSpec.from_fixed({Axis4.RE2: -0.4, Axis4.IM2: 0.0}, res=16)
        assert spec.x_axis is Axis4.RE1
        assert spec.y_axis is Axis4.IM1
        spec = SliceSpec.from_fixed({Axis4.RE1: 0.0, Axis4.IM2: 0.0}, res=16)
        assert spec.x_axis is Axis4.IM1
        assert spec.y_axis is Axis4.RE2

    def test_rejects_non_partition(self):
        with pytest.raises(ValueError):
            SliceSpec(fixed=((Axis4.RE1, 0.0), (Axis4.IM1, 0.0)),
                      x_axis=Axis4.RE1, y_axis=Axis4.IM2)
        with pytest.raises(ValueError):
            SliceSpec(fixed=((Axis4.RE1, 0.0), (Axis4.RE1, 1.0)),
                      x_axis=Axis4.RE2, y_axis=Axis4.IM2)

    def test_rejects_bad_window(self):
        with pytest.raises(ValueError):
            SliceSpec.from_fixed({Axis4.RE2: 0.0, Axis4.IM2: 0.0},
                                 res=8, lo=1.0, hi=1.0)
        with pytest.raises(ValueError):
            SliceSpec(fixed=((Axis4.RE2, 0.0), (Axis4.IM2, 0.0)),
                      x_axis=Axis4.RE1, y_axis=Axis4.IM1, res_x=0)

    def test_param_point_assembly(self):
        spec = SliceSpec.from_fixed({Axis4.RE2: -0.4, Axis4.IM2: 0.25}, res=4)
        p = spec.param_point(0, 3)
        assert p == MapParams(complex(-1.5, 1.5), complex(-0.4, 0.25))
        spec = SliceSpec.from_fixed({Axis4.RE1: 0.0, Axis4.IM1: -1.05}, res=4)
        p = spec.param_point(2, 1)
        assert p == MapParams(complex(0.0, -1.05), complex(0.5, -0.5))

    def test_default_window(self):
        spec = SliceSpec.from_fixed({Axis4.RE2: 0.0, Axis4.IM2: 0.0}, res=8)
        assert (spec.x_min, spec.x_max, spec.y_min, spec.y_max) == (-2, 2, -2, 2)


class TestSampleSlice2d:
    def test_single_cell_matches_classify(self):
        spec = SliceSpec.from_fixed({Axis4.RE2: 0.0, Axis4.IM2: 0.0},
                                    res=1, lo=-1.0, hi=1.0)
        grid = sample_slice2d(spec)
        assert grid.cells.shape == (1, 1)
        # The cell center is c1 = 0, c2 = 0: connected.
        assert grid.cells[0, 0] == int(ConnectivityClass.CONNECTED)

    def test_grid_agrees_with_pointwise_oracle(self, rng):
        spec = SliceSpec.from_fixed({Axis4.RE2: -0.4, Axis4.IM2: 0.0}, res=32)
        grid = sample_slice2d(spec)
        for _ in range(100):
            i = int(rng.integers(0, 32))
            j = int(rng.integers(0, 32))
            r = classify(spec.param_point(i, j), grid.config)
            assert grid.cells[j, i] == int(r.connectivity)

    def test_low_confidence_count_matches_oracle(self):
        spec = SliceSpec.from_fixed({Axis4.RE2: -0.1562, Axis4.IM2: 1.0320},
                                    res=48, lo=-1.0, hi=1.0)
        cfg = IterationConfig(cycle_search_budget=8)
        grid = sample_slice2d(spec, cfg)
        expected = sum(
            classify(spec.param_point(i, j), cfg).low_confidence
            for j in range(48) for i in range(48)
        )
        assert grid.low_confidence_count == expected

    def test_serial_parallel_bit_identity(self):
        spec = SliceSpec.from_fixed({Axis4.RE1: 0.0, Axis4.IM1: -1.05}, res=64)
        a = sample_slice2d(spec, threads=1)
        b = sample_slice2d(spec, threads=4)
        assert np.array_equal(a.cells, b.cells)
        assert a.low_confidence_count == b.low_confidence_count
        assert a == b

    def test_cancellation(self):
        cancel = threading.Event()
        cancel.set()
        spec = SliceSpec.from_fixed({Axis4.RE2: 0.0, Axis4.IM2: 0.0}, res=32)
        with pytest.raises(Cancelled):
            sample_slice2d(spec, threads=2, cancel=cancel)

    def test_conjugation_mirror_between_slices(self):
        """Pinning im1 to +v and to -v yields grids that are mirror images
        across the im2 axis, because conjugating both parameters preserves
        the class and the window is symmetric."""
        v = 0.7
        up = SliceSpec.from_fixed({Axis4.RE1: -0.3, Axis4.IM1: +v}, res=16)
        dn = SliceSpec.from_fixed({Axis4.RE1: -0.3, Axis4.IM1: -v}, res=16)
        a = sample_slice2d(up)
        b = sample_slice2d(dn)
        # Free axes are (re2, im2); flipping the im2 rows realises conjugation.
        assert np.array_equal(a.cells, b.cells[::-1, :])

    def test_rejects_undersized_radius_override(self):
        spec = SliceSpec.from_fixed({Axis4.RE2: 0.0, Axis4.IM2: 0.0}, res=4)
        # The outermost cell centers reach |c1| = hypot(1.5, 1.5) ~ 2.1213.
        cfg = IterationConfig(escape_radius_override=2.1)
        with pytest.raises(ValueError):
            sample_slice2d(spec, cfg)
        ok = IterationConfig(escape_radius_override=2.2)
        sample_slice2d(spec, ok)  # accepted

    def test_far_window_is_all_totally_disconnected(self):
        spec = SliceSpec.from_fixed({Axis4.RE2: 12.0, Axis4.IM2: 0.0},
                                    res=16, lo=10.0, hi=14.0)
        grid = sample_slice2d(spec)
        assert (grid.cells == int(ConnectivityClass.TOTALLY_DISCONNECTED)).all()


class TestVolumeSpec:
    def test_from_fixed_free_axes(self):
        vspec = VolumeSpec.from_fixed(Axis4.RE1, 0.0, res=8)
        assert vspec.free_axes == (Axis4.IM1, Axis4.RE2, Axis4.IM2)
        vspec = VolumeSpec.from_fixed(Axis4.IM2, 0.5, res=8)
        assert vspec.free_axes == (Axis4.RE1, Axis4.IM1, Axis4.RE2)

    def test_voxel_count_and_centers(self):
        vspec = VolumeSpec.from_fixed(Axis4.RE1, 0.0, res=4)
        assert vspec.n_voxels() == 64
        assert np.array_equal(vspec.centers(0), [-1.5, -0.5, 0.5, 1.5])

    def test_voxel_cap_enforced_before_compute(self):
        vspec = VolumeSpec.from_fixed(Axis4.RE1, 0.0, res=8)
        with pytest.raises(ValueError):
            sample_volume3d(vspec, max_voxels=511)

    def test_plane_slice_consistency(self):
        vspec = VolumeSpec.from_fixed(Axis4.RE1, 0.0, res=8)
        vol = sample_volume3d(vspec)
        for k in (0, 3, 7):
            plane = sample_slice2d(vspec.plane_slice(k))
            assert np.array_equal(vol.voxels[k], plane.cells)

    def test_serial_parallel_bit_identity(self):
        vspec = VolumeSpec.from_fixed(Axis4.IM1, -1.05, res=8)
        a = sample_volume3d(vspec, threads=1)
        b = sample_volume3d(vspec, threads=4)
        assert np.array_equal(a.voxels, b.voxels)

    def test_single_voxel_origin_is_connected(self):
        vspec = VolumeSpec.from_fixed(Axis4.RE1, 0.0, res=1, lo=-1.0, hi=1.0)
        vol = sample_volume3d(vspec)
        assert vol.voxels.shape == (1, 1, 1)
        assert vol.voxels[0, 0, 0] == int(ConnectivityClass.CONNECTED)


class TestProjectVolume:
    @staticmethod
    def _tiny_volume():
        vspec = VolumeSpec.from_fixed(Axis4.RE1, 0.0, res=4)
        voxels = np.zeros((4, 4, 4), dtype=np.uint8)
        voxels[1, 2, 3] = int(ConnectivityClass.CONNECTED)  # (z=1, y=2, x=3)
        cfg = IterationConfig()
        return ClassVolume(spec=vspec, voxels=voxels, config=cfg)

    def test_projection_positions(self):
        vol = self._tiny_volume()
        x_ax, y_ax, z_ax = vol.spec.free_axes
        along_z = project_volume(vol, z_ax, ConnectivityClass.CONNECTED)
        assert along_z.shape == (4, 4) and along_z.sum() == 1
        assert along_z[2, 3]  # (y, x) survives
        along_y = project_volume(vol, y_ax, ConnectivityClass.CONNECTED)
        assert along_y.sum() == 1 and along_y[1, 3]  # (z, x)
        along_x = project_volume(vol, x_ax, ConnectivityClass.CONNECTED)
        assert along_x.sum() == 1 and along_x[1, 2]  # (z, y)

    def test_absent_class_projects_empty(self):
        vol = self._tiny_volume()
        m = project_volume(vol, vol.spec.free_axes[0],
                           ConnectivityClass.DISCONNECTED)
        assert not m.any()

    def test_rejects_non_free_axis(self):
        vol = self._tiny_volume()
        with pytest.raises(ValueError):
            project_volume(vol, Axis4.RE1, ConnectivityClass.CONNECTED)

    def test_desk_scale_volume_has_both_classes_and_projections(self):
        vspec = VolumeSpec.from_fixed(Axis4.RE1, 0.0, res=64)
        vol = sample_volume3d(vspec)
        assert (vol.voxels == int(ConnectivityClass.CONNECTED)).any()
        assert (vol.voxels == int(ConnectivityClass.DISCONNECTED)).any()
        for axis in vspec.free_axes:
            for cls in (ConnectivityClass.CONNECTED,
                        ConnectivityClass.DISCONNECTED):
                assert project_volume(vol, axis, cls).any()
