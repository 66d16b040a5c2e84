"""Tests for camera placement."""

import math

import numpy as np
import pytest

from nexf.models import Camera, CaptureSpec
from nexf.scene.cameras import look_at, orbit_cameras


class TestLookAt:
    """Test single-camera placement."""

    def test_target_projects_to_principal_point(self, small_camera: Camera) -> None:
        """The look-at target lands at the image center."""
        pixel, depth = small_camera.project(np.zeros(3))

        assert pixel == pytest.approx([8.0, 8.0], abs=1e-12)
        assert depth == pytest.approx(math.hypot(3.0, 0.45))

    def test_up_is_up(self, small_camera: Camera) -> None:
        """Points above the target project above the image center."""
        pixel, _ = small_camera.project(np.array([0.0, 0.0, 0.2]))

        assert pixel[1] < 8.0
        assert pixel[0] == pytest.approx(8.0, abs=1e-12)

    def test_degenerate_up(self) -> None:
        """Looking straight down the up axis is rejected."""
        with pytest.raises(ValueError):
            look_at(np.array([0.0, 0.0, 3.0]), np.zeros(3), focal=10.0, width=4, height=4)


class TestOrbitCameras:
    """Test orbit rigs."""

    def test_cameras_on_orbit(self) -> None:
        """All cameras share radius and elevation and face the center."""
        capture = CaptureSpec(orbit_radius=2.0, elevation=0.5, width=8, height=8, focal=10.0)
        cameras = orbit_cameras(capture, np.zeros(3), 5)

        assert len(cameras) == 5
        for camera in cameras:
            assert np.linalg.norm(camera.origin[:2]) == pytest.approx(2.0)
            assert camera.origin[2] == pytest.approx(0.5)
            assert camera.project(np.zeros(3))[0] == pytest.approx([4.0, 4.0], abs=1e-12)

    def test_phase_offsets_angle(self) -> None:
        """A half-step phase puts cameras between the unshifted ones."""
        capture = CaptureSpec(orbit_radius=1.0, elevation=0.0)
        shifted = orbit_cameras(capture, np.zeros(3), 4, phase=0.5)

        assert shifted[0].origin[:2] == pytest.approx([math.sqrt(0.5), math.sqrt(0.5)])
