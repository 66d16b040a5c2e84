"""Tests for camera ray generation."""

import numpy as np
import pytest
import torch

from nexf.exceptions import InvalidExposureError
from nexf.models import Camera, SceneBounds
from nexf.render.rays import MIN_NEAR, RayBundle, all_pixels, generate_rays
from nexf.render.sampling import sample_stratified
from nexf.scene.cameras import look_at

BOUNDS = SceneBounds(minimum=(-0.5, -0.5, -0.5), maximum=(0.5, 0.5, 0.5))


class TestGenerateRays:
    """Test pinhole ray directions and bounds."""

    def test_principal_point_is_forward(self) -> None:
        """The pixel at the principal point looks along the camera forward axis."""
        camera = look_at(np.array([2.0, 1.0, 0.5]), np.zeros(3), focal=20.0, width=15, height=15)
        rays = generate_rays(camera, BOUNDS, torch.tensor([[7, 7]]))

        forward = torch.tensor(camera.rotation_matrix[:, 2])
        assert torch.allclose(rays.directions[0], forward, atol=1e-15, rtol=0)

    def test_single_pixel_identity_camera(self) -> None:
        """Identity pose, unit focal, 1x1 image: the only ray points along +z."""
        camera = Camera(fx=1.0, fy=1.0, cx=0.5, cy=0.5, width=1, height=1, position=(0.0, 0.0, -3.0))
        rays = generate_rays(camera, BOUNDS)

        assert len(rays) == 1
        assert rays.directions[0].tolist() == [0.0, 0.0, 1.0]

    def test_rays_project_back_to_pixel_centers(self, small_camera: Camera) -> None:
        """Points along each ray project to the center of its pixel."""
        rays = generate_rays(small_camera, BOUNDS)
        points = rays.origins + 2.5 * rays.directions
        projected, depth = small_camera.project(points.numpy())

        expected = rays.pixels.numpy()[:, ::-1] + 0.5
        assert np.allclose(projected, expected, atol=1e-9)
        assert np.all(depth > 0)

    def test_unit_directions_and_bounds(self, small_camera: Camera) -> None:
        """Directions are normalized and near < far around the scene."""
        rays = generate_rays(small_camera, BOUNDS, exposure=0.5, view_index=2)

        assert torch.allclose(rays.directions.norm(dim=-1), torch.ones(len(rays), dtype=torch.float64))
        assert bool((rays.near >= MIN_NEAR).all())
        assert bool((rays.far > rays.near).all())
        assert bool((rays.exposure == 0.5).all())
        assert bool((rays.view_index == 2).all())

    def test_near_clamped_inside_bounds(self) -> None:
        """A camera inside the box starts marching at the minimum near."""
        camera = Camera(fx=1.0, fy=1.0, cx=0.5, cy=0.5, width=1, height=1)
        rays = generate_rays(camera, BOUNDS)

        assert rays.near.item() == MIN_NEAR

    def test_near_far_on_box_faces(self) -> None:
        """A ray along an axis enters and leaves the box at its faces."""
        camera = Camera(fx=1.0, fy=1.0, cx=0.5, cy=0.5, width=1, height=1, position=(0.0, 0.0, -3.0))
        rays = generate_rays(camera, BOUNDS)

        assert rays.near.item() == 2.5
        assert rays.far.item() == 3.5

    def test_samples_stay_inside_box(self, small_camera: Camera) -> None:
        """Every sample of a ray that crosses the box lies inside it."""
        rays = generate_rays(small_camera, BOUNDS)
        batch = sample_stratified(rays, 64)
        inside = (batch.positions.abs() <= 0.5 + 1e-9).all(dim=-1)
        entry = rays.origins + rays.near[:, None] * rays.directions
        crossing = (entry.abs() <= 0.5 + 1e-9).all(dim=-1)

        assert bool(crossing.any())
        assert bool(inside[crossing].all())

    def test_missing_ray_keeps_positive_interval(self) -> None:
        """A ray passing beside the box still gets near < far."""
        camera = Camera(fx=1.0, fy=1.0, cx=0.5, cy=0.5, width=1, height=1, position=(0.0, 2.0, -3.0))
        rays = generate_rays(camera, BOUNDS)

        assert rays.near.item() >= MIN_NEAR
        assert rays.far.item() > rays.near.item()

    def test_pixel_outside_image(self, small_camera: Camera) -> None:
        """Out-of-range pixels are rejected."""
        with pytest.raises(ValueError):
            generate_rays(small_camera, BOUNDS, torch.tensor([[0, 16]]))

    def test_invalid_exposure(self, small_camera: Camera) -> None:
        """Rays cannot carry a non-positive exposure."""
        with pytest.raises(InvalidExposureError):
            generate_rays(small_camera, BOUNDS, exposure=0.0)


class TestRayBundle:
    """Test bundle helpers."""

    def test_row_major_pixels(self, small_camera: Camera) -> None:
        """Pixels enumerate rows first."""
        pixels = all_pixels(small_camera)

        assert pixels[:3].tolist() == [[0, 0], [0, 1], [0, 2]]
        assert pixels[16].tolist() == [1, 0]

    def test_index_and_concat(self, small_camera: Camera) -> None:
        """Splitting and concatenating restores the bundle."""
        rays = generate_rays(small_camera, BOUNDS)
        joined = RayBundle.concat([rays.index(slice(0, 100)), rays.index(slice(100, None))])

        assert len(joined) == len(rays)
        assert torch.equal(joined.directions, rays.directions)
        assert torch.equal(joined.pixels, rays.pixels)
