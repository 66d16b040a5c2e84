"""Camera rays through pixel centers."""

from dataclasses import dataclass

import torch

from nexf.core.params import DTYPE
from nexf.exceptions import InvalidExposureError
from nexf.models.scene import Camera, SceneBounds

MIN_NEAR = 1e-3
# stands in for zero direction components in the slab test
AXIS_EPS = 1e-15


@dataclass
class RayBundle:
    """A batch of rays with their pixel, source view and exposure.

    Attributes:
        origins: (R, 3) ray origins.
        directions: (R, 3) unit directions.
        near: (R,) start distance.
        far: (R,) end distance, > near.
        pixels: (R, 2) integer (row, col).
        view_index: (R,) training image index, used for GLO embeddings.
        exposure: (R,) exposure time Δt of the source capture.
    """

    origins: torch.Tensor
    directions: torch.Tensor
    near: torch.Tensor
    far: torch.Tensor
    pixels: torch.Tensor
    view_index: torch.Tensor
    exposure: torch.Tensor

    def __len__(self) -> int:
        return int(self.origins.shape[0])

    def index(self, selection: torch.Tensor | slice) -> "RayBundle":
        """Subset of rays."""
        return RayBundle(
            origins=self.origins[selection],
            directions=self.directions[selection],
            near=self.near[selection],
            far=self.far[selection],
            pixels=self.pixels[selection],
            view_index=self.view_index[selection],
            exposure=self.exposure[selection],
        )

    @classmethod
    def concat(cls, bundles: list["RayBundle"]) -> "RayBundle":
        """Concatenate bundles in order."""
        return cls(
            origins=torch.cat([b.origins for b in bundles]),
            directions=torch.cat([b.directions for b in bundles]),
            near=torch.cat([b.near for b in bundles]),
            far=torch.cat([b.far for b in bundles]),
            pixels=torch.cat([b.pixels for b in bundles]),
            view_index=torch.cat([b.view_index for b in bundles]),
            exposure=torch.cat([b.exposure for b in bundles]),
        )


def all_pixels(camera: Camera) -> torch.Tensor:
    """Every (row, col) of the image in row-major order."""
    rows, cols = torch.meshgrid(
        torch.arange(camera.height), torch.arange(camera.width), indexing="ij"
    )
    return torch.stack([rows.reshape(-1), cols.reshape(-1)], dim=-1)


def _sphere_bounds(origins: torch.Tensor, bounds: SceneBounds) -> tuple[torch.Tensor, torch.Tensor]:
    center = torch.tensor(bounds.center, dtype=DTYPE)
    distance = torch.linalg.vector_norm(origins - center, dim=-1)
    near = (distance - bounds.radius).clamp_min(MIN_NEAR)
    far = torch.maximum(distance + bounds.radius, near + MIN_NEAR)
    return near, far


def ray_bounds(
    origins: torch.Tensor, directions: torch.Tensor, bounds: SceneBounds
) -> tuple[torch.Tensor, torch.Tensor]:
    """Near/far where each ray crosses the ``bounds`` box (slab test).

    Near is clamped to ``MIN_NEAR`` for origins inside the box. Rays that miss the
    box see nothing; they fall back to the box's bounding sphere so that every ray
    keeps near < far.
    """
    low = torch.tensor(bounds.minimum, dtype=DTYPE)
    high = torch.tensor(bounds.maximum, dtype=DTYPE)
    safe = torch.where(directions.abs() < AXIS_EPS, torch.full_like(directions, AXIS_EPS), directions)
    t_low = (low - origins) / safe
    t_high = (high - origins) / safe
    enter = torch.minimum(t_low, t_high).amax(dim=-1)
    leave = torch.maximum(t_low, t_high).amin(dim=-1)
    near = enter.clamp_min(MIN_NEAR)
    hit = leave > near + MIN_NEAR
    sphere_near, sphere_far = _sphere_bounds(origins, bounds)
    return torch.where(hit, near, sphere_near), torch.where(hit, leave, sphere_far)


def generate_rays(
    camera: Camera,
    bounds: SceneBounds,
    pixels: torch.Tensor | None = None,
    view_index: int = 0,
    exposure: float = 1.0,
) -> RayBundle:
    """Pinhole rays through pixel centers (col + 0.5, row + 0.5).

    Args:
        camera: Camera with world-from-camera pose.
        bounds: Scene box used for near/far.
        pixels: (R, 2) integer (row, col); every pixel when None.
        view_index: Source image index stored on each ray.
        exposure: Exposure time stored on each ray.

    Returns:
        Ray bundle in world coordinates with normalized directions.

    Raises:
        ValueError: If a pixel lies outside the image.
        InvalidExposureError: If ``exposure`` is not positive.
    """
    if not exposure > 0:
        raise InvalidExposureError(f"exposure must be > 0, got {exposure}", fields=["exposure"])
    pixels = all_pixels(camera) if pixels is None else pixels.to(torch.long)
    rows, cols = pixels[:, 0], pixels[:, 1]
    if bool(((rows < 0) | (rows >= camera.height) | (cols < 0) | (cols >= camera.width)).any()):
        raise ValueError("pixel outside image bounds")
    local = torch.stack(
        [
            (cols.to(DTYPE) + 0.5 - camera.cx) / camera.fx,
            (rows.to(DTYPE) + 0.5 - camera.cy) / camera.fy,
            torch.ones(len(pixels), dtype=DTYPE),
        ],
        dim=-1,
    )
    rotation = torch.tensor(camera.rotation_matrix, dtype=DTYPE)
    directions = local @ rotation.T
    directions = directions / torch.linalg.vector_norm(directions, dim=-1, keepdim=True)
    origins = torch.tensor(camera.origin, dtype=DTYPE).expand(len(pixels), 3).clone()
    near, far = ray_bounds(origins, directions, bounds)
    count = len(pixels)
    return RayBundle(
        origins=origins,
        directions=directions,
        near=near,
        far=far,
        pixels=pixels,
        view_index=torch.full((count,), view_index, dtype=torch.long),
        exposure=torch.full((count,), exposure, dtype=DTYPE),
    )
