"""Pydantic models for analytic scenes, cameras and capture settings."""

from collections.abc import Sequence
from typing import Literal, Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

RGB = tuple[float, float, float]
Vec3 = tuple[float, float, float]

DEFAULT_EXPOSURE_SET = [1 / 16, 1 / 8, 1 / 4, 1 / 2, 1.0, 2.0]


class TextureSpec(BaseModel):
    """Albedo modulation of a primitive's radiance.

    The radiance at ``x`` is scaled by ``1 + amplitude * pattern(x)`` with ``pattern``
    in [-1, 1], so radiance stays nonnegative while ``amplitude < 1``.
    """

    model_config = ConfigDict(extra="forbid")

    kind: Literal["none", "sine", "checker"] = "none"
    frequency: float = Field(default=1.0, gt=0, description="Cycles per scene unit")
    amplitude: float = Field(default=0.0, ge=0, lt=1)


class PrimitiveSpec(BaseModel):
    """Homogeneous emitting/absorbing primitive."""

    model_config = ConfigDict(extra="forbid")

    shape: Literal["sphere", "box"]
    center: Vec3 = (0.0, 0.0, 0.0)
    size: Vec3 = Field(
        default=(0.5, 0.5, 0.5), description="Half extents (box) or radius in the first entry (sphere)"
    )
    density: float = Field(..., ge=0)
    radiance: RGB
    texture: TextureSpec = Field(default_factory=TextureSpec)

    @model_validator(mode="after")
    def _check_values(self) -> Self:
        if any(c < 0 or not np.isfinite(c) for c in self.radiance):
            raise ValueError("radiance must be finite and nonnegative")
        if any(s <= 0 for s in self.size):
            raise ValueError("size entries must be positive")
        return self

    @property
    def bounds(self) -> tuple[np.ndarray, np.ndarray]:
        """Axis-aligned bounding box (min, max)."""
        center = np.asarray(self.center, dtype=np.float64)
        half = np.full(3, self.size[0]) if self.shape == "sphere" else np.asarray(self.size)
        return center - half, center + half


class SceneSpec(BaseModel):
    """Analytic ground-truth scene: an ordered list of primitives over a background.

    Later primitives take precedence where primitives overlap.
    """

    model_config = ConfigDict(extra="forbid")

    name: str = "custom"
    preset: Literal["two_region"] | None = None
    primitives: list[PrimitiveSpec] = Field(default_factory=list)
    background: RGB = (0.0, 0.0, 0.0)

    @model_validator(mode="after")
    def _expand_preset(self) -> Self:
        if self.preset is not None and not self.primitives:
            from nexf.scene.presets import preset_primitives

            self.primitives = preset_primitives(self.preset)
            self.name = self.preset
        if not self.primitives:
            raise ValueError("scene needs at least one primitive or a preset")
        if any(c < 0 for c in self.background):
            raise ValueError("background radiance must be nonnegative")
        return self

    def bounds(self, margin: float = 0.05) -> "SceneBounds":
        """Bounding box of all primitives grown by ``margin`` of its extent."""
        lows, highs = zip(*(p.bounds for p in self.primitives), strict=True)
        low, high = np.min(lows, axis=0), np.max(highs, axis=0)
        pad = (high - low) * margin / 2.0
        return SceneBounds(minimum=tuple(low - pad), maximum=tuple(high + pad))  # type: ignore[arg-type]


class SceneBounds(BaseModel):
    """Axis-aligned box used for near/far ray bounds."""

    model_config = ConfigDict(extra="forbid")

    minimum: Vec3
    maximum: Vec3

    @property
    def center(self) -> np.ndarray:
        """Box center."""
        return (np.asarray(self.minimum) + np.asarray(self.maximum)) / 2.0

    @property
    def radius(self) -> float:
        """Half diagonal."""
        return float(np.linalg.norm(np.asarray(self.maximum) - np.asarray(self.minimum)) / 2.0)

    @classmethod
    def from_cameras(cls, cameras: Sequence["Camera"]) -> "SceneBounds":
        """Cube around the point the cameras look at.

        The center is the least-squares meeting point of the optical axes (the
        minimum-norm one when they are parallel or there is a single camera). The
        half extent is half the distance to the nearest camera, or 1 when a camera
        sits on the center.

        Raises:
            ValueError: If ``cameras`` is empty.
        """
        if not cameras:
            raise ValueError("bounds cannot be derived without cameras")
        system = np.zeros((3, 3))
        target = np.zeros(3)
        for camera in cameras:
            axis = camera.rotation_matrix[:, 2]
            projector = np.eye(3) - np.outer(axis, axis)
            system += projector
            target += projector @ camera.origin
        center = np.linalg.lstsq(system, target, rcond=None)[0]
        nearest = min(float(np.linalg.norm(camera.origin - center)) for camera in cameras)
        half = nearest / 2.0 if nearest > 0 else 1.0
        return cls(minimum=tuple(center - half), maximum=tuple(center + half))  # type: ignore[arg-type]


class CaptureSpec(BaseModel):
    """Camera rig and capture settings for dataset synthesis."""

    model_config = ConfigDict(extra="forbid")

    train_views: int = Field(default=12, ge=1)
    test_views: int = Field(default=4, ge=0)
    width: int = Field(default=64, ge=1)
    height: int = Field(default=64, ge=1)
    focal: float = Field(default=96.0, gt=0, description="Focal length in pixels")
    orbit_radius: float = Field(default=3.0, gt=0)
    elevation: float = Field(default=0.45, description="Camera height above the orbit plane")
    exposure_set: list[float] = Field(default_factory=lambda: list(DEFAULT_EXPOSURE_SET), min_length=1)
    gamma: float = Field(default=2.2, gt=0)
    reference_samples: int = Field(default=256, ge=1)

    @model_validator(mode="after")
    def _check_exposures(self) -> Self:
        if any(e <= 0 for e in self.exposure_set):
            raise ValueError("exposures must be positive")
        return self


class Camera(BaseModel):
    """Pinhole camera with a world-from-camera pose.

    Camera axes: +x right, +y down, +z forward. ``rotation`` columns are the camera
    axes expressed in world coordinates.
    """

    model_config = ConfigDict(extra="forbid")

    rotation: tuple[Vec3, Vec3, Vec3] = ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))
    position: Vec3 = (0.0, 0.0, 0.0)
    fx: float = Field(..., gt=0)
    fy: float = Field(..., gt=0)
    cx: float
    cy: float
    width: int = Field(..., ge=1)
    height: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _check_rotation(self) -> Self:
        r = self.rotation_matrix
        if np.abs(r.T @ r - np.eye(3)).max() > 1e-9:
            raise ValueError("rotation must be orthonormal")
        return self

    @property
    def rotation_matrix(self) -> np.ndarray:
        """3x3 world-from-camera rotation."""
        return np.asarray(self.rotation, dtype=np.float64)

    @property
    def origin(self) -> np.ndarray:
        """Camera center in world coordinates."""
        return np.asarray(self.position, dtype=np.float64)

    def project(self, points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Project world points to (col, row) pixel coordinates.

        Args:
            points: Array (..., 3) of world points.

        Returns:
            Pixel coordinates (..., 2) as (col, row) and camera-frame depth (...,).
        """
        local = (np.asarray(points) - self.origin) @ self.rotation_matrix
        depth = local[..., 2]
        col = self.fx * local[..., 0] / depth + self.cx
        row = self.fy * local[..., 1] / depth + self.cy
        return np.stack([col, row], axis=-1), depth
