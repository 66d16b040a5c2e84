"""Test-time rendering from a checkpoint."""

from dataclasses import dataclass
from typing import Literal

import numpy as np
import torch

from nexf.exceptions import ConfigValidationError, InvalidExposureError
from nexf.fields.exposure import exposure_forward
from nexf.fields.radiance import density, radiance_forward
from nexf.models.scene import Camera
from nexf.render.composite import RaySampleBatch, composite_color, composite_exposure, compute_weights
from nexf.render.rays import RayBundle, generate_rays
from nexf.render.sampling import sample_stratified
from nexf.training.checkpoint import Checkpoint
from nexf.utils.config import get_settings

# floor on predicted exposures used for conditioning (softplus can underflow to 0)
MIN_EXPOSURE = 1e-8


@dataclass(frozen=True)
class RenderMode:
    """Conditioning used at render time: a fixed exposure, or the exposure field."""

    kind: Literal["input_exposure", "nexf"]
    exposure: float | None = None

    @classmethod
    def nexf(cls) -> "RenderMode":
        """Condition each sample on the exposure field's prediction."""
        return cls("nexf")

    @classmethod
    def input_exposure(cls, exposure: float) -> "RenderMode":
        """Condition every sample on ``exposure``.

        Raises:
            InvalidExposureError: If ``exposure`` is not positive.
        """
        if not exposure > 0:
            raise InvalidExposureError(f"exposure must be > 0, got {exposure}", fields=["mode"])
        return cls("input_exposure", float(exposure))

    @classmethod
    def parse(cls, text: str) -> "RenderMode":
        """Parse ``nexf`` or ``exposure:<seconds>``."""
        if text == "nexf":
            return cls.nexf()
        prefix, _, value = text.partition(":")
        if prefix != "exposure" or not value:
            raise ConfigValidationError(f"unknown render mode {text!r}", fields=["mode"])
        try:
            exposure = float(value)
        except ValueError:
            raise ConfigValidationError(f"invalid exposure in mode {text!r}", fields=["mode"]) from None
        return cls.input_exposure(exposure)

    def __str__(self) -> str:
        return "nexf" if self.kind == "nexf" else f"exposure:{self.exposure}"


def _sample(ckpt: Checkpoint, rays: RayBundle) -> RaySampleBatch:
    batch = sample_stratified(rays, ckpt.train.num_samples)
    batch.sigma = density(ckpt.store, ckpt.radiance, batch.positions)
    return batch


def _pixel_exposure(ckpt: Checkpoint, batch: RaySampleBatch) -> torch.Tensor:
    compute_weights(batch)
    batch.exposures = exposure_forward(ckpt.store, ckpt.exposure, batch.positions)
    return composite_exposure(batch)


def _render_chunk(ckpt: Checkpoint, rays: RayBundle, mode: RenderMode, per_pixel: bool) -> torch.Tensor:
    batch = _sample(ckpt, rays)
    conditioning: torch.Tensor | float
    if mode.kind == "input_exposure":
        assert mode.exposure is not None
        conditioning = mode.exposure
    elif per_pixel:
        pixel = _pixel_exposure(ckpt, batch)
        coverage = batch.weights.sum(dim=-1).clamp_min(1e-12)  # type: ignore[union-attr]
        conditioning = (pixel / coverage).clamp_min(MIN_EXPOSURE)[:, None]
    else:
        conditioning = exposure_forward(ckpt.store, ckpt.exposure, batch.positions).clamp_min(MIN_EXPOSURE)
    batch.sigma, batch.colors = radiance_forward(
        ckpt.store, ckpt.radiance, batch.positions, batch.directions, conditioning
    )
    return composite_color(batch)


def render_view(
    ckpt: Checkpoint,
    camera: Camera,
    mode: RenderMode,
    per_pixel: bool = False,
    chunk: int | None = None,
) -> np.ndarray:
    """LDR image (H, W, 3) of ``camera``; GLO embeddings are left out.

    Args:
        ckpt: Trained checkpoint.
        camera: View to render.
        mode: Fixed-exposure or exposure-field conditioning.
        per_pixel: In ``nexf`` mode, condition every sample of a ray on the ray's
            rendered exposure (normalized by its opacity) instead of per point.
        chunk: Rays per chunk; defaults to the ``render_chunk`` setting.
    """
    chunk = chunk or get_settings().render_chunk
    rays = generate_rays(camera, ckpt.bounds)
    with torch.no_grad():
        pieces = [
            _render_chunk(ckpt, rays.index(slice(start, start + chunk)), mode, per_pixel)
            for start in range(0, len(rays), chunk)
        ]
    return torch.cat(pieces).reshape(camera.height, camera.width, 3).numpy()


def export_exposure_map(ckpt: Checkpoint, camera: Camera, chunk: int | None = None) -> np.ndarray:
    """Rendered exposure Σ_j w_j Δt̂_j per pixel, shape (H, W, 1)."""
    chunk = chunk or get_settings().render_chunk
    rays = generate_rays(camera, ckpt.bounds)
    with torch.no_grad():
        pieces = [
            _pixel_exposure(ckpt, _sample(ckpt, rays.index(slice(start, start + chunk))))
            for start in range(0, len(rays), chunk)
        ]
    return torch.cat(pieces).reshape(camera.height, camera.width, 1).numpy()
