"""Neural exposure field: optimal exposure time as a function of position."""

import torch

from nexf.core.mlp import mlp_forward, posenc
from nexf.core.params import ParamStore
from nexf.fields.layout import EXPOSURE_MLP
from nexf.models.config import ExposureFieldConfig


def exposure_forward(store: ParamStore, cfg: ExposureFieldConfig, x: torch.Tensor) -> torch.Tensor:
    """Predicted exposure Δt̂(x) > 0, shape x.shape[:-1]."""
    return mlp_forward(store, EXPOSURE_MLP, cfg.mlp, posenc(x, cfg.posenc_levels))[..., 0]


def exposure_diff(
    store: ParamStore, cfg: ExposureFieldConfig, x: torch.Tensor, eps: torch.Tensor
) -> torch.Tensor:
    """Squared difference (Δt̂(x) - Δt̂(x + ε))² per point."""
    return (exposure_forward(store, cfg, x) - exposure_forward(store, cfg, x + eps)) ** 2


def exposure_variation(
    store: ParamStore,
    cfg: ExposureFieldConfig,
    points: torch.Tensor,
    noise_std: float,
    generator: torch.Generator,
) -> float:
    """Mean |Δt̂(x) - Δt̂(x + ε)| over sample points with ε ~ N(0, noise_std²)."""
    with torch.no_grad():
        eps = torch.randn(points.shape, generator=generator, dtype=points.dtype) * noise_std
        diff = exposure_forward(store, cfg, points) - exposure_forward(store, cfg, points + eps)
    return float(diff.abs().mean())
