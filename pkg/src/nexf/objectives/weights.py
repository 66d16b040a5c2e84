"""Per-pixel weights for exposure supervision."""

import torch

from nexf.core.params import DTYPE
from nexf.models.config import WeightConfig


def well_exposedness(colors: torch.Tensor, sigma_exp: float = 0.05) -> torch.Tensor:
    """Π_i exp(-(c_i - 0.5)² / σ_exp) over the last axis.

    Raises:
        ValueError: If ``sigma_exp`` is not positive.
    """
    if not sigma_exp > 0:
        raise ValueError("sigma_exp must be > 0")
    colors = torch.as_tensor(colors, dtype=DTYPE)
    return torch.exp(-((colors - 0.5) ** 2).sum(dim=-1) / sigma_exp)


def saturation(colors: torch.Tensor) -> torch.Tensor:
    """Population standard deviation of the channels."""
    colors = torch.as_tensor(colors, dtype=DTYPE)
    return torch.std(colors, dim=-1, correction=0)


def pixel_weight(colors: torch.Tensor, cfg: WeightConfig | None = None) -> torch.Tensor:
    """w = w_exp^λ_exp · max(w_sat, floor)^λ_sat from ground-truth colors.

    Disabled factors contribute 1.
    """
    cfg = cfg or WeightConfig()
    colors = torch.as_tensor(colors, dtype=DTYPE)
    weight = torch.ones(colors.shape[:-1], dtype=DTYPE)
    if cfg.use_well_exposedness:
        weight = weight * well_exposedness(colors, cfg.sigma_exp) ** cfg.lambda_exp
    if cfg.use_saturation:
        weight = weight * saturation(colors).clamp_min(cfg.sat_floor) ** cfg.lambda_sat
    return weight
