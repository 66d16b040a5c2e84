"""Photometric and exposure losses, summed over the ray batch."""

import torch

from nexf.core.params import DTYPE
from nexf.exceptions import DimensionMismatchError
from nexf.models.config import WeightConfig
from nexf.objectives.weights import pixel_weight


def photometric_loss(predicted: torch.Tensor, target: torch.Tensor) -> torch.Tensor:
    """Σ ‖c_pred - c_gt‖² over rays."""
    if predicted.shape != target.shape:
        raise DimensionMismatchError(f"prediction {tuple(predicted.shape)} vs target {tuple(target.shape)}")
    return ((predicted - target) ** 2).sum()


def weighted_exposure_loss(
    predicted: torch.Tensor,
    target: torch.Tensor,
    weights: torch.Tensor,
    reg: torch.Tensor,
    reg_weight: float = 1.0,
) -> torch.Tensor:
    """Σ w (Δt̂_pixel - Δt)² + reg_weight · Σ Δt_reg."""
    target = torch.as_tensor(target, dtype=DTYPE)
    return (weights * (predicted - target) ** 2).sum() + reg_weight * reg.sum()


def exposure_loss(
    predicted: torch.Tensor,
    target: torch.Tensor,
    gt_colors: torch.Tensor,
    reg: torch.Tensor,
    cfg: WeightConfig | None = None,
) -> torch.Tensor:
    """Exposure loss with pixel weights computed from ground-truth colors.

    Args:
        predicted: Rendered exposure per ray (R,).
        target: Input exposure of each ray (R,).
        gt_colors: Ground-truth LDR colors (R, 3); carry no gradient.
        reg: Rendered regularizer per ray (R,).
        cfg: Weighting hyperparameters.
    """
    cfg = cfg or WeightConfig()
    weights = pixel_weight(gt_colors.detach(), cfg)
    return weighted_exposure_loss(predicted, target, weights, reg, cfg.reg_weight)
