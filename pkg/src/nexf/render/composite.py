"""Quadrature compositing of color, exposure and the exposure regularizer."""

from dataclasses import dataclass

import torch

from nexf.exceptions import CompositingError


@dataclass
class RaySampleBatch:
    """Per-sample quantities of a ray batch, shapes (R, S[, C]).

    ``sigma``/``colors`` come from a field evaluation; ``alphas``, ``transmittance`` and
    ``weights`` are filled by :func:`composite_color`; ``exposures`` and ``reg_terms``
    by the exposure field.
    """

    t: torch.Tensor
    positions: torch.Tensor
    deltas: torch.Tensor
    directions: torch.Tensor
    sigma: torch.Tensor | None = None
    colors: torch.Tensor | None = None
    alphas: torch.Tensor | None = None
    transmittance: torch.Tensor | None = None
    weights: torch.Tensor | None = None
    exposures: torch.Tensor | None = None
    reg_terms: torch.Tensor | None = None


def compute_weights(batch: RaySampleBatch) -> torch.Tensor:
    """Fill alphas, transmittance and weights from ``sigma`` and ``deltas``."""
    if batch.sigma is None:
        raise CompositingError("densities not set on sample batch")
    alphas = 1.0 - torch.exp(-batch.sigma * batch.deltas)
    survive = torch.cumprod(1.0 - alphas, dim=-1)
    transmittance = torch.cat([torch.ones_like(survive[:, :1]), survive[:, :-1]], dim=-1)
    batch.alphas = alphas
    batch.transmittance = transmittance
    batch.weights = transmittance * alphas
    return batch.weights


def composite_color(batch: RaySampleBatch) -> torch.Tensor:
    """Pixel color Σ_j τ_j α_j c_j, shape (R, 3); caches the weights on ``batch``."""
    if batch.colors is None:
        raise CompositingError("colors not set on sample batch")
    weights = compute_weights(batch)
    return (weights[..., None] * batch.colors).sum(dim=-2)


def _frozen_weights(batch: RaySampleBatch) -> torch.Tensor:
    if batch.weights is None:
        raise CompositingError("composite_color must run before exposure compositing")
    return batch.weights.detach()


def composite_exposure(batch: RaySampleBatch) -> torch.Tensor:
    """Pixel exposure Σ_j w_j Δt̂_j over detached weights, shape (R,)."""
    weights = _frozen_weights(batch)
    if batch.exposures is None:
        raise CompositingError("exposures not set on sample batch")
    return (weights * batch.exposures).sum(dim=-1)


def composite_reg(batch: RaySampleBatch) -> torch.Tensor:
    """Pixel regularizer Σ_j w_j Δt_diff_j over detached weights, shape (R,)."""
    weights = _frozen_weights(batch)
    if batch.reg_terms is None:
        raise CompositingError("regularizer terms not set on sample batch")
    return (weights * batch.reg_terms).sum(dim=-1)
