"""Exposure-conditioned radiance field.

The position branch maps posenc(x) to a raw density and a bottleneck vector. With
``latent`` conditioning ln Δt is added to every bottleneck channel before the view
branch; ``radiance`` adds it to the pre-sigmoid color instead and ``ignore`` drops it.
"""

import torch
import torch.nn.functional as F

from nexf.core.mlp import mlp_forward, posenc
from nexf.core.params import DTYPE, ParamStore
from nexf.exceptions import InvalidExposureError
from nexf.fields.layout import GLO_SCALE, GLO_SHIFT, RADIANCE_POS, RADIANCE_VIEW
from nexf.models.config import RadianceFieldConfig


def _log_exposure(exposure: torch.Tensor | float, shape: torch.Size) -> torch.Tensor:
    exposure = torch.as_tensor(exposure, dtype=DTYPE)
    if bool((exposure <= 0).any()) or not bool(torch.isfinite(exposure).all()):
        raise InvalidExposureError("exposure must be finite and > 0", fields=["exposure"])
    return torch.log(exposure).expand(shape)


def position_branch(
    store: ParamStore, cfg: RadianceFieldConfig, x: torch.Tensor
) -> tuple[torch.Tensor, torch.Tensor]:
    """Raw density (...,) and unconditioned bottleneck (..., B) at points x."""
    h = mlp_forward(store, RADIANCE_POS, cfg.pos_mlp, posenc(x, cfg.posenc_levels_x))
    return h[..., 0], h[..., 1:]


def density(store: ParamStore, cfg: RadianceFieldConfig, x: torch.Tensor) -> torch.Tensor:
    """σ = softplus(raw density) at points x."""
    raw, _ = position_branch(store, cfg, x)
    return F.softplus(raw)


def conditioned_bottleneck(
    store: ParamStore,
    cfg: RadianceFieldConfig,
    x: torch.Tensor,
    exposure: torch.Tensor | float,
    glo_index: torch.Tensor | None = None,
) -> tuple[torch.Tensor, torch.Tensor]:
    """Raw density and the bottleneck as fed to the view branch."""
    raw, b = position_branch(store, cfg, x)
    if cfg.conditioning == "latent":
        b = b + _log_exposure(exposure, raw.shape)[..., None]
    if cfg.glo == "affine" and glo_index is not None:
        b = (1.0 + store[GLO_SCALE][glo_index]) * b + store[GLO_SHIFT][glo_index]
    return raw, b


def radiance_forward(
    store: ParamStore,
    cfg: RadianceFieldConfig,
    x: torch.Tensor,
    d: torch.Tensor,
    exposure: torch.Tensor | float,
    glo_index: torch.Tensor | None = None,
) -> tuple[torch.Tensor, torch.Tensor]:
    """Density and LDR color at x seen from direction d under exposure Δt.

    Args:
        store: Parameters.
        cfg: Architecture.
        x: Points (..., 3).
        d: Unit view directions (..., 3).
        exposure: Δt, scalar or broadcastable to x[..., 0].
        glo_index: Training image index per point; None applies no embedding.

    Returns:
        σ (...,) >= 0 and color (..., 3) in (0, 1).

    Raises:
        InvalidExposureError: If any Δt is not positive.
    """
    raw, b = conditioned_bottleneck(store, cfg, x, exposure, glo_index)
    out = mlp_forward(
        store, RADIANCE_VIEW, cfg.view_mlp, torch.cat([b, posenc(d, cfg.posenc_levels_d)], dim=-1)
    )
    if cfg.conditioning == "radiance":
        out = out + _log_exposure(exposure, raw.shape)[..., None]
    return F.softplus(raw), torch.sigmoid(out)
