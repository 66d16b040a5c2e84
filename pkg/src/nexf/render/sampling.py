"""Stratified sampling along rays."""

import torch

from nexf.core.params import DTYPE
from nexf.render.composite import RaySampleBatch
from nexf.render.rays import RayBundle


def sample_stratified(
    rays: RayBundle, num_samples: int, generator: torch.Generator | None = None
) -> RaySampleBatch:
    """One sample per equal bin of [near, far].

    Without a generator every sample sits at its bin midpoint. Spacings are the distance
    to the next sample; the last spacing is the bin width.

    Args:
        rays: Rays to sample.
        num_samples: Samples per ray, >= 1.
        generator: Jitter stream; None disables jitter.

    Returns:
        Batch with ``t``, ``positions``, ``deltas`` and ``directions`` populated.
    """
    if num_samples < 1:
        raise ValueError("num_samples must be >= 1")
    count = len(rays)
    near, far = rays.near[:, None], rays.far[:, None]
    width = (far - near) / num_samples
    offsets = (
        torch.rand((count, num_samples), generator=generator, dtype=DTYPE)
        if generator is not None
        else torch.full((count, num_samples), 0.5, dtype=DTYPE)
    )
    bins = torch.arange(num_samples, dtype=DTYPE)[None, :]
    t = near + (bins + offsets) * width
    deltas = torch.cat([t[:, 1:] - t[:, :-1], width], dim=-1)
    positions = rays.origins[:, None, :] + t[..., None] * rays.directions[:, None, :]
    return RaySampleBatch(
        t=t,
        positions=positions,
        deltas=deltas,
        directions=rays.directions[:, None, :].expand(count, num_samples, 3),
    )
