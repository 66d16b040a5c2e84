"""Ground-truth density and HDR radiance of analytic scenes."""

import math
from collections.abc import Sequence

import torch

from nexf.core.params import DTYPE
from nexf.models.scene import PrimitiveSpec, SceneSpec, TextureSpec


def _inside(primitive: PrimitiveSpec, x: torch.Tensor) -> torch.Tensor:
    center = torch.tensor(primitive.center, dtype=DTYPE)
    if primitive.shape == "sphere":
        return torch.linalg.vector_norm(x - center, dim=-1) <= primitive.size[0]
    half = torch.tensor(primitive.size, dtype=DTYPE)
    return ((x - center).abs() <= half).all(dim=-1)


def _pattern(texture: TextureSpec, x: torch.Tensor) -> torch.Tensor:
    if texture.kind == "sine":
        return torch.sin(2.0 * math.pi * texture.frequency * x).mean(dim=-1)
    if texture.kind == "checker":
        cells = torch.floor(texture.frequency * x).sum(dim=-1)
        return 1.0 - 2.0 * torch.remainder(cells, 2.0)
    return torch.zeros(x.shape[:-1], dtype=DTYPE)


class SceneField:
    """Evaluates a :class:`SceneSpec` at batches of points."""

    def __init__(self, spec: SceneSpec) -> None:
        """Initialize from a scene description.

        Args:
            spec: Validated scene.
        """
        self.spec = spec
        self.background = torch.tensor(spec.background, dtype=DTYPE)

    def __call__(self, x: torch.Tensor) -> tuple[torch.Tensor, torch.Tensor]:
        """Density (...,) and HDR radiance (..., 3) at points (..., 3).

        Outside every primitive the density is 0 and the radiance is the background.
        Where primitives overlap the last-listed containing primitive wins.
        """
        x = x.to(DTYPE)
        sigma = torch.zeros(x.shape[:-1], dtype=DTYPE)
        radiance = self.background.expand(*x.shape[:-1], 3).clone()
        for primitive in self.spec.primitives:
            inside = _inside(primitive, x)
            if not bool(inside.any()):
                continue
            level = torch.tensor(primitive.radiance, dtype=DTYPE)
            scale = 1.0 + primitive.texture.amplitude * _pattern(primitive.texture, x)
            sigma = torch.where(inside, torch.full_like(sigma, primitive.density), sigma)
            radiance = torch.where(inside[..., None], level * scale[..., None], radiance)
        return sigma, radiance


def eval_scene(scene: SceneSpec | SceneField, x: torch.Tensor | Sequence[float]) -> tuple[torch.Tensor, torch.Tensor]:
    """Ground-truth (σ, HDR radiance) at ``x``.

    Args:
        scene: Scene description or a prepared field.
        x: Point(s) with trailing dimension 3.

    Returns:
        Density and radiance, broadcast over the leading dimensions of ``x``.
    """
    field = scene if isinstance(scene, SceneField) else SceneField(scene)
    return field(torch.as_tensor(x, dtype=DTYPE))
