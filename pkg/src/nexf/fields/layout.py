"""Parameter layout of the radiance field, exposure field and GLO table."""

import torch

from nexf.core.mlp import init_mlp, mlp_shapes
from nexf.core.params import ParamStore
from nexf.models.config import ExposureFieldConfig, RadianceFieldConfig

RADIANCE_POS = "radiance.pos"
RADIANCE_VIEW = "radiance.view"
EXPOSURE_MLP = "exposure.mlp"
GLO_SCALE = "glo.scale"
GLO_SHIFT = "glo.shift"

# gradient groups
THETA_PREFIXES = ("radiance.", "glo.")
PHI_PREFIXES = ("exposure.",)


def field_shapes(
    radiance: RadianceFieldConfig, exposure: ExposureFieldConfig, num_images: int = 0
) -> list[tuple[str, tuple[int, ...]]]:
    """Segment names and shapes in layout order."""
    shapes = mlp_shapes(RADIANCE_POS, radiance.pos_mlp) + mlp_shapes(RADIANCE_VIEW, radiance.view_mlp)
    if radiance.glo == "affine":
        shapes.append((GLO_SCALE, (max(num_images, 1), radiance.bottleneck_dim)))
        shapes.append((GLO_SHIFT, (max(num_images, 1), radiance.bottleneck_dim)))
    shapes += mlp_shapes(EXPOSURE_MLP, exposure.mlp)
    return shapes


def init_fields(
    radiance: RadianceFieldConfig,
    exposure: ExposureFieldConfig,
    generator: torch.Generator,
    num_images: int = 0,
) -> ParamStore:
    """Allocate and initialize every parameter; GLO embeddings start at identity."""
    store = ParamStore.from_shapes(field_shapes(radiance, exposure, num_images), requires_grad=False)
    init_mlp(store, RADIANCE_POS, radiance.pos_mlp, generator)
    init_mlp(store, RADIANCE_VIEW, radiance.view_mlp, generator)
    init_mlp(store, EXPOSURE_MLP, exposure.mlp, generator)
    store.data.requires_grad_(True)
    return store


def theta_mask(store: ParamStore) -> torch.Tensor:
    """Coordinates of the radiance field and GLO table."""
    mask = torch.zeros(len(store), dtype=torch.bool)
    for prefix in THETA_PREFIXES:
        mask |= store.mask(prefix)
    return mask


def phi_mask(store: ParamStore) -> torch.Tensor:
    """Coordinates of the exposure field."""
    return store.mask(PHI_PREFIXES[0])
