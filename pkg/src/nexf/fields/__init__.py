"""Radiance field, exposure field and their shared parameter layout."""

from nexf.fields.exposure import exposure_diff, exposure_forward, exposure_variation
from nexf.fields.layout import field_shapes, init_fields, phi_mask, theta_mask
from nexf.fields.radiance import conditioned_bottleneck, density, position_branch, radiance_forward

__all__ = [
    "field_shapes",
    "init_fields",
    "theta_mask",
    "phi_mask",
    "position_branch",
    "density",
    "conditioned_bottleneck",
    "radiance_forward",
    "exposure_forward",
    "exposure_diff",
    "exposure_variation",
]
