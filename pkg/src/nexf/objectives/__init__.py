"""Pixel weighting and training losses."""

from nexf.objectives.losses import exposure_loss, photometric_loss, weighted_exposure_loss
from nexf.objectives.weights import pixel_weight, saturation, well_exposedness

__all__ = [
    "well_exposedness",
    "saturation",
    "pixel_weight",
    "photometric_loss",
    "exposure_loss",
    "weighted_exposure_loss",
]
