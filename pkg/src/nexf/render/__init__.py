"""Rays, stratified sampling and volume compositing."""

from nexf.render.composite import (
    RaySampleBatch,
    composite_color,
    composite_exposure,
    composite_reg,
    compute_weights,
)
from nexf.render.rays import RayBundle, all_pixels, generate_rays
from nexf.render.reference import render_reference
from nexf.render.sampling import sample_stratified

__all__ = [
    "RayBundle",
    "RaySampleBatch",
    "all_pixels",
    "generate_rays",
    "sample_stratified",
    "compute_weights",
    "composite_color",
    "composite_exposure",
    "composite_reg",
    "render_reference",
]
