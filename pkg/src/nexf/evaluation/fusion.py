"""Mertens exposure fusion with Laplacian pyramid blending."""

import math
from collections.abc import Sequence

import cv2
import numpy as np

from nexf.exceptions import DimensionMismatchError, FusionError
from nexf.models.config import FusionConfig

LUMA = np.array([0.299, 0.587, 0.114])
STABILIZER = 1e-12


def luma(image: np.ndarray) -> np.ndarray:
    """Grayscale 0.299 R + 0.587 G + 0.114 B of an (H, W, 3) RGB image."""
    return np.asarray(image, dtype=np.float64) @ LUMA


def contrast(image: np.ndarray) -> np.ndarray:
    """Absolute Laplacian of luma."""
    return np.abs(cv2.Laplacian(luma(image), cv2.CV_64F))


def saturation(image: np.ndarray) -> np.ndarray:
    """Per-pixel channel standard deviation."""
    return np.std(image, axis=2)


def well_exposedness(image: np.ndarray, sigma: float = 0.2) -> np.ndarray:
    """Π_c exp(-(I_c - 0.5)² / (2σ²))."""
    return np.prod(np.exp(-((image - 0.5) ** 2) / (2.0 * sigma**2)), axis=2)


def fusion_weights(stack: Sequence[np.ndarray], cfg: FusionConfig) -> np.ndarray:
    """Normalized weight maps (N, H, W); every pixel sums to 1 across the stack."""
    maps = []
    for image in stack:
        weight = np.ones(image.shape[:2])
        if cfg.contrast_weight > 0:
            weight = weight * contrast(image) ** cfg.contrast_weight
        if cfg.saturation_weight > 0:
            weight = weight * saturation(image) ** cfg.saturation_weight
        if cfg.exposedness_weight > 0:
            weight = weight * well_exposedness(image, cfg.sigma) ** cfg.exposedness_weight
        maps.append(weight + STABILIZER)
    weights = np.stack(maps)
    return weights / weights.sum(axis=0, keepdims=True)


def auto_levels(height: int, width: int) -> int:
    """Pyramid depth ⌊log2(min(w, h))⌋ - 2, at least 1."""
    return max(int(math.floor(math.log2(min(height, width)))) - 2, 1)


def _pad_even(image: np.ndarray) -> np.ndarray:
    pad_h, pad_w = image.shape[0] % 2, image.shape[1] % 2
    if not (pad_h or pad_w):
        return image
    padding = [(0, pad_h), (0, pad_w)] + [(0, 0)] * (image.ndim - 2)
    return np.pad(image, padding, mode="edge")


def _expand(image: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
    return cv2.pyrUp(image)[: shape[0], : shape[1]]


def gaussian_pyramid(image: np.ndarray, levels: int) -> list[np.ndarray]:
    """``levels`` successively halved, blurred copies (level 0 is the input)."""
    pyramid = [np.asarray(image, dtype=np.float64)]
    for _ in range(levels - 1):
        pyramid.append(cv2.pyrDown(_pad_even(pyramid[-1])))
    return pyramid


def laplacian_pyramid(image: np.ndarray, levels: int) -> list[np.ndarray]:
    """Band-pass pyramid; the last level is the coarsest Gaussian level."""
    gaussian = gaussian_pyramid(image, levels)
    bands = [fine - _expand(coarse, fine.shape) for fine, coarse in zip(gaussian[:-1], gaussian[1:], strict=True)]
    return bands + [gaussian[-1]]


def collapse(pyramid: list[np.ndarray]) -> np.ndarray:
    """Reconstruct an image from its Laplacian pyramid."""
    image = pyramid[-1]
    for band in reversed(pyramid[:-1]):
        image = band + _expand(image, band.shape)
    return image


def blend_pyramids(stack: Sequence[np.ndarray], weights: np.ndarray, levels: int) -> np.ndarray:
    """Blend image Laplacian pyramids with Gaussian pyramids of the weight maps."""
    blended: list[np.ndarray] | None = None
    for image, weight in zip(stack, weights, strict=True):
        bands = laplacian_pyramid(image, levels)
        masks = gaussian_pyramid(weight, levels)
        terms = [band * mask[..., None] for band, mask in zip(bands, masks, strict=True)]
        blended = terms if blended is None else [a + b for a, b in zip(blended, terms, strict=True)]
    assert blended is not None
    return collapse(blended)


def mertens_fuse(stack: Sequence[np.ndarray], cfg: FusionConfig | None = None) -> np.ndarray:
    """Fuse an LDR exposure stack into one well-exposed image.

    Args:
        stack: At least two (H, W, 3) images in [0, 1] of identical size.
        cfg: Weight exponents, well-exposedness σ and pyramid depth.

    Returns:
        Fused (H, W, 3) image clamped to [0, 1].

    Raises:
        FusionError: If fewer than two images are given.
        DimensionMismatchError: If image shapes differ or are not RGB.
    """
    cfg = cfg or FusionConfig()
    if len(stack) < 2:
        raise FusionError(f"exposure fusion needs at least 2 images, got {len(stack)}")
    images = [np.asarray(image, dtype=np.float64) for image in stack]
    shape = images[0].shape
    if len(shape) != 3 or shape[2] != 3:
        raise DimensionMismatchError(f"fusion expects (H, W, 3) images, got {shape}")
    if any(image.shape != shape for image in images):
        raise DimensionMismatchError("all images in an exposure stack must have the same shape")
    levels = auto_levels(shape[0], shape[1]) if cfg.levels == "auto" else cfg.levels
    fused = blend_pyramids(images, fusion_weights(images, cfg), levels)
    return np.clip(fused, 0.0, 1.0)
