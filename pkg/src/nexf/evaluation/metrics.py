"""Image quality metrics."""

import math

import cv2
import numpy as np

from nexf.evaluation.fusion import luma
from nexf.exceptions import DimensionMismatchError
from nexf.models.metrics import ImageMetrics

SSIM_WINDOW = 11
SSIM_SIGMA = 1.5
K1, K2 = 0.01, 0.03


def _check_shapes(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise DimensionMismatchError(f"image shapes differ: {a.shape} vs {b.shape}")


def psnr(a: np.ndarray, b: np.ndarray) -> float:
    """10 log10(1 / MSE) for images in [0, 1]; identical images give +inf."""
    a, b = np.asarray(a, dtype=np.float64), np.asarray(b, dtype=np.float64)
    _check_shapes(a, b)
    mse = float(np.mean((a - b) ** 2))
    return math.inf if mse == 0 else -10.0 * math.log10(mse)


def ssim(a: np.ndarray, b: np.ndarray) -> float:
    """Mean local SSIM of the lumas, 11x11 Gaussian window with σ = 1.5.

    Statistics are averaged over window positions fully inside the image.
    """
    a, b = np.asarray(a, dtype=np.float64), np.asarray(b, dtype=np.float64)
    _check_shapes(a, b)
    if a.ndim == 3 and a.shape[2] == 3:
        a, b = luma(a), luma(b)
    elif a.ndim == 3:
        a, b = a[..., 0], b[..., 0]
    if min(a.shape[:2]) < SSIM_WINDOW:
        raise DimensionMismatchError(f"image {a.shape[1]}x{a.shape[0]} is smaller than the SSIM window")

    def blur(x: np.ndarray) -> np.ndarray:
        return cv2.GaussianBlur(x, (SSIM_WINDOW, SSIM_WINDOW), SSIM_SIGMA)

    c1, c2 = K1**2, K2**2
    mu_a, mu_b = blur(a), blur(b)
    var_a = blur(a * a) - mu_a**2
    var_b = blur(b * b) - mu_b**2
    cov = blur(a * b) - mu_a * mu_b
    ssim_map = ((2 * mu_a * mu_b + c1) * (2 * cov + c2)) / ((mu_a**2 + mu_b**2 + c1) * (var_a + var_b + c2))
    r = SSIM_WINDOW // 2
    return float(ssim_map[r:-r, r:-r].mean())


def image_metrics(prediction: np.ndarray, target: np.ndarray) -> ImageMetrics:
    """PSNR and SSIM of ``prediction`` against ``target``."""
    return ImageMetrics(psnr=psnr(prediction, target), ssim=ssim(prediction, target))


def mse_reduction(psnr_base: float, psnr_new: float) -> float:
    """Fraction of MSE removed going from ``psnr_base`` to ``psnr_new``."""
    if psnr_base == psnr_new:
        return 0.0
    return 1.0 - 10.0 ** (-(psnr_new - psnr_base) / 10.0)
