"""Exposure-fusion targets and image quality evaluation."""

from nexf.evaluation.evaluator import Evaluator, evaluate, write_metrics
from nexf.evaluation.fusion import fusion_weights, mertens_fuse
from nexf.evaluation.metrics import image_metrics, mse_reduction, psnr, ssim

__all__ = [
    "mertens_fuse",
    "fusion_weights",
    "psnr",
    "ssim",
    "image_metrics",
    "mse_reduction",
    "Evaluator",
    "evaluate",
    "write_metrics",
]
