"""Checkpoint evaluation against exposure-fused targets."""

import csv
from pathlib import Path

import numpy as np

from nexf.evaluation.fusion import mertens_fuse
from nexf.evaluation.metrics import image_metrics, mse_reduction
from nexf.exceptions import MissingExposureStackError
from nexf.models.config import FusionConfig
from nexf.models.dataset import DatasetManifest, ViewRecord
from nexf.models.metrics import EvalReport, ImageMetrics, ViewMetrics
from nexf.scene.imageio import read_ppm
from nexf.training.checkpoint import Checkpoint
from nexf.training.rendering import RenderMode, render_view
from nexf.utils.logger import LoggerMixin

METRICS_CSV_HEADER = ["camera_index", "nexf_psnr", "nexf_ssim", "baseline_psnr", "baseline_ssim"]


def mean_metrics(items: list[ImageMetrics]) -> ImageMetrics:
    """Componentwise mean."""
    return ImageMetrics(
        psnr=float(np.mean([m.psnr for m in items])),
        ssim=float(np.mean([m.ssim for m in items])),
    )


class Evaluator(LoggerMixin):
    """Scores NExF and mean-exposure renders of every test camera."""

    def __init__(
        self, manifest: DatasetManifest, manifest_dir: Path, fusion: FusionConfig | None = None
    ) -> None:
        """Initialize evaluator.

        Args:
            manifest: Dataset whose test cameras are stored at every exposure.
            manifest_dir: Directory image paths are relative to.
            fusion: Fusion settings for the targets.
        """
        self.manifest = manifest
        self.manifest_dir = manifest_dir
        self.fusion = fusion or FusionConfig()

    def stacks(self) -> dict[int, list[ViewRecord]]:
        """Test stacks by camera, checked for completeness.

        Raises:
            MissingExposureStackError: If a camera lacks any exposure of the set.
        """
        expected = sorted(self.manifest.exposure_set)
        stacks = self.manifest.test_stacks()
        if not stacks:
            raise MissingExposureStackError("manifest has no test views")
        for camera_index, stack in stacks.items():
            if sorted(view.exposure for view in stack) != expected:
                raise MissingExposureStackError(
                    f"test camera {camera_index} is not stored at every exposure of the set"
                )
        return stacks

    def fused_target(self, stack: list[ViewRecord]) -> np.ndarray:
        """Mertens fusion of one camera's exposure stack."""
        return mertens_fuse([read_ppm(self.manifest_dir / view.image) for view in stack], self.fusion)

    def evaluate(self, ckpt: Checkpoint) -> EvalReport:
        """Per-view and mean PSNR/SSIM of NExF and baseline renders."""
        stacks = self.stacks()
        baseline_mode = RenderMode.input_exposure(ckpt.mean_train_exposure)
        train_exposures = {view.exposure for view in self.manifest.train_views}
        views: list[ViewMetrics] = []
        in_dist: list[ImageMetrics] = []
        out_dist: list[ImageMetrics] = []
        for camera_index, stack in stacks.items():
            camera = stack[0].camera
            target = self.fused_target(stack)
            views.append(
                ViewMetrics(
                    camera_index=camera_index,
                    nexf=image_metrics(render_view(ckpt, camera, RenderMode.nexf()), target),
                    baseline=image_metrics(render_view(ckpt, camera, baseline_mode), target),
                )
            )
            for view in stack:
                rendered = render_view(ckpt, camera, RenderMode.input_exposure(view.exposure))
                metrics = image_metrics(rendered, read_ppm(self.manifest_dir / view.image))
                (in_dist if view.exposure in train_exposures else out_dist).append(metrics)
            self.log_debug(f"camera {camera_index}: {views[-1].nexf.psnr:.2f} dB", camera=camera_index)

        nexf = mean_metrics([v.nexf for v in views])
        baseline = mean_metrics([v.baseline for v in views])
        report = EvalReport(
            views=views,
            nexf=nexf,
            baseline=baseline,
            baseline_exposure=ckpt.mean_train_exposure,
            mse_reduction=mse_reduction(baseline.psnr, nexf.psnr),
            input_exposure_id=mean_metrics(in_dist) if in_dist else None,
            input_exposure_ood=mean_metrics(out_dist) if out_dist else None,
        )
        self.log_info(
            f"NExF {nexf.psnr:.2f} dB vs baseline {baseline.psnr:.2f} dB",
            mse_reduction=report.mse_reduction,
        )
        return report


def evaluate(
    ckpt: Checkpoint, manifest: DatasetManifest, manifest_dir: Path, fusion: FusionConfig | None = None
) -> EvalReport:
    """Evaluate a checkpoint on a manifest's test cameras."""
    return Evaluator(manifest, manifest_dir, fusion).evaluate(ckpt)


def write_metrics(report: EvalReport, out_dir: Path) -> tuple[Path, Path]:
    """Write ``metrics.json`` and ``metrics.csv``; returns both paths."""
    out_dir.mkdir(parents=True, exist_ok=True)
    json_path = out_dir / "metrics.json"
    json_path.write_text(report.model_dump_json(indent=2))
    csv_path = out_dir / "metrics.csv"
    with csv_path.open("w", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(METRICS_CSV_HEADER)
        for v in report.views:
            writer.writerow(
                [v.camera_index, repr(v.nexf.psnr), repr(v.nexf.ssim), repr(v.baseline.psnr), repr(v.baseline.ssim)]
            )
    return json_path, csv_path
