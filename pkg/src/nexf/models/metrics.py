"""Pydantic models for training traces and evaluation reports."""

from pydantic import BaseModel, ConfigDict, Field


class LossRecord(BaseModel):
    """Losses of one logged training iteration."""

    iteration: int = Field(..., ge=0)
    loss_f: float
    loss_e: float
    total: float
    lr: float


class ImageMetrics(BaseModel):
    """PSNR/SSIM of one rendered image against its target."""

    model_config = ConfigDict(ser_json_inf_nan="constants")

    psnr: float
    ssim: float


class ViewMetrics(BaseModel):
    """Metrics of one test camera against its fused target."""

    model_config = ConfigDict(ser_json_inf_nan="constants")

    camera_index: int
    nexf: ImageMetrics
    baseline: ImageMetrics


class EvalReport(BaseModel):
    """Complete evaluation of a checkpoint on a manifest's test cameras."""

    model_config = ConfigDict(ser_json_inf_nan="constants")

    views: list[ViewMetrics] = Field(default_factory=list)
    nexf: ImageMetrics
    baseline: ImageMetrics
    baseline_exposure: float = Field(..., gt=0)
    mse_reduction: float
    input_exposure_id: ImageMetrics | None = None
    input_exposure_ood: ImageMetrics | None = None

    @property
    def psnr_gain(self) -> float:
        """Mean PSNR gain of NExF over the mean-exposure baseline."""
        return self.nexf.psnr - self.baseline.psnr
