"""nexf data models."""

from nexf.models.config import (
    ExposureFieldConfig,
    FusionConfig,
    MLPSpec,
    RadianceFieldConfig,
    RunConfig,
    TrainConfig,
    WeightConfig,
    posenc_dim,
)
from nexf.models.dataset import DatasetManifest, ViewRecord
from nexf.models.metrics import EvalReport, ImageMetrics, LossRecord, ViewMetrics
from nexf.models.scene import (
    DEFAULT_EXPOSURE_SET,
    Camera,
    CaptureSpec,
    PrimitiveSpec,
    SceneBounds,
    SceneSpec,
    TextureSpec,
)

__all__ = [
    # Config models
    "MLPSpec",
    "RadianceFieldConfig",
    "ExposureFieldConfig",
    "WeightConfig",
    "TrainConfig",
    "FusionConfig",
    "RunConfig",
    "posenc_dim",
    # Scene models
    "Camera",
    "CaptureSpec",
    "PrimitiveSpec",
    "SceneBounds",
    "SceneSpec",
    "TextureSpec",
    "DEFAULT_EXPOSURE_SET",
    # Dataset models
    "DatasetManifest",
    "ViewRecord",
    # Metrics models
    "LossRecord",
    "ImageMetrics",
    "ViewMetrics",
    "EvalReport",
]
