"""nexf - Neural exposure fields for well-exposed novel views from multi-exposure captures."""

__version__ = "0.1.0"

from nexf.models import (
    Camera,
    CaptureSpec,
    DatasetManifest,
    EvalReport,
    ExposureFieldConfig,
    FusionConfig,
    RadianceFieldConfig,
    RunConfig,
    SceneSpec,
    TrainConfig,
    WeightConfig,
)

__all__ = [
    "__version__",
    "RunConfig",
    "SceneSpec",
    "CaptureSpec",
    "Camera",
    "RadianceFieldConfig",
    "ExposureFieldConfig",
    "WeightConfig",
    "TrainConfig",
    "FusionConfig",
    "DatasetManifest",
    "EvalReport",
]
