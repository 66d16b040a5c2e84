"""Pytest configuration and shared fixtures."""

import math
from collections.abc import Callable
from pathlib import Path

import numpy as np
import pytest
import torch

from nexf.core.params import ParamStore
from nexf.fields.layout import init_fields
from nexf.models import (
    Camera,
    CaptureSpec,
    DatasetManifest,
    ExposureFieldConfig,
    MLPSpec,
    RadianceFieldConfig,
    RunConfig,
    SceneSpec,
    TrainConfig,
    posenc_dim,
)
from nexf.scene.cameras import look_at
from nexf.scene.dataset import MANIFEST_NAME, synthesize


@pytest.fixture(autouse=True)
def deterministic_torch() -> None:
    """Single-threaded torch, as configured by the CLI."""
    torch.set_num_threads(1)


@pytest.fixture
def generator() -> torch.Generator:
    """Seeded torch generator."""
    return torch.Generator().manual_seed(0)


@pytest.fixture
def tiny_radiance_config() -> RadianceFieldConfig:
    """Radiance field small enough for finite-difference checks."""
    bottleneck = 4
    return RadianceFieldConfig(
        posenc_levels_x=2,
        posenc_levels_d=1,
        bottleneck_dim=bottleneck,
        pos_mlp=MLPSpec(widths=[posenc_dim(2), 16, bottleneck + 1]),
        view_mlp=MLPSpec(widths=[bottleneck + posenc_dim(1), 16, 3]),
    )


@pytest.fixture
def tiny_exposure_config() -> ExposureFieldConfig:
    """Exposure field small enough for finite-difference checks."""
    return ExposureFieldConfig(
        posenc_levels=1, mlp=MLPSpec(widths=[posenc_dim(1), 8, 1], output_activation="softplus")
    )


@pytest.fixture
def tiny_store(
    tiny_radiance_config: RadianceFieldConfig,
    tiny_exposure_config: ExposureFieldConfig,
    generator: torch.Generator,
) -> ParamStore:
    """Initialized parameters of the tiny fields."""
    return init_fields(tiny_radiance_config, tiny_exposure_config, generator)


@pytest.fixture
def small_camera() -> Camera:
    """16x16 camera on the orbit, looking at the origin."""
    return look_at(np.array([3.0, 0.0, 0.45]), np.zeros(3), focal=24.0, width=16, height=16)


@pytest.fixture
def toy_run_config() -> RunConfig:
    """Two-region scene with a tiny capture rig and a few training steps."""
    return RunConfig(
        scene=SceneSpec(preset="two_region"),
        capture=CaptureSpec(
            train_views=3,
            test_views=1,
            width=16,
            height=16,
            focal=24.0,
            exposure_set=[0.25, 1.0],
            reference_samples=32,
        ),
        profile="forward_facing",
        train=TrainConfig(iterations=3, rays_per_batch=32, num_samples=8, warmup_steps=1, log_every=1),
        seed=3,
    )


@pytest.fixture
def toy_dataset(tmp_path: Path, toy_run_config: RunConfig) -> tuple[DatasetManifest, Path]:
    """Synthesized toy dataset and its manifest path."""
    out_dir = tmp_path / "data"
    manifest = synthesize(toy_run_config, out_dir)
    return manifest, out_dir / MANIFEST_NAME


@pytest.fixture
def relu_margin(monkeypatch: pytest.MonkeyPatch) -> Callable[[Callable[[], object]], float]:
    """Measure the smallest |pre-activation| any ReLU sees while running a function.

    Finite differences across a ReLU kink disagree with the analytic gradient, so
    gradient checks redraw their inputs until this margin exceeds the step size.
    """
    original = torch.nn.functional.relu

    def measure(fn: Callable[[], object]) -> float:
        seen = [math.inf]

        def recording(x: torch.Tensor, inplace: bool = False) -> torch.Tensor:
            if x.numel():
                seen[0] = min(seen[0], float(x.detach().abs().min()))
            return original(x, inplace=inplace)

        monkeypatch.setattr(torch.nn.functional, "relu", recording)
        try:
            with torch.no_grad():
                fn()
        finally:
            monkeypatch.setattr(torch.nn.functional, "relu", original)
        return seen[0]

    return measure
