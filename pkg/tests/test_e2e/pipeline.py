"""Helpers for end-to-end runs on the two-region scene."""

from dataclasses import dataclass
from pathlib import Path

from nexf.models import CaptureSpec, DatasetManifest, RunConfig, SceneSpec, TrainConfig, WeightConfig
from nexf.scene.dataset import synthesize
from nexf.training.checkpoint import Checkpoint
from nexf.training.trainer import train

ACCEPTANCE_ITERATIONS = 2000


@dataclass
class TrainedRun:
    """A synthesized dataset and the checkpoint trained on it."""

    config: RunConfig
    manifest: DatasetManifest
    manifest_dir: Path
    checkpoint: Checkpoint


def acceptance_config(seed: int, reg_weight: float = 1.0) -> RunConfig:
    """Two-region scene, 12 train views at 64x64, forward-facing architecture."""
    return RunConfig(
        scene=SceneSpec(preset="two_region"),
        capture=CaptureSpec(train_views=12, test_views=2, width=64, height=64),
        profile="forward_facing",
        train=TrainConfig(
            iterations=ACCEPTANCE_ITERATIONS,
            rays_per_batch=1024,
            num_samples=64,
            weights=WeightConfig(reg_weight=reg_weight),
        ),
        seed=seed,
    )


def run_pipeline(config: RunConfig, out_dir: Path) -> TrainedRun:
    """Synthesize and train in ``out_dir``."""
    manifest = synthesize(config, out_dir)
    ckpt = train(manifest, config.train, out_dir, config.radiance_config, config.exposure)
    return TrainedRun(config=config, manifest=manifest, manifest_dir=out_dir, checkpoint=ckpt)
