"""Multi-exposure dataset synthesis."""

from collections.abc import Sequence
from pathlib import Path

import numpy as np

from nexf.models.config import RunConfig
from nexf.models.dataset import DatasetManifest, ViewRecord
from nexf.models.scene import Camera, SceneBounds, SceneSpec
from nexf.render.reference import REFERENCE_SAMPLES, render_reference
from nexf.scene.cameras import orbit_cameras
from nexf.scene.capture import DEFAULT_GAMMA, capture_ldr
from nexf.scene.field import SceneField
from nexf.scene.imageio import write_pfm, write_ppm
from nexf.utils import rng
from nexf.utils.logger import get_logger

logger = get_logger(__name__)

MANIFEST_NAME = "manifest.json"


def build_dataset(
    scene: SceneSpec,
    cameras: Sequence[Camera],
    exposure_set: Sequence[float],
    rng_seed: int,
    out_dir: Path,
    test_cameras: Sequence[Camera] = (),
    gamma: float = DEFAULT_GAMMA,
    reference_samples: int = REFERENCE_SAMPLES,
    bounds: SceneBounds | None = None,
) -> DatasetManifest:
    """Render, capture and write a dataset; return its manifest.

    Each training camera is captured once at an exposure drawn from ``exposure_set``.
    Each test camera is captured at every exposure and its HDR render is kept.

    Args:
        scene: Ground-truth scene.
        cameras: Training cameras.
        exposure_set: Allowed exposure times.
        rng_seed: Run seed; exposures use its ``exposures`` substream.
        out_dir: Dataset directory; the manifest is written to ``manifest.json``.
        test_cameras: Held-out cameras.
        gamma: Response exponent.
        reference_samples: Samples per ray of the ground-truth renders.
        bounds: Ray bounds; defaults to the scene box with a 5% margin.

    Returns:
        The manifest that was written.
    """
    if not cameras:
        raise ValueError("at least one training camera is required")
    if not exposure_set:
        raise ValueError("exposure_set must not be empty")
    bounds = bounds or scene.bounds()
    field = SceneField(scene)
    exposures = [float(e) for e in exposure_set]
    picks = rng.numpy_stream(rng_seed, rng.EXPOSURES).integers(0, len(exposures), size=len(cameras))

    (out_dir / "train").mkdir(parents=True, exist_ok=True)
    views: list[ViewRecord] = []
    for k, (camera, pick) in enumerate(zip(cameras, picks, strict=True)):
        exposure = exposures[int(pick)]
        hdr = render_reference(field, camera, bounds, reference_samples)
        name = f"train/view_{k:03d}.ppm"
        write_ppm(out_dir / name, capture_ldr(hdr, exposure, gamma))
        views.append(ViewRecord(camera=camera, exposure=exposure, image=name, split="train", camera_index=k))
        logger.debug(f"train view {k}: exposure {exposure}")

    if test_cameras:
        (out_dir / "test").mkdir(parents=True, exist_ok=True)
    for k, camera in enumerate(test_cameras):
        hdr = render_reference(field, camera, bounds, reference_samples)
        hdr_name = f"test/cam_{k:03d}.pfm"
        write_pfm(out_dir / hdr_name, hdr)
        for j, exposure in enumerate(exposures):
            name = f"test/cam_{k:03d}_exp_{j}.ppm"
            write_ppm(out_dir / name, capture_ldr(hdr, exposure, gamma))
            views.append(
                ViewRecord(
                    camera=camera,
                    exposure=exposure,
                    image=name,
                    split="test",
                    camera_index=k,
                    hdr=hdr_name,
                )
            )

    manifest = DatasetManifest(exposure_set=exposures, bounds=bounds, views=views)
    manifest.save(out_dir / MANIFEST_NAME)
    logger.info(
        f"Wrote {len(cameras)} train and {len(test_cameras)} test cameras to {out_dir}"
    )
    return manifest


def synthesize(config: RunConfig, out_dir: Path) -> DatasetManifest:
    """Build the dataset described by a run configuration.

    Training cameras sit on an orbit around the scene center; test cameras sit on the
    same orbit halfway between them.
    """
    capture = config.capture
    bounds = config.scene.bounds()
    center = np.asarray(bounds.center)
    return build_dataset(
        config.scene,
        orbit_cameras(capture, center, capture.train_views),
        capture.exposure_set,
        config.seed,
        out_dir,
        test_cameras=orbit_cameras(capture, center, capture.test_views, phase=0.5)
        if capture.test_views
        else [],
        gamma=capture.gamma,
        reference_samples=capture.reference_samples,
        bounds=bounds,
    )
