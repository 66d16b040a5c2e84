"""Ground-truth HDR renders of analytic scenes."""

import numpy as np
import torch

from nexf.models.scene import Camera, SceneBounds, SceneSpec
from nexf.render.composite import composite_color
from nexf.render.rays import generate_rays
from nexf.render.sampling import sample_stratified
from nexf.scene.field import SceneField

REFERENCE_SAMPLES = 256


def render_reference(
    scene: SceneSpec | SceneField,
    camera: Camera,
    bounds: SceneBounds,
    num_samples: int = REFERENCE_SAMPLES,
    chunk: int = 4096,
) -> np.ndarray:
    """HDR radiance image (H, W, 3) ray-marched through the ground-truth field.

    Samples sit at bin midpoints, so the render is deterministic.
    """
    field = scene if isinstance(scene, SceneField) else SceneField(scene)
    rays = generate_rays(camera, bounds)
    pieces = []
    with torch.no_grad():
        for start in range(0, len(rays), chunk):
            batch = sample_stratified(rays.index(slice(start, start + chunk)), num_samples)
            batch.sigma, batch.colors = field(batch.positions)
            pieces.append(composite_color(batch))
    image = torch.cat(pieces).reshape(camera.height, camera.width, 3)
    return image.numpy()
