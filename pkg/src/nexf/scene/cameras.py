"""Camera placement around a scene."""

import math

import numpy as np

from nexf.models.scene import Camera, CaptureSpec

WORLD_UP = np.array([0.0, 0.0, 1.0])


def look_at(
    position: np.ndarray,
    target: np.ndarray,
    focal: float,
    width: int,
    height: int,
    up: np.ndarray = WORLD_UP,
) -> Camera:
    """Pinhole camera at ``position`` whose forward axis points at ``target``.

    The principal point is the image center.
    """
    position = np.asarray(position, dtype=np.float64)
    forward = np.asarray(target, dtype=np.float64) - position
    forward /= np.linalg.norm(forward)
    right = np.cross(forward, up)
    norm = np.linalg.norm(right)
    if norm < 1e-12:
        raise ValueError("camera forward axis is parallel to the up vector")
    right /= norm
    down = np.cross(forward, right)
    rotation = np.stack([right, down, forward], axis=1)
    return Camera(
        rotation=tuple(tuple(float(v) for v in row) for row in rotation),  # type: ignore[arg-type]
        position=tuple(float(v) for v in position),  # type: ignore[arg-type]
        fx=focal,
        fy=focal,
        cx=width / 2.0,
        cy=height / 2.0,
        width=width,
        height=height,
    )


def orbit_cameras(
    capture: CaptureSpec, center: np.ndarray, count: int, phase: float = 0.0
) -> list[Camera]:
    """``count`` cameras evenly spaced on a horizontal orbit around ``center``.

    Args:
        capture: Orbit radius, elevation and intrinsics.
        center: Orbit and look-at center.
        count: Number of cameras.
        phase: Fraction of one angular step to offset the first camera by.
    """
    center = np.asarray(center, dtype=np.float64)
    cameras = []
    for k in range(count):
        angle = 2.0 * math.pi * (k + phase) / count
        offset = np.array(
            [capture.orbit_radius * math.cos(angle), capture.orbit_radius * math.sin(angle), capture.elevation]
        )
        cameras.append(look_at(center + offset, center, capture.focal, capture.width, capture.height))
    return cameras
