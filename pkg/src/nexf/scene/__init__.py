"""Analytic ground-truth scenes, simulated captures and image files.

Dataset synthesis lives in :mod:`nexf.scene.dataset`.
"""

from nexf.scene.cameras import look_at, orbit_cameras
from nexf.scene.capture import capture_ldr
from nexf.scene.field import SceneField, eval_scene
from nexf.scene.imageio import read_pfm, read_ppm, write_pfm, write_ppm
from nexf.scene.presets import preset_primitives

__all__ = [
    "SceneField",
    "eval_scene",
    "capture_ldr",
    "look_at",
    "orbit_cameras",
    "read_pfm",
    "read_ppm",
    "write_pfm",
    "write_ppm",
    "preset_primitives",
]
