"""PFM (HDR) and binary PPM (LDR) image files.

Images are float64 arrays of shape (H, W, C), row 0 at the top. PFM stores rows
bottom to top as little-endian float32 with scale -1.0; PPM is P6 with maxval 255.
"""

import re
from pathlib import Path

import numpy as np

from nexf.exceptions import ImageFormatError

_PPM_HEADER = re.compile(rb"\AP6\s+(?:#[^\n]*\n\s*)*(\d+)\s+(?:#[^\n]*\n\s*)*(\d+)\s+(?:#[^\n]*\n\s*)*(\d+)\s")


def write_pfm(path: Path, image: np.ndarray) -> None:
    """Write an (H, W, 3) or (H, W, 1) float image."""
    image = np.asarray(image)
    if image.ndim == 2:
        image = image[..., None]
    if image.ndim != 3 or image.shape[2] not in (1, 3):
        raise ImageFormatError(f"PFM needs 1 or 3 channels, got shape {image.shape}")
    height, width, channels = image.shape
    tag = b"PF" if channels == 3 else b"Pf"
    header = tag + f"\n{width} {height}\n-1.0\n".encode("ascii")
    body = np.ascontiguousarray(np.flipud(image), dtype="<f4").tobytes()
    path.write_bytes(header + body)


def read_pfm(path: Path) -> np.ndarray:
    """Read a PFM file as a float64 (H, W, C) array."""
    raw = path.read_bytes()
    lines = raw.split(b"\n", 3)
    if len(lines) < 4 or lines[0] not in (b"PF", b"Pf"):
        raise ImageFormatError(f"{path}: not a PFM file")
    channels = 3 if lines[0] == b"PF" else 1
    try:
        width, height = (int(v) for v in lines[1].split())
        scale = float(lines[2])
    except ValueError as e:
        raise ImageFormatError(f"{path}: malformed PFM header") from e
    dtype = "<f4" if scale < 0 else ">f4"
    count = width * height * channels
    if len(lines[3]) < 4 * count:
        raise ImageFormatError(f"{path}: truncated PFM data")
    data = np.frombuffer(lines[3], dtype=dtype, count=count).reshape(height, width, channels)
    return np.flipud(data).astype(np.float64)


def to_bytes(image: np.ndarray) -> np.ndarray:
    """Quantize [0, 1] values to uint8, rounding half up."""
    return np.floor(np.clip(np.asarray(image, dtype=np.float64), 0.0, 1.0) * 255.0 + 0.5).astype(np.uint8)


def write_ppm(path: Path, image: np.ndarray) -> None:
    """Write an (H, W, 3) image in [0, 1] as binary PPM."""
    image = np.asarray(image)
    if image.ndim != 3 or image.shape[2] != 3:
        raise ImageFormatError(f"PPM needs shape (H, W, 3), got {image.shape}")
    height, width, _ = image.shape
    path.write_bytes(f"P6\n{width} {height}\n255\n".encode("ascii") + to_bytes(image).tobytes())


def read_ppm(path: Path) -> np.ndarray:
    """Read a binary PPM as a float64 (H, W, 3) array in [0, 1]."""
    raw = path.read_bytes()
    match = _PPM_HEADER.match(raw)
    if match is None:
        raise ImageFormatError(f"{path}: not a binary PPM file")
    width, height, maxval = (int(v) for v in match.groups())
    if maxval != 255:
        raise ImageFormatError(f"{path}: unsupported maxval {maxval}")
    body = raw[match.end() :]
    if len(body) < width * height * 3:
        raise ImageFormatError(f"{path}: truncated PPM data")
    data = np.frombuffer(body, dtype=np.uint8, count=width * height * 3).reshape(height, width, 3)
    return data.astype(np.float64) / 255.0
