"""Simulated camera response: exposure, gamma curve and clipping."""

import numpy as np

from nexf.exceptions import InvalidExposureError

DEFAULT_GAMMA = 2.2


def capture_ldr(hdr: np.ndarray, exposure: float, gamma: float = DEFAULT_GAMMA) -> np.ndarray:
    """LDR capture of an HDR radiance image.

    Args:
        hdr: Nonnegative radiance, any shape.
        exposure: Exposure time Δt in seconds.
        gamma: Response exponent; output is ``(E * Δt) ** (1 / gamma)``.

    Returns:
        Float64 array of the same shape, clipped to [0, 1].

    Raises:
        InvalidExposureError: If ``exposure`` is not positive.
    """
    if not exposure > 0:
        raise InvalidExposureError(f"exposure must be > 0, got {exposure}", fields=["exposure"])
    if not gamma > 0:
        raise ValueError(f"gamma must be > 0, got {gamma}")
    irradiance = np.clip(np.asarray(hdr, dtype=np.float64) * exposure, 0.0, None)
    return np.clip(irradiance ** (1.0 / gamma), 0.0, 1.0)
