"""Named scene presets."""

from nexf.models.scene import PrimitiveSpec, TextureSpec

BRIGHT_RADIANCE = 8.0
DIM_RADIANCE = 0.05
DENSITY = 4.0
# colored so that every surface point has nonzero saturation
TINT = (1.0, 0.55, 0.25)


def two_region() -> list[PrimitiveSpec]:
    """Unit box centered at the origin, split at x = 0 into a bright and a dim emitter."""
    texture = TextureSpec(kind="sine", frequency=1.0, amplitude=0.25)
    return [
        PrimitiveSpec(
            shape="box",
            center=(-0.25, 0.0, 0.0),
            size=(0.25, 0.5, 0.5),
            density=DENSITY,
            radiance=tuple(BRIGHT_RADIANCE * c for c in TINT),  # type: ignore[arg-type]
            texture=texture,
        ),
        PrimitiveSpec(
            shape="box",
            center=(0.25, 0.0, 0.0),
            size=(0.25, 0.5, 0.5),
            density=DENSITY,
            radiance=tuple(DIM_RADIANCE * c for c in TINT),  # type: ignore[arg-type]
            texture=texture,
        ),
    ]


PRESETS = {"two_region": two_region}


def preset_primitives(name: str) -> list[PrimitiveSpec]:
    """Primitives of a named preset."""
    try:
        return PRESETS[name]()
    except KeyError:
        raise ValueError(f"unknown scene preset: {name}") from None
