"""Render and expmap commands for nexf CLI."""

from pathlib import Path

import typer

from nexf.cli.common import exit_on_error, load_checkpoint, load_manifest, select_camera
from nexf.cli.output import display_info, display_success
from nexf.exceptions import ConfigValidationError
from nexf.models.dataset import Split
from nexf.scene.imageio import write_pfm, write_ppm
from nexf.training.rendering import RenderMode, export_exposure_map, render_view
from nexf.utils.logger import LoggerMixin


def _split(value: str) -> Split:
    if value not in ("train", "test"):
        raise ConfigValidationError(f"split must be 'train' or 'test', got {value!r}", fields=["split"])
    return value  # type: ignore[return-value]


class RenderCommand(LoggerMixin):
    """Render images and exposure maps from a checkpoint."""

    def render(
        self,
        checkpoint: Path,
        manifest: Path,
        camera: int,
        split: str,
        mode: str,
        per_pixel: bool,
        out: Path,
    ) -> None:
        """Render one camera to a PPM image.

        Args:
            checkpoint: Trained checkpoint.
            manifest: Manifest holding the camera.
            camera: Camera index within the split.
            split: ``train`` or ``test``.
            mode: ``nexf`` or ``exposure:<seconds>``.
            per_pixel: Condition each ray on its rendered exposure in ``nexf`` mode.
            out: Output PPM path.
        """
        with exit_on_error("Rendering"):
            render_mode = RenderMode.parse(mode)
            ckpt = load_checkpoint(checkpoint)
            view = select_camera(load_manifest(manifest), _split(split), camera)
            display_info(f"Rendering {split} camera {camera} in {render_mode} mode...")
            image = render_view(ckpt, view, render_mode, per_pixel=per_pixel)
            out.parent.mkdir(parents=True, exist_ok=True)
            write_ppm(out, image)
            self.log_info("Rendered view", camera=camera, mode=str(render_mode))
            display_success(f"Image written to {out}")

    def expmap(self, checkpoint: Path, manifest: Path, camera: int, split: str, out: Path) -> None:
        """Render one camera's exposure map to a single-channel PFM.

        Args:
            checkpoint: Trained checkpoint.
            manifest: Manifest holding the camera.
            camera: Camera index within the split.
            split: ``train`` or ``test``.
            out: Output PFM path.
        """
        with exit_on_error("Exposure map export"):
            ckpt = load_checkpoint(checkpoint)
            view = select_camera(load_manifest(manifest), _split(split), camera)
            exposure = export_exposure_map(ckpt, view)
            out.parent.mkdir(parents=True, exist_ok=True)
            write_pfm(out, exposure)
            display_info(f"Exposure range {float(exposure.min()):.4g} .. {float(exposure.max()):.4g}")
            display_success(f"Exposure map written to {out}")


# Create command instance
_render_cmd = RenderCommand()


def render(
    checkpoint: Path = typer.Option(..., "--checkpoint", help="Trained checkpoint"),
    manifest: Path = typer.Option(..., "--manifest", help="Dataset manifest JSON"),
    camera: int = typer.Option(0, "--camera", help="Camera index within the split"),
    split: str = typer.Option("test", "--split", help="train or test"),
    mode: str = typer.Option("nexf", "--mode", help="nexf or exposure:<seconds>"),
    per_pixel: bool = typer.Option(False, "--per-pixel", help="Per-ray exposure conditioning"),
    out: Path = typer.Option(Path("render.ppm"), "--out", help="Output PPM"),
) -> None:
    """Render a camera from a checkpoint."""
    _render_cmd.render(checkpoint, manifest, camera, split, mode, per_pixel, out)


def expmap(
    checkpoint: Path = typer.Option(..., "--checkpoint", help="Trained checkpoint"),
    manifest: Path = typer.Option(..., "--manifest", help="Dataset manifest JSON"),
    camera: int = typer.Option(0, "--camera", help="Camera index within the split"),
    split: str = typer.Option("test", "--split", help="train or test"),
    out: Path = typer.Option(Path("exposure.pfm"), "--out", help="Output PFM"),
) -> None:
    """Export a camera's rendered exposure map."""
    _render_cmd.expmap(checkpoint, manifest, camera, split, out)
