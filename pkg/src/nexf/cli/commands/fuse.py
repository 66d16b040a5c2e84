"""Fuse command for nexf CLI."""

from pathlib import Path

import typer

from nexf.cli.common import exit_on_error, load_fusion_config
from nexf.cli.output import display_success
from nexf.evaluation.fusion import mertens_fuse
from nexf.scene.imageio import read_ppm, write_ppm
from nexf.utils.logger import LoggerMixin


class FuseCommand(LoggerMixin):
    """Fuse an exposure stack into one image."""

    def fuse(self, images: list[Path], config: Path | None, out: Path) -> None:
        """Mertens-fuse PPM images.

        Args:
            images: Exposure stack, at least two PPM files.
            config: Run configuration whose ``fusion`` section is used.
            out: Output PPM path.
        """
        with exit_on_error("Fusion"):
            fusion = load_fusion_config(config)
            fused = mertens_fuse([read_ppm(path) for path in images], fusion)
            out.parent.mkdir(parents=True, exist_ok=True)
            write_ppm(out, fused)
            self.log_info("Fused exposure stack", images=len(images))
            display_success(f"Fused {len(images)} images into {out}")


# Create command instance
_fuse_cmd = FuseCommand()


def fuse(
    images: list[Path] = typer.Argument(..., help="PPM images of one view at different exposures"),
    config: Path | None = typer.Option(None, "--config", help="Run configuration JSON"),
    out: Path = typer.Option(Path("fused.ppm"), "--out", help="Output PPM"),
) -> None:
    """Fuse an exposure stack into one image."""
    _fuse_cmd.fuse(images, config, out)
