"""Synth command for nexf CLI."""

from pathlib import Path

import typer

from nexf.cli.common import apply_overrides, exit_on_error, load_run_config
from nexf.cli.output import display_info, display_manifest_summary, display_success
from nexf.scene.dataset import MANIFEST_NAME, synthesize
from nexf.utils.logger import LoggerMixin


class SynthCommand(LoggerMixin):
    """Render an analytic scene into a multi-exposure dataset."""

    def synth(self, config: Path | None, out: Path | None, seed: int | None) -> None:
        """Synthesize a dataset.

        Args:
            config: Run configuration JSON; defaults when None.
            out: Dataset directory; ``<output_dir>/data`` when None.
            seed: Seed override.
        """
        with exit_on_error("Synthesis"):
            run = apply_overrides(load_run_config(config), seed=seed)
            out_dir = out or Path(run.output_dir) / "data"
            display_info(f"Rendering scene '{run.scene.name}' to {out_dir}...")
            self.log_info("Synthesizing dataset", scene=run.scene.name, seed=run.seed)
            manifest = synthesize(run, out_dir)
            display_manifest_summary(manifest)
            display_success(f"Manifest written to {out_dir / MANIFEST_NAME}")


# Create command instance
_synth_cmd = SynthCommand()


def synth(
    config: Path | None = typer.Option(None, "--config", help="Run configuration JSON"),
    out: Path | None = typer.Option(None, "--out", help="Dataset output directory"),
    seed: int | None = typer.Option(None, "--seed", help="Override the configured seed"),
) -> None:
    """Render an analytic scene into a multi-exposure dataset."""
    _synth_cmd.synth(config, out, seed)
