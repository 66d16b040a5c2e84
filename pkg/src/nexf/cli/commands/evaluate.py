"""Eval command for nexf CLI."""

from pathlib import Path

import typer

from nexf.cli.common import exit_on_error, load_checkpoint, load_fusion_config, load_manifest
from nexf.cli.output import display_eval_report, display_info, display_success
from nexf.evaluation.evaluator import Evaluator, write_metrics
from nexf.utils.logger import LoggerMixin


class EvalCommand(LoggerMixin):
    """Evaluate a checkpoint against exposure-fused targets."""

    def evaluate(self, checkpoint: Path, manifest: Path, config: Path | None, out: Path | None) -> None:
        """Score NExF and mean-exposure renders of every test camera.

        Args:
            checkpoint: Trained checkpoint.
            manifest: Manifest with full test exposure stacks.
            config: Run configuration whose ``fusion`` section is used.
            out: Directory for metrics files; the checkpoint's directory when None.
        """
        with exit_on_error("Evaluation"):
            ckpt = load_checkpoint(checkpoint)
            evaluator = Evaluator(load_manifest(manifest), manifest.parent, load_fusion_config(config))
            display_info("Fusing targets and rendering test cameras...")
            report = evaluator.evaluate(ckpt)
            display_eval_report(report)
            json_path, _ = write_metrics(report, out or checkpoint.parent)
            display_success(f"Metrics written to {json_path}")


# Create command instance
_eval_cmd = EvalCommand()


def evaluate(
    checkpoint: Path = typer.Option(..., "--checkpoint", help="Trained checkpoint"),
    manifest: Path = typer.Option(..., "--manifest", help="Dataset manifest JSON"),
    config: Path | None = typer.Option(None, "--config", help="Run configuration JSON"),
    out: Path | None = typer.Option(None, "--out", help="Directory for metrics.json and metrics.csv"),
) -> None:
    """Evaluate a checkpoint against exposure-fused targets."""
    _eval_cmd.evaluate(checkpoint, manifest, config, out)
