"""Train command for nexf CLI."""

from pathlib import Path

import typer

from nexf.cli.common import apply_overrides, exit_on_error, load_checkpoint, load_manifest, load_run_config
from nexf.cli.output import (
    display_info,
    display_success,
    display_training_summary,
    display_warning,
    training_progress,
)
from nexf.models import LossRecord
from nexf.training.trainer import Trainer, batch_psnr, write_loss_csv
from nexf.utils.logger import LoggerMixin

CHECKPOINT_NAME = "checkpoint.nexf"
LOSSES_NAME = "losses.csv"
TARGET_PSNR = 30.0


class TrainCommand(LoggerMixin):
    """Jointly train the radiance and exposure fields."""

    def train(
        self,
        config: Path | None,
        manifest: Path,
        out: Path | None,
        seed: int | None,
        iterations: int | None,
        resume: Path | None,
    ) -> None:
        """Train on a dataset and write a checkpoint and loss trace.

        Args:
            config: Run configuration JSON; defaults when None.
            manifest: Dataset manifest.
            out: Output directory; the configured ``output_dir`` when None.
            seed: Seed override.
            iterations: Iteration-count override.
            resume: Checkpoint to continue from.
        """
        with exit_on_error("Training"):
            run = apply_overrides(load_run_config(config), seed=seed, iterations=iterations)
            dataset = load_manifest(manifest)
            checkpoint = load_checkpoint(resume) if resume is not None else None
            out_dir = out or Path(run.output_dir)

            trainer = Trainer(
                dataset, manifest.parent, run.train, run.radiance_config, run.exposure, checkpoint
            )
            remaining = run.train.iterations - trainer.iteration
            display_info(f"Training {max(remaining, 0)} iterations on {len(trainer.rays)} rays...")

            with training_progress() as progress:
                task = progress.add_task("train", total=max(remaining, 0), loss="")

                def on_step(record: LossRecord) -> None:
                    progress.update(task, advance=1, loss=f"L={record.total:.4g}")

                result = trainer.run(on_step)

            out_dir.mkdir(parents=True, exist_ok=True)
            result.save(out_dir / CHECKPOINT_NAME)
            write_loss_csv(trainer.history, out_dir / LOSSES_NAME)

            last = trainer.history[-1] if trainer.history else None
            psnr = batch_psnr(last, run.train.rays_per_batch) if last is not None else None
            display_training_summary(last, psnr, result.iteration)
            if psnr is not None:
                if psnr >= TARGET_PSNR:
                    display_success(f"Batch PSNR {psnr:.2f} dB meets the {TARGET_PSNR:g} dB target")
                else:
                    display_warning(f"Batch PSNR {psnr:.2f} dB is below the {TARGET_PSNR:g} dB target")
            self.log_info("Training finished", iteration=result.iteration)
            display_success(f"Checkpoint written to {out_dir / CHECKPOINT_NAME}")


# Create command instance
_train_cmd = TrainCommand()


def train(
    manifest: Path = typer.Option(..., "--manifest", help="Dataset manifest JSON"),
    config: Path | None = typer.Option(None, "--config", help="Run configuration JSON"),
    out: Path | None = typer.Option(None, "--out", help="Output directory"),
    seed: int | None = typer.Option(None, "--seed", help="Override the configured seed"),
    iterations: int | None = typer.Option(None, "--iterations", help="Override the iteration count"),
    resume: Path | None = typer.Option(None, "--resume", help="Checkpoint to continue from"),
) -> None:
    """Jointly train the radiance and exposure fields."""
    _train_cmd.train(config, manifest, out, seed, iterations, resume)
