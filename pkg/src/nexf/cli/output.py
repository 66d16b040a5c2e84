"""Rich output formatting utilities for CLI."""

import math

from rich.console import Console
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn, TimeElapsedColumn
from rich.table import Table

from nexf.models import DatasetManifest, EvalReport, LossRecord

console = Console()


def _db(value: float) -> str:
    return "∞" if math.isinf(value) else f"{value:.2f}"


def display_manifest_summary(manifest: DatasetManifest) -> None:
    """Display dataset summary in formatted table.

    Args:
        manifest: Manifest to summarize.
    """
    table = Table(title="Dataset", show_header=True, header_style="bold cyan")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="green")

    table.add_row("Train views", str(len(manifest.train_views)))
    table.add_row("Test cameras", str(len(manifest.test_stacks())))
    table.add_row("Test images", str(len(manifest.test_views)))
    table.add_row("Exposure set", ", ".join(f"{e:g}" for e in manifest.exposure_set))
    table.add_row("Mean train exposure", f"{manifest.mean_train_exposure:.4g}")

    console.print(table)


def display_training_summary(record: LossRecord | None, psnr: float | None, iterations: int) -> None:
    """Display final training losses.

    Args:
        record: Last logged losses, or None when no iteration ran.
        psnr: Training PSNR implied by the last photometric loss.
        iterations: Total iterations completed.
    """
    table = Table(title="Training", show_header=True, header_style="bold cyan")
    table.add_column("Metric", style="cyan")
    table.add_column("Value", style="green")

    table.add_row("Iterations", str(iterations))
    if record is not None:
        table.add_row("L_f", f"{record.loss_f:.6g}")
        table.add_row("L_e", f"{record.loss_e:.6g}")
        table.add_row("Total", f"{record.total:.6g}")
        table.add_row("Learning rate", f"{record.lr:.3g}")
    if psnr is not None:
        table.add_row("Batch PSNR (dB)", _db(psnr))

    console.print(table)


def display_eval_report(report: EvalReport) -> None:
    """Display evaluation metrics per test camera and on average.

    Args:
        report: Evaluation report.
    """
    table = Table(title="Evaluation", show_header=True, header_style="bold cyan")
    table.add_column("Camera", style="cyan")
    table.add_column("NExF PSNR", style="green")
    table.add_column("NExF SSIM", style="green")
    table.add_column("Baseline PSNR", style="yellow")
    table.add_column("Baseline SSIM", style="yellow")

    for view in report.views:
        table.add_row(
            str(view.camera_index),
            _db(view.nexf.psnr),
            f"{view.nexf.ssim:.4f}",
            _db(view.baseline.psnr),
            f"{view.baseline.ssim:.4f}",
        )
    table.add_row(
        "[bold]mean[/bold]",
        _db(report.nexf.psnr),
        f"{report.nexf.ssim:.4f}",
        _db(report.baseline.psnr),
        f"{report.baseline.ssim:.4f}",
    )

    console.print(table)

    gain_color = "green" if report.psnr_gain > 0 else "red"
    console.print(
        f"PSNR gain: [{gain_color}]{_db(report.psnr_gain)} dB[/{gain_color}]  "
        f"MSE reduction: {report.mse_reduction:.1%}"
    )
    if report.input_exposure_id is not None:
        console.print(f"Input exposures (ID): {_db(report.input_exposure_id.psnr)} dB")
    if report.input_exposure_ood is not None:
        console.print(f"Input exposures (OOD): {_db(report.input_exposure_ood.psnr)} dB")


def training_progress() -> Progress:
    """Create a progress bar for the training loop.

    Returns:
        Progress object writing to the shared console.
    """
    return Progress(
        TextColumn("[cyan]{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        TextColumn("{task.fields[loss]}"),
        TimeElapsedColumn(),
        console=console,
        transient=True,
    )


def display_success(message: str) -> None:
    """Display success message.

    Args:
        message: Success message to display.
    """
    console.print(f"[green]✓ {message}[/green]")


def display_error(message: str) -> None:
    """Display error message.

    Args:
        message: Error message to display.
    """
    console.print(f"[red]✗ {message}[/red]")


def display_info(message: str) -> None:
    """Display info message.

    Args:
        message: Info message to display.
    """
    console.print(f"[blue]ℹ {message}[/blue]")


def display_warning(message: str) -> None:
    """Display warning message.

    Args:
        message: Warning message to display.
    """
    console.print(f"[yellow]⚠ {message}[/yellow]")
