"""nexf CLI main application."""

import typer
from rich.console import Console

from nexf import __version__
from nexf.cli.commands.defaults import defaults
from nexf.cli.commands.evaluate import evaluate
from nexf.cli.commands.fuse import fuse
from nexf.cli.commands.render import expmap, render
from nexf.cli.commands.synth import synth
from nexf.cli.commands.train import train
from nexf.utils.config import configure_torch
from nexf.utils.logger import setup_logging

# Initialize Typer app
app = typer.Typer(
    name="nexf",
    help="Jointly train a radiance field and a 3D exposure field on multi-exposure captures",
    no_args_is_help=True,
)

# Initialize console
console = Console()


@app.callback()
def main() -> None:
    """Configure logging and torch before any command runs."""
    setup_logging()
    configure_torch()


# Register commands
app.command(name="synth", help="Render an analytic scene into a multi-exposure dataset")(synth)
app.command(name="train", help="Jointly train the radiance and exposure fields")(train)
app.command(name="render", help="Render a camera from a checkpoint")(render)
app.command(name="expmap", help="Export a camera's rendered exposure map")(expmap)
app.command(name="fuse", help="Fuse an exposure stack into one image")(fuse)
app.command(name="eval", help="Evaluate a checkpoint against exposure-fused targets")(evaluate)
app.command(name="defaults", help="Print the default run configuration")(defaults)


@app.command(name="version", help="Show nexf version")
def version() -> None:
    """Show nexf version."""
    console.print(f"[cyan]nexf[/cyan] [green]v{__version__}[/green]")


if __name__ == "__main__":
    app()
