"""Defaults command for nexf CLI."""

from pathlib import Path

import typer

from nexf.cli.output import display_success
from nexf.models import RunConfig


def defaults(
    out: Path | None = typer.Option(None, "--out", help="Write to a file instead of stdout"),
) -> None:
    """Print the default run configuration as JSON."""
    text = RunConfig.default().model_dump_json(indent=2)
    if out is None:
        typer.echo(text)
        return
    out.write_text(text + "\n")
    display_success(f"Defaults written to {out}")
