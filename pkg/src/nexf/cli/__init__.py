"""nexf CLI interface."""

from nexf.cli.main import app

__all__ = ["app"]
