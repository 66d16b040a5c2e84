"""nexf CLI commands."""
