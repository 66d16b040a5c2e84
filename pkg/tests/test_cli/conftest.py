"""Fixtures for CLI tests: a config file, a synthesized dataset and a trained run."""

from pathlib import Path

import pytest
from typer.testing import CliRunner

from nexf.cli.main import app
from nexf.models import RunConfig

runner = CliRunner()


@pytest.fixture
def config_file(tmp_path: Path, toy_run_config: RunConfig) -> Path:
    """Toy run configuration written to JSON."""
    path = tmp_path / "run.json"
    path.write_text(toy_run_config.model_dump_json(indent=2))
    return path


@pytest.fixture
def cli_dataset(tmp_path: Path, config_file: Path) -> Path:
    """Manifest path of a dataset synthesized through the CLI."""
    out = tmp_path / "data"
    result = runner.invoke(app, ["synth", "--config", str(config_file), "--out", str(out)])
    assert result.exit_code == 0, result.output
    return out / "manifest.json"


@pytest.fixture
def cli_checkpoint(tmp_path: Path, config_file: Path, cli_dataset: Path) -> Path:
    """Checkpoint path of a short training run through the CLI."""
    out = tmp_path / "run"
    result = runner.invoke(
        app, ["train", "--manifest", str(cli_dataset), "--config", str(config_file), "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    return out / "checkpoint.nexf"
