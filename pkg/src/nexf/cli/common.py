"""Input loading and error-to-exit-code mapping shared by the commands."""

import json
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path

import typer
from pydantic import ValidationError

from nexf.cli.output import display_error
from nexf.exceptions import ConfigValidationError, NexfError
from nexf.models.config import FusionConfig, RunConfig
from nexf.models.dataset import DatasetManifest, Split
from nexf.models.scene import Camera
from nexf.training.checkpoint import Checkpoint
from nexf.utils.logger import get_logger

logger = get_logger(__name__)

EXIT_VALIDATION = 1
EXIT_RUNTIME = 2


def _validation_error(source: Path, error: ValidationError) -> ConfigValidationError:
    fields = [".".join(str(part) for part in item["loc"]) or "<root>" for item in error.errors()]
    details = "; ".join(
        f"{field}: {item['msg']}" for field, item in zip(fields, error.errors(), strict=True)
    )
    return ConfigValidationError(f"{source}: {details}", fields=fields)


def _read_json(path: Path) -> object:
    if not path.exists():
        raise ConfigValidationError(f"File not found: {path}", fields=[str(path)])
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as e:
        raise ConfigValidationError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from e


def load_run_config(path: Path | None) -> RunConfig:
    """Run configuration from a JSON file, or the defaults when ``path`` is None.

    Raises:
        ConfigValidationError: With line/column for JSON syntax errors and dotted
            field locations for schema errors.
    """
    if path is None:
        return RunConfig.default()
    data = _read_json(path)
    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        raise _validation_error(path, e) from e


def load_fusion_config(path: Path | None) -> FusionConfig:
    """Fusion settings from a run configuration file's ``fusion`` section."""
    return load_run_config(path).fusion if path is not None else FusionConfig()


def load_manifest(path: Path) -> DatasetManifest:
    """Dataset manifest from JSON."""
    data = _read_json(path)
    try:
        return DatasetManifest.model_validate(data)
    except ValidationError as e:
        raise _validation_error(path, e) from e


def load_checkpoint(path: Path) -> Checkpoint:
    """Checkpoint from disk."""
    if not path.exists():
        raise ConfigValidationError(f"File not found: {path}", fields=[str(path)])
    return Checkpoint.load(path)


def select_camera(manifest: DatasetManifest, split: Split, index: int) -> Camera:
    """Camera ``index`` of a split (train: view order; test: camera index)."""
    if split == "train":
        views = manifest.train_views
        if not 0 <= index < len(views):
            raise ConfigValidationError(f"no training view {index}", fields=["camera"])
        return views[index].camera
    stacks = manifest.test_stacks()
    if index not in stacks:
        raise ConfigValidationError(f"no test camera {index}", fields=["camera"])
    return stacks[index][0].camera


@contextmanager
def exit_on_error(action: str) -> Iterator[None]:
    """Report errors and exit with 1 for invalid input, 2 for runtime failures."""
    try:
        yield
    except typer.Exit:
        raise
    except ConfigValidationError as e:
        display_error(f"Invalid input: {e.message}")
        raise typer.Exit(EXIT_VALIDATION) from e
    except NexfError as e:
        display_error(f"{action} failed: {e.message}")
        raise typer.Exit(EXIT_RUNTIME) from e
    except OSError as e:
        display_error(f"{action} failed: {e}")
        raise typer.Exit(EXIT_RUNTIME) from e
    except Exception as e:
        display_error(f"Unexpected error: {e}")
        logger.error(f"{action} error: {e}", exc_info=True)
        raise typer.Exit(EXIT_RUNTIME) from e


def apply_overrides(config: RunConfig, seed: int | None = None, iterations: int | None = None) -> RunConfig:
    """Re-validate ``config`` with command-line overrides applied."""
    data = config.model_dump(mode="json")
    if seed is not None:
        data["seed"] = seed
    if iterations is not None:
        data["train"]["iterations"] = iterations
    try:
        return RunConfig.model_validate(data)
    except ValidationError as e:
        raise _validation_error(Path("<command line>"), e) from e
