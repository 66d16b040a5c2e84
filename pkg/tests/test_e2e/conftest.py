"""Shared fixtures for end-to-end runs."""

import pytest

from tests.test_e2e.pipeline import TrainedRun, acceptance_config, run_pipeline


@pytest.fixture(scope="module", params=[0, 1, 2], ids=lambda seed: f"seed{seed}")
def trained_run(request: pytest.FixtureRequest, tmp_path_factory: pytest.TempPathFactory) -> TrainedRun:
    """Full-length training run, one per seed."""
    seed: int = request.param
    return run_pipeline(acceptance_config(seed), tmp_path_factory.mktemp(f"run-{seed}"))
