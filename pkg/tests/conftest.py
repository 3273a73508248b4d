from unittest.mock import patch

import pytest

from app.verification.models import RunConfig


@pytest.fixture
def run_config() -> RunConfig:
    return RunConfig()


@pytest.fixture(autouse=True)
def _patch_before_every_test():
    # Suites run in the test process, without worker pools
    with patch("app.verification.runner.settings.max_workers", 1):
        yield
