"""Configuration fixtures for unit tests."""

import json

import pytest

from blobalg.core.config import RunConfig


@pytest.fixture
def run_config(request):
    """Parameterized RunConfig.

    Args:
        request: Pytest request object that can contain overrides for any
            RunConfig field
    """
    overrides = getattr(request, "param", {})
    return RunConfig(**{"algebra": "blob", "n": 2, "field": "generic", **overrides})


@pytest.fixture
def config_file(tmp_path):
    """A JSON configuration file for b_3 at (l, m) = (5, 2)."""
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"algebra": "blob", "n": 3, "l": 5, "m": 2, "field": "cyclo"}))
    return path
