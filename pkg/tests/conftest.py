import os
import sys

import pytest

# project root on the path so `struve_bounds` imports without installation
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from struve_bounds.config import reset_config
from struve_bounds.models import EvalConfig, Grid

STRUVE_VARS = (
    "STRUVE_REL_TOL",
    "STRUVE_MAX_TERMS",
    "STRUVE_X_MAX",
    "STRUVE_LOG_LEVEL",
    "STRUVE_LOG_FILE",
    "STRUVE_WORKERS",
)


@pytest.fixture
def clean_env(monkeypatch):
    """No STRUVE_* variables and a fresh cached config, before and after."""
    for name in STRUVE_VARS:
        monkeypatch.delenv(name, raising=False)
    reset_config()
    yield monkeypatch
    reset_config()


@pytest.fixture
def default_cfg():
    return EvalConfig()


@pytest.fixture
def small_grid():
    return Grid(
        nu_values=[-1.0, -0.5, 0.0, 0.5, 1.0, 2.5],
        x_values=[0.01, 0.5, 2.0, 8.0, 25.0],
        y_factors=[1.5, 3.0],
        y_cap=60.0,
    )
