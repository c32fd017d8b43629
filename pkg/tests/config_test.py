import os
import sys

import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from struve_bounds.config import get_config, load_config, log_settings, reset_config, worker_count
from struve_bounds.errors import ConfigError
from struve_bounds.logs_handler import configure_logging
from struve_bounds.models import EvalConfig


def test_defaults(clean_env):
    cfg = load_config()
    assert cfg == EvalConfig()
    assert cfg.max_terms == 500
    assert cfg.x_max == 600.0


def test_environment_overrides(clean_env):
    clean_env.setenv("STRUVE_MAX_TERMS", "120")
    clean_env.setenv("STRUVE_X_MAX", "300")
    cfg = load_config()
    assert cfg.max_terms == 120
    assert cfg.x_max == 300.0


@pytest.mark.parametrize("name,value", [
    ("STRUVE_MAX_TERMS", "many"),
    ("STRUVE_MAX_TERMS", "10"),
    ("STRUVE_REL_TOL", "0.5"),
    ("STRUVE_X_MAX", "-1"),
])
def test_invalid_values_raise(clean_env, name, value):
    clean_env.setenv(name, value)
    with pytest.raises(ConfigError):
        load_config()


def test_get_config_is_cached_until_reset(clean_env):
    first = get_config()
    clean_env.setenv("STRUVE_MAX_TERMS", "99")
    assert get_config() is first
    reset_config()
    assert get_config().max_terms == 99


def test_config_is_frozen():
    with pytest.raises(Exception):
        EvalConfig().max_terms = 10


def test_log_settings(clean_env):
    assert log_settings() == ("WARNING", None)
    clean_env.setenv("STRUVE_LOG_LEVEL", "DEBUG")
    clean_env.setenv("STRUVE_LOG_FILE", "run.log")
    assert log_settings() == ("DEBUG", "run.log")


def test_worker_count(clean_env):
    assert worker_count() == 1
    clean_env.setenv("STRUVE_WORKERS", "4")
    assert worker_count() == 4
    clean_env.setenv("STRUVE_WORKERS", "0")
    with pytest.raises(ConfigError):
        worker_count()


def test_configure_logging_level():
    logger = configure_logging("info")
    assert logger.name == "struve_bounds"
    assert logger.getEffectiveLevel() == 20
    configure_logging("WARNING")
