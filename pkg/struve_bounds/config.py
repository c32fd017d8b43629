# struve_bounds/config.py
import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import ValidationError

from struve_bounds.errors import ConfigError
from struve_bounds.models import EvalConfig

load_dotenv()

DEFAULT_LOG_LEVEL = "WARNING"


def _read(name, cast):
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return None
    try:
        return cast(raw.strip())
    except ValueError as exc:
        raise ConfigError(f"{name}={raw!r} is not a valid {cast.__name__}") from exc


def load_config():
    """Build an EvalConfig from STRUVE_REL_TOL, STRUVE_MAX_TERMS and STRUVE_X_MAX."""
    overrides = {
        "rel_tol": _read("STRUVE_REL_TOL", float),
        "max_terms": _read("STRUVE_MAX_TERMS", int),
        "x_max": _read("STRUVE_X_MAX", float),
    }
    try:
        return EvalConfig(**{k: v for k, v in overrides.items() if v is not None})
    except ValidationError as exc:
        raise ConfigError(str(exc)) from exc


@lru_cache(maxsize=1)
def get_config():
    return load_config()


def reset_config():
    """Forget the cached configuration so the next get_config() re-reads the environment."""
    get_config.cache_clear()


def log_settings():
    return os.getenv("STRUVE_LOG_LEVEL", DEFAULT_LOG_LEVEL), os.getenv("STRUVE_LOG_FILE") or None


def worker_count():
    workers = _read("STRUVE_WORKERS", int)
    if workers is None:
        return 1
    if workers < 1:
        raise ConfigError("STRUVE_WORKERS must be at least 1")
    return workers
