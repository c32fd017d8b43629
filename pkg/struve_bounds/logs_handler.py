# struve_bounds/logs_handler.py
import logging

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level="WARNING", filename=None):
    """
    Set up the root logger once for CLI and script entry points.
    Library modules only call logging.getLogger(__name__).
    """
    if isinstance(level, str):
        numeric = logging.getLevelName(level.upper())
        if not isinstance(numeric, int):
            numeric = logging.WARNING
    else:
        numeric = int(level)

    kwargs = {"level": numeric, "format": LOG_FORMAT, "force": True}
    if filename:
        kwargs["filename"] = filename
    logging.basicConfig(**kwargs)
    return logging.getLogger("struve_bounds")


def log_error(message, *args):
    logging.getLogger("struve_bounds").error(message, *args)
