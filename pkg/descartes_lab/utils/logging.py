import logging
import sys
from logging import Logger
from typing import Optional, TextIO

LOGGER_NAME = "descartes_lab"
LOG_FORMAT = "[%(asctime)s] [%(levelname)s] %(name)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def resolve_level(level: int | str, verbose: bool = False) -> int:
    """Numeric level for a name such as "info"; ``verbose`` always means DEBUG."""

    if verbose:
        return logging.DEBUG
    if isinstance(level, int):
        return level
    resolved = logging.getLevelName(level.strip().upper())
    if not isinstance(resolved, int):
        raise ValueError(f"Unknown log level: {level}")
    return resolved


def configure_logging(
    level: int | str = logging.INFO,
    *,
    verbose: bool = False,
    stream: Optional[TextIO] = None,
) -> Logger:
    # stdout is reserved for JSON and CSV output
    logger = logging.getLogger(LOGGER_NAME)
    if not logger.handlers:
        handler = logging.StreamHandler(stream or sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))
        logger.addHandler(handler)
    logger.setLevel(resolve_level(level, verbose))
    return logger
