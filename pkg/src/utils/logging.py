"""Logging utilities."""
import logging
import sys
from typing import Optional

from src.utils.settings import get_settings


def setup_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """
    Setup a logger with consistent formatting.

    Records go to stderr; stdout is reserved for the CLI's machine-readable output.

    Args:
        name: Logger name
        level: Log level (DEBUG, INFO, WARNING, ERROR, CRITICAL); falls back to the LOG_LEVEL setting

    Returns:
        Configured logger
    """
    logger = logging.getLogger(name)

    if not logger.handlers:
        handler = logging.StreamHandler(sys.stderr)
        formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        )
        handler.setFormatter(formatter)
        logger.addHandler(handler)
        logger.propagate = False

    log_level = level or get_settings().log_level
    logger.setLevel(getattr(logging, log_level.upper(), logging.INFO))

    return logger
