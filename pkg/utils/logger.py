"""Logging utilities for fbplab."""

import sys
from typing import Optional

from loguru import logger as _root_logger

from config import LOGGING_CONFIG

_configured = False


def setup_logging(level: Optional[str] = None, log_file: Optional[str] = None):
    """Setup logging configuration.

    Args:
        level: Log level override
        log_file: Log file path override
    """
    global _configured
    config = LOGGING_CONFIG.copy()

    if level:
        config['level'] = level
    if log_file:
        config['log_file'] = log_file

    _root_logger.remove()
    _root_logger.add(sys.stderr, level=config['level'], format=config['format'])
    if config['log_file']:
        _root_logger.add(config['log_file'], level=config['level'], format=config['format'])
    _configured = True

    _root_logger.bind(name=__name__).debug(
        f"Logging configured - Level: {config['level']}, File: {config['log_file']}"
    )


def get_logger(name: str):
    """Get configured logger instance.

    Args:
        name: Logger name (usually __name__)

    Returns:
        loguru logger bound to ``name``
    """
    if not _configured:
        setup_logging()
    return _root_logger.bind(name=name)
