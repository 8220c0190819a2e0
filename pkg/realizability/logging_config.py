"""Logging setup for the realize command.

Library modules only create ``logging.getLogger(__name__)`` loggers; the
command line decides the level and the handler here.
"""

from __future__ import annotations

import logging
import sys

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"
DEFAULT_LOG_LEVEL = logging.WARNING

_VALID_LOG_LEVELS = frozenset({"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"})


def _resolve_log_level(debug_flag: bool, configured: str | None = None) -> int:
    """Resolve the effective log level.

    Priority: --debug > configured level name > WARNING.
    Unknown level names fall back to WARNING.
    """
    if debug_flag:
        return logging.DEBUG
    name = (configured or "").strip().upper()
    if name in _VALID_LOG_LEVELS:
        level: int = getattr(logging, name)
        return level
    return DEFAULT_LOG_LEVEL


def _setup_logging(level: int) -> None:
    """Route all records to stderr so stdout carries only command output."""
    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
        force=True,
    )
