import logging
import sys
from typing import Optional, TextIO

from core.settings import RuntimeSettings


DEFAULT_LOG_FORMAT = "%(asctime)s | %(levelname)s | %(name)s | %(message)s"

# Chatty at INFO during property runs and worker pools.
QUIET_LOGGERS = ("hypothesis", "concurrent.futures")


def configure_logging(level: Optional[str] = None, stream: Optional[TextIO] = None) -> str:
    """
    Configure project-wide logging for an entry point.

    Logs go to stderr so that stdout carries only results.

    :param level: Optional log level string; falls back to LOG_LEVEL env or INFO.
    :param stream: Optional stream overriding stderr.
    :return: the resolved level name.
    """
    resolved_level = (level or RuntimeSettings().resolved_level()).upper()

    logging.basicConfig(
        level=resolved_level,
        format=DEFAULT_LOG_FORMAT,
        stream=stream or sys.stderr,
    )

    for noisy_logger in QUIET_LOGGERS:
        logging.getLogger(noisy_logger).setLevel(logging.WARNING)
    return resolved_level
