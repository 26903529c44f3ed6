"""Logging setup."""

import logging

from rich.console import Console
from rich.logging import RichHandler

_CONFIGURED = False


def setup_logging(level: str = "WARNING") -> None:
    """Route eigenid loggers through rich on stderr. Safe to call repeatedly."""
    global _CONFIGURED

    logger = logging.getLogger("eigenid")
    logger.setLevel(level.upper())

    if not _CONFIGURED:
        handler = RichHandler(
            console=Console(stderr=True),
            show_path=False,
            rich_tracebacks=True,
        )
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        logger.addHandler(handler)
        _CONFIGURED = True
