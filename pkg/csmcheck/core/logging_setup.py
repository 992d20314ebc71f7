import sys
from typing import Optional

from loguru import logger

from .config import settings


def setup_logging(level: Optional[str] = None, quiet: bool = False) -> None:
    """Configure the single stderr sink used by the library and the CLI."""
    logger.remove()
    effective = "WARNING" if quiet else (level or settings.LOG_LEVEL)
    logger.add(sys.stderr, format=settings.LOG_FORMAT, level=effective)
    logger.debug(f"Logging configured at level {effective}")
