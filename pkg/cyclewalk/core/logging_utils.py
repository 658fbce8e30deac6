"""
Logging setup for cyclewalk.
File handler only, so CSV/JSON written to stdout stays clean.
"""
from __future__ import annotations

import logging

from .config import Settings
from .errors import DomainError

LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def resolve_level(name: str) -> int:
    level_name = name.strip().upper()
    if level_name not in LEVELS:
        raise DomainError(f"unknown log level {name!r}; expected one of {', '.join(LEVELS)}")
    return getattr(logging, level_name)


def setup_logging(settings: Settings, level: str | None = None):
    level_no = resolve_level(level or settings.log_level)
    log_dir = settings.data_dir / "logs"
    log_dir.mkdir(parents=True, exist_ok=True)
    log_file = log_dir / "cyclewalk.log"

    logging.basicConfig(
        level=level_no,
        format="%(asctime)s %(levelname)s [%(name)s] %(message)s",
        handlers=[logging.FileHandler(log_file, encoding="utf-8")],
    )
    logging.getLogger(__name__).info(
        "Logging initialized at %s (steps=%d, block=%d, workers=%d)",
        log_file,
        settings.default_steps,
        settings.block_size,
        settings.workers,
    )
