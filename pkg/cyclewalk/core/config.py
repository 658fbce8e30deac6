"""
Configuration loader for cyclewalk.
Loads settings from settings.toml, environment overrides, and defaults.
"""
from __future__ import annotations

import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import dataclass
from pathlib import Path


BUNDLED_CONFIG = Path(__file__).resolve().parents[1] / "config" / "settings.toml"
DEFAULT_STEPS = 10_000
DEFAULT_ANGLE_TOLERANCE = 1e-9
DEFAULT_BLOCK_SIZE = 512


@dataclass
class Settings:
    data_dir: Path = Path("data")
    log_level: str = "INFO"
    default_steps: int = DEFAULT_STEPS
    default_alpha: float = 1.0
    default_points: int = 11
    angle_tolerance: float = DEFAULT_ANGLE_TOLERANCE
    block_size: int = DEFAULT_BLOCK_SIZE
    workers: int = 1


def _config_file(config_path: Path | None) -> Path:
    if config_path is not None:
        return config_path
    local = Path("config/settings.toml")
    return local if local.exists() else BUNDLED_CONFIG


def load_settings(config_path: Path | None = None) -> Settings:
    config_file = _config_file(config_path)
    data = {}
    if config_file.exists():
        with config_file.open("rb") as f:
            data = tomllib.load(f)

    data_dir = Path(os.getenv("CYCLEWALK_DATA_DIR", data.get("data_dir", "data")))
    log_level = os.getenv("CYCLEWALK_LOG_LEVEL", data.get("log_level", "INFO"))
    default_steps = int(os.getenv("CYCLEWALK_STEPS", data.get("default_steps", DEFAULT_STEPS)))
    default_alpha = float(os.getenv("CYCLEWALK_ALPHA", data.get("default_alpha", 1.0)))
    default_points = int(os.getenv("CYCLEWALK_POINTS", data.get("default_points", 11)))
    angle_tolerance = float(
        os.getenv("CYCLEWALK_ANGLE_TOLERANCE", data.get("angle_tolerance", DEFAULT_ANGLE_TOLERANCE))
    )
    block_size = int(os.getenv("CYCLEWALK_BLOCK_SIZE", data.get("block_size", DEFAULT_BLOCK_SIZE)))
    workers = int(os.getenv("CYCLEWALK_WORKERS", data.get("workers", 1)))

    return Settings(
        data_dir=data_dir,
        log_level=log_level,
        default_steps=default_steps,
        default_alpha=default_alpha,
        default_points=default_points,
        angle_tolerance=angle_tolerance,
        block_size=max(1, block_size),
        workers=max(1, workers),
    )
