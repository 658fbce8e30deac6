import logging
from pathlib import Path

import pytest

from cyclewalk.core.config import BUNDLED_CONFIG, Settings, load_settings
from cyclewalk.core.errors import DomainError
from cyclewalk.core.logging_utils import resolve_level, setup_logging

ENV_VARS = (
    "CYCLEWALK_DATA_DIR",
    "CYCLEWALK_LOG_LEVEL",
    "CYCLEWALK_STEPS",
    "CYCLEWALK_ALPHA",
    "CYCLEWALK_POINTS",
    "CYCLEWALK_ANGLE_TOLERANCE",
    "CYCLEWALK_BLOCK_SIZE",
    "CYCLEWALK_WORKERS",
)


@pytest.fixture(autouse=True)
def clean_env(tmp_path, monkeypatch):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)


def test_bundled_defaults():
    assert BUNDLED_CONFIG.exists()
    settings = load_settings()
    assert settings == Settings()
    assert settings.default_steps == 10_000
    assert settings.angle_tolerance == 1e-9


def test_explicit_file(tmp_path):
    config = tmp_path / "custom.toml"
    config.write_text('default_steps = 250\nlog_level = "DEBUG"\nworkers = 4\n')
    settings = load_settings(config)
    assert settings.default_steps == 250
    assert settings.log_level == "DEBUG"
    assert settings.workers == 4
    assert settings.block_size == 512


def test_local_config_directory_wins(tmp_path):
    (tmp_path / "config").mkdir()
    (tmp_path / "config" / "settings.toml").write_text("default_points = 21\n")
    assert load_settings().default_points == 21


def test_environment_overrides(tmp_path, monkeypatch):
    config = tmp_path / "custom.toml"
    config.write_text("default_steps = 250\n")
    monkeypatch.setenv("CYCLEWALK_STEPS", "777")
    monkeypatch.setenv("CYCLEWALK_ALPHA", "0.25")
    monkeypatch.setenv("CYCLEWALK_DATA_DIR", str(tmp_path / "elsewhere"))
    settings = load_settings(config)
    assert settings.default_steps == 777
    assert settings.default_alpha == 0.25
    assert settings.data_dir == tmp_path / "elsewhere"


def test_worker_and_block_floors(monkeypatch):
    monkeypatch.setenv("CYCLEWALK_WORKERS", "0")
    monkeypatch.setenv("CYCLEWALK_BLOCK_SIZE", "-3")
    settings = load_settings()
    assert settings.workers == 1
    assert settings.block_size == 1


def test_missing_file_falls_back_to_defaults(tmp_path):
    assert load_settings(tmp_path / "absent.toml") == Settings()


def test_logging_creates_log_directory(tmp_path):
    settings = Settings(data_dir=tmp_path / "data")
    setup_logging(settings, "debug")
    assert (tmp_path / "data" / "logs").is_dir()
    assert isinstance(settings.data_dir, Path)


def test_log_level_names():
    assert resolve_level(" warning ") == logging.WARNING
    assert resolve_level("debug") == logging.DEBUG
    with pytest.raises(DomainError, match="unknown log level"):
        resolve_level("verbose")
