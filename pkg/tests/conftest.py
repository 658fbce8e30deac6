import numpy as np
import pytest

from cyclewalk.walk.state import WaveState


def random_state(sites: int, seed: int) -> WaveState:
    rng = np.random.default_rng(seed)
    amps = rng.normal(size=2 * sites) + 1j * rng.normal(size=2 * sites)
    return WaveState(sites, amps / np.linalg.norm(amps))


@pytest.fixture
def isolated_data_dir(tmp_path, monkeypatch):
    """Point the log directory at a temp dir so CLI runs leave no files behind."""
    monkeypatch.setenv("CYCLEWALK_DATA_DIR", str(tmp_path / "data"))
    monkeypatch.chdir(tmp_path)
    return tmp_path
