import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from core.ideals import Ideal  # noqa: E402
from core.polynomial import RingContext  # noqa: E402


@pytest.fixture
def R():
    """k[x,y,z,t] sobre Q con grevlex."""
    return RingContext.create("x y z t")


@pytest.fixture
def cubic(R):
    """Cúbica alabeada: menores 2x2 de [[x,y,z],[y,z,t]]."""
    return Ideal(R, ["x*z - y^2", "x*t - y*z", "y*t - z^2"], "cubic")


@pytest.fixture
def regcheck_home(tmp_path, monkeypatch):
    """Directorio de configuración aislado para Settings."""
    monkeypatch.setenv("REGCHECK_HOME", str(tmp_path))
    for key in (
        "DEFAULT_CHARACTERISTIC",
        "DEFAULT_ORDER",
        "SURFACE_CHARACTERISTIC",
        "SUITE_JOBS",
        "SUITE_TIMEOUT_FACTOR",
        "INCLUDE_SLOW",
        "PROGRESS",
        "LOG_LEVEL",
        "LOG_ROTATION_SIZE",
        "LOG_ROTATION_COUNT",
        "LOG_DIR",
        "OUTPUT_DIR",
    ):
        monkeypatch.delenv(key, raising=False)
    return tmp_path
