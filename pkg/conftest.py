"""
Shared pytest setup: flat packages importable from the repository root, session-wide fixtures
"""
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from lattice.tamari import build_poset  # noqa: E402
from series.solver import solve_functional_equation  # noqa: E402


@pytest.fixture(scope="session")
def t4():
    """Classical Tamari lattice of size 4"""
    return build_poset(1, 4)


@pytest.fixture(scope="session")
def t3_m2():
    """T_3^(2)"""
    return build_poset(2, 3)


@pytest.fixture(scope="session")
def solved_m1():
    """F(t; x, y) for m = 1 up to t^5"""
    return solve_functional_equation(1, 5)


@pytest.fixture(scope="session")
def solved_m2():
    """F(t; x, y) for m = 2 up to t^3"""
    return solve_functional_equation(2, 3)


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    """Cache directory picked up through the environment"""
    directory = tmp_path / "cache"
    monkeypatch.setenv("TAMARI_CACHE_DIR", str(directory))
    return directory
