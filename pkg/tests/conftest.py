import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from postlie import catalog


@pytest.fixture(scope="session")
def sl2():
    return catalog.get("sl2").algebra


@pytest.fixture(scope="session")
def sl3():
    return catalog.get("sl3").algebra


@pytest.fixture(scope="session")
def double():
    return catalog.get("sl2+sl2").algebra


@pytest.fixture(scope="session")
def r31():
    return catalog.get("r31").algebra


@pytest.fixture(scope="session")
def heisenberg():
    return catalog.get("heisenberg").algebra
