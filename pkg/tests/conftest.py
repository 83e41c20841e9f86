import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import lattice_pairs, named_chain3  # noqa: E402
from latticepoly import build_chain, build_diamond  # noqa: E402


@pytest.fixture(scope="session")
def pairs():
    return lattice_pairs()


@pytest.fixture(scope="session")
def chain2():
    return build_chain(2)


@pytest.fixture(scope="session")
def chain3():
    return named_chain3()


@pytest.fixture(scope="session")
def chain4():
    return build_chain(4)


@pytest.fixture(scope="session")
def diamond():
    return build_diamond()
