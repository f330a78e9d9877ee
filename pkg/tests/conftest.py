import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rank2roots import System


@pytest.fixture
def h51():
    return System(5, 1)


@pytest.fixture
def h41():
    return System(4, 1)


@pytest.fixture
def h32():
    return System(3, 2)


@pytest.fixture
def h22():
    return System(2, 2)
