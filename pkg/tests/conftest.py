import os
import sys

SRC = os.path.join(os.path.dirname(__file__), "..", "src")
sys.path.insert(0, os.path.abspath(SRC))

import pytest

from cycbound import cyclic, nzl


@pytest.fixture(scope="session")
def example21():
    return cyclic.build_code(2, 21, (1, 3, 7, 9))


@pytest.fixture(scope="session")
def code65():
    return cyclic.build_code(2, 65, (1, 5))


@pytest.fixture(scope="session")
def spc5():
    return nzl.spc_locator(5, 2)


@pytest.fixture(scope="session")
def spc3():
    return nzl.spc_locator(3, 2)
