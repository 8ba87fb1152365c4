import sys

import numpy as np
import pytest

from golay_hd.core import build_g23, build_g24


@pytest.fixture(scope="session")
def g23():
    return build_g23()


@pytest.fixture(scope="session")
def g24():
    return build_g24()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
