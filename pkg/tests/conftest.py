import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from qmcrystal.cartan import fundamental_weight  # noqa: E402
from qmcrystal.paths import build_crystal  # noqa: E402

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def g2():
    return build_crystal("G2", fundamental_weight("G2", 1))


@pytest.fixture(scope="session")
def f4():
    return build_crystal("F4", fundamental_weight("F4", 4))


@pytest.fixture(scope="session")
def e8():
    return build_crystal("E8", fundamental_weight("E8", 8))
