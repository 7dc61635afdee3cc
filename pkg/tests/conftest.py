import random

import pytest

from abduction.corpus import e1, e2, e5


@pytest.fixture
def E1():
    return e1()


@pytest.fixture
def E2():
    return e2()


@pytest.fixture
def E5():
    return e5()


@pytest.fixture
def rng():
    return random.Random(20240611)


def S(*names):
    return frozenset(names)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
