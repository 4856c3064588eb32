import sys

import pytest

from symcontain import default_config


@pytest.fixture(scope="session")
def ac3():
    return default_config("ac", 3)


@pytest.fixture(scope="session")
def ac4():
    return default_config("ac", 4)


@pytest.fixture(scope="session")
def nci1():
    return default_config("nci", 1)


@pytest.fixture(scope="session")
def nci2():
    return default_config("nci", 2)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
