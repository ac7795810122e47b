import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from nonassoc.algebra import make_algebra, matrix_algebra
from nonassoc.fixtures import list_fixtures, load_fixture, materialize

# PASS/FAIL lines recorded by the acceptance tests, echoed after the run so
# they are visible even though pytest captures stdout of passing tests.
acceptance_lines: list = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def m2():
    return matrix_algebra(2)


@pytest.fixture(scope="session")
def m3():
    return matrix_algebra(3)


@pytest.fixture(scope="session")
def null2():
    return make_algebra(2, [])


@pytest.fixture(scope="session")
def f1_materialized():
    return materialize(load_fixture("F1"))


@pytest.fixture(scope="session")
def f1b_materialized():
    return materialize(load_fixture("F1b"))


@pytest.fixture(scope="session")
def all_materialized():
    return {name: materialize(load_fixture(name)) for name in list_fixtures()}
