from importlib.resources import files

import pytest

from enriques_salem.salem import certify_salem, enumerate_salem, read_salem_file
from enriques_salem.sieve import DOLGACHEV, classify

DATA = files("enriques_salem") / "data"


def data_path(name):
    return str(DATA / name)


@pytest.fixture(scope="session")
def dolgachev():
    return certify_salem(DOLGACHEV)


@pytest.fixture(scope="session")
def smallest_candidate():
    return certify_salem(read_salem_file(data_path("lambda135098.txt"))[0])


@pytest.fixture(scope="session")
def salem133(dolgachev):
    return enumerate_salem(10, dolgachev, inclusive=True)


@pytest.fixture(scope="session")
def report133(salem133):
    return classify(salem133)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
