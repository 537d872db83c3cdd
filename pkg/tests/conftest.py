import pytest

from tripants.explorer import explore_ball
from tripants.triarc import base_tri_arc

_acceptance = []


@pytest.fixture(scope="session")
def base():
    return base_tri_arc()


@pytest.fixture(scope="session")
def ball2(base):
    return explore_ball(base, 2)


@pytest.fixture(scope="session")
def ball3(base):
    return explore_ball(base, 3)


@pytest.fixture(scope="session")
def ball4(base):
    return explore_ball(base, 4)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
