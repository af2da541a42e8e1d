import pytest

from dpdom.distance import DistanceOracle
from dpdom.graph import build_cycle, build_path, strong_product


def torus(m, n):
    return strong_product(build_cycle(m), build_cycle(n))


def grid(m, n):
    return strong_product(build_path(m), build_path(n))


@pytest.fixture(scope="session")
def c11x11():
    g = torus(11, 11)
    return g, DistanceOracle(g)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
