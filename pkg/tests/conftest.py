import sys

import pytest

from rank4om.realization import (
    bipyramid_points,
    chirotope_from_points,
    cyclic_points,
    interior_point_example,
    random_realizable,
    simplex_points,
)


@pytest.fixture(scope="session")
def bipyramid():
    return chirotope_from_points(bipyramid_points())


@pytest.fixture(scope="session")
def simplex():
    return chirotope_from_points(simplex_points())


@pytest.fixture(scope="session")
def cyclic():
    return {n: chirotope_from_points(cyclic_points(n)) for n in range(5, 10)}


@pytest.fixture(scope="session")
def interior():
    return chirotope_from_points(interior_point_example())


@pytest.fixture(scope="session")
def random_convex():
    return lambda n, seed: chirotope_from_points(random_realizable(n, seed))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.pytest_terminal_summary_lines():
        terminalreporter.write_line(line)
