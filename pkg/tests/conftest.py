import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from minkowski2d import euclidean_plane, lp_plane, named_plane, polygon_plane  # noqa: E402
from minkowski2d.specs import SQUARE  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def euclid():
    return euclidean_plane()


@pytest.fixture(scope="session")
def square():
    return polygon_plane(SQUARE)


@pytest.fixture(scope="session")
def hexagon():
    return named_plane("hexagon")


@pytest.fixture(scope="session")
def l1():
    return lp_plane(1)


@pytest.fixture(scope="session")
def l4():
    return lp_plane(4)


@pytest.fixture(scope="session")
def glue3():
    return named_plane("glue:3")


@pytest.fixture(scope="session")
def glue15():
    return named_plane("glue:1.5")


ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance(request):
    """Record one PASS/FAIL line for an acceptance criterion."""
    lines = request.config.stash.setdefault(ACCEPTANCE_KEY, [])

    def record(number, title, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title}: {detail}"
        lines.append((number, line))
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(lines):
            terminalreporter.write_line(line)
