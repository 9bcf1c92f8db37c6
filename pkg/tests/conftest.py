import pytest
from hypothesis import settings

from ksink import DynamicNetwork, Instance

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@pytest.fixture
def single_edge():
    # u --(c=1, tau=4)-- v, two units at u
    return DynamicNetwork.from_edges([("u", "v", 1, 4)], {"u": 2})


@pytest.fixture
def star():
    return DynamicNetwork.from_edges(
        [("c", leaf, 1, 1) for leaf in ("a", "b", "d")], {"a": 1, "b": 1, "d": 1}
    )


@pytest.fixture
def midpoint():
    return Instance(DynamicNetwork.from_edges([("u", "v", 1, 2)], {"u": 1, "v": 1}), 1)


def pytest_terminal_summary(terminalreporter):
    module = __import__("sys").modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
