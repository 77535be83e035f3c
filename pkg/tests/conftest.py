from itertools import combinations

import pytest
from hypothesis import settings, strategies as st

from crthrottle.enumeration import generate_connected
from crthrottle.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@st.composite
def connected_graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    return draw(st.sampled_from(generate_connected(n)))


@pytest.fixture(scope="session")
def connected_upto6():
    return [g for n in range(1, 7) for g in generate_connected(n)]


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
