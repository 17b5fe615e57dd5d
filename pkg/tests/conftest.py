import pytest
from hypothesis import strategies as st

from orientcolor.graph import Multigraph

_criteria = {}


@st.composite
def multigraphs(draw, max_n=6, max_m=10, loops=True):
    n = draw(st.integers(1, max_n))
    vertex = st.integers(0, n - 1)
    pair = st.tuples(vertex, vertex)
    if not loops:
        pair = pair.filter(lambda e: e[0] != e[1])
        if n == 1:
            return Multigraph(1, ())
    edges = draw(st.lists(pair, max_size=max_m))
    return Multigraph(n, tuple(edges))


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    failed = call.excinfo is not None
    num = marker.args[0]
    _criteria[num] = _criteria.get(num, True) and not failed


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        status = "PASS" if _criteria[num] else "FAIL"
        terminalreporter.write_line(f"criterion {num}: {status}")
