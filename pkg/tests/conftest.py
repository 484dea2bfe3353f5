import pytest

from dtc.graph_core import Digraph, SimpleGraph, complete_digraph, double_directed, path_graph


def arcs(*pairs: str) -> frozenset:
    """arcs("ab", "dc") -> {("a","b"), ("d","c")}"""
    return frozenset((p[0], p[1]) for p in pairs)


@pytest.fixture
def g3() -> Digraph:
    return complete_digraph(3)


@pytest.fixture
def p4() -> SimpleGraph:
    return path_graph("abcd")


@pytest.fixture
def dp4(p4) -> Digraph:
    return double_directed(p4)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
