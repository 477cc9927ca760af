import pytest
from numpy import array, int64

from pygpa.graph.graphs import DirectedGraph


def _graph(n, edges):
    return DirectedGraph(n, array([e[0] for e in edges], dtype=int64), array([e[1] for e in edges], dtype=int64))


@pytest.fixture(scope='package')
def sink():
    return _graph(1, [])


@pytest.fixture(scope='package')
def loop():
    return _graph(1, [(0, 0)])


@pytest.fixture(scope='package')
def loop_exit():
    # edge 0 is the loop, edge 1 leaves it
    return _graph(2, [(0, 0), (0, 1)])


@pytest.fixture(scope='package')
def single_edge():
    return _graph(2, [(0, 1)])


@pytest.fixture(scope='package')
def two_sinks():
    # 1 <- 0 -> 2
    return _graph(3, [(0, 1), (0, 2)])


@pytest.fixture(scope='package')
def line():
    return _graph(3, [(0, 1), (1, 2)])


@pytest.fixture(scope='package')
def diamond():
    return _graph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])


@pytest.fixture(scope='package')
def parallel():
    return _graph(2, [(0, 1), (0, 1)])


@pytest.fixture(scope='package')
def two_cycle():
    # 0 <-> 1 with no exit, and an isolated sink 2
    return _graph(3, [(0, 1), (1, 0)])
