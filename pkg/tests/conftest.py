import sys
from pathlib import Path

import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from crossbound.graph import Graph


@pytest.fixture
def k4():
    return Graph.from_networkx(nx.complete_graph(4))


@pytest.fixture
def k5():
    return Graph.from_networkx(nx.complete_graph(5))


@pytest.fixture
def k6():
    return Graph.from_networkx(nx.complete_graph(6))


@pytest.fixture
def k33():
    return Graph.from_networkx(nx.complete_bipartite_graph(3, 3))


@pytest.fixture
def petersen():
    return Graph.from_networkx(nx.petersen_graph())


@pytest.fixture
def c4():
    return Graph(range(4), [(0, 1), (1, 2), (2, 3), (0, 3)])
