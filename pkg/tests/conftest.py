"""공통 fixture: 소형 그래프, networkx atlas, 랜덤 하이퍼그래프 생성기"""

import networkx as nx
import numpy as np
import pytest

from domishold.graph_core import graph_from_networkx, is_connected
from domishold.graph_families import complete_graph, cycle_graph, example51_graph, kite_graph, path_graph
from domishold.hypergraph import build_hypergraph, sperner_reduce


@pytest.fixture
def c4():
    return cycle_graph(4)


@pytest.fixture
def p6():
    return path_graph(6)


@pytest.fixture
def k5():
    return complete_graph(5)


@pytest.fixture
def example51():
    return example51_graph()


@pytest.fixture
def kite():
    return kite_graph()


def _atlas(max_n, connected_only):
    graphs = []
    for nxg in nx.graph_atlas_g()[1:]:
        if nxg.number_of_nodes() > max_n:
            continue
        g = graph_from_networkx(nxg)
        if connected_only and not is_connected(g):
            continue
        graphs.append(g)
    return graphs


@pytest.fixture(scope="session")
def atlas_graphs():
    """정점 7개 이하 모든 그래프 (동형 대표)"""
    return _atlas(7, connected_only=False)


@pytest.fixture(scope="session")
def connected_atlas():
    """연결 그래프만, 최대 정점 수를 인수로 받는 함수"""
    graphs = _atlas(7, connected_only=True)
    return lambda max_n: [g for g in graphs if g.n <= max_n]


def _random_sperner(rng, n, max_q, allow_empty_edge=False):
    q = int(rng.integers(1, max_q + 1))
    edges = []
    for _ in range(q):
        size = int(rng.integers(0 if allow_empty_edge else 1, n + 1))
        edges.append(sorted(int(v) for v in rng.choice(n, size=size, replace=False)))
    return sperner_reduce(build_hypergraph(n, edges))


@pytest.fixture
def random_sperner():
    """(seed, n, max_q) → 빈 간선 없는 랜덤 Sperner 하이퍼그래프"""
    return lambda seed, n, max_q: _random_sperner(np.random.default_rng(seed), n, max_q)
