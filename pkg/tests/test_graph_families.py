import networkx as nx
import pytest

from domishold.errors import GraphInputError
from domishold.graph_core import find_induced, is_chordal, is_connected, split_partition
from domishold.graph_families import (
    FAMILY_NAMES,
    appendix71_graph,
    appendix_hypergraph,
    appendix_witness,
    f_pattern,
    forbidden_pattern,
    gchain_graph,
    generate_family,
    h_pattern,
    kstar_graph,
    known_structure,
    path_graph,
    random_block,
    random_chordal,
    random_connected,
    random_split,
    random_trivially_perfect,
    ssplit_graph,
)
from domishold.hypergraph import verify_summability_witness


@pytest.mark.parametrize("g, n, m", [
    (kstar_graph(4), 10, 18),
    (ssplit_graph(4), 8, 18),
    (gchain_graph(3), 14, 15),
    (appendix71_graph(), 71, 242),
    (h_pattern(1), 7, 10),
    (h_pattern(2), 8, 11),
    (f_pattern(1), 6, 9),
    (f_pattern(2), 6, 10),
])
def test_family_sizes(g, n, m):
    assert (g.n, g.m) == (n, m)


def test_h_pattern_layout():
    g = h_pattern(3)
    # x-diamond 중심 1, 2 / 경로 3-4-5 / z-diamond 중심 6, 7
    assert g.neighbors(0) == (1, 2)
    assert g.neighbors(4) == (3, 5)
    assert g.neighbors(8) == (6, 7)


def test_appendix_data():
    h = appendix_hypergraph()
    assert h.n == 9 and h.q == 62
    assert verify_summability_witness(h, appendix_witness())


def test_generate_family_by_name():
    assert generate_family("PATH", 6) == path_graph(6)
    assert generate_family("f2") == f_pattern(2)
    assert generate_family("h", 2) == h_pattern(2)
    assert set(FAMILY_NAMES) >= {"kstar", "ssplit", "gchain", "appendix71", "random_block"}


@pytest.mark.parametrize("family, params", [
    ("unknown", ()),
    ("cycle", ()),
    ("cycle", (2,)),
    ("kite", (3,)),
    ("path", ("x",)),
    ("path", (6.7,)),
    ("random_split", ("8.5",)),
])
def test_generate_family_errors(family, params):
    with pytest.raises(GraphInputError):
        generate_family(family, *params)


@pytest.mark.parametrize("family", ["random_chordal", "random_block", "random_trivially_perfect",
                                    "random_split", "random_connected"])
def test_random_families_are_seeded(family):
    assert generate_family(family, 12, seed=5) == generate_family(family, 12, seed=5)


@pytest.mark.parametrize("seed", range(20))
def test_random_family_properties(seed):
    chordal = random_chordal(10, seed)
    assert nx.is_chordal(chordal.to_networkx()) and is_connected(chordal)

    block = random_block(10, seed)
    assert is_chordal(block).verdict and is_connected(block)
    assert find_induced(block, forbidden_pattern("diamond")) is None

    trivially_perfect = random_trivially_perfect(10, seed)
    assert is_connected(trivially_perfect)
    assert find_induced(trivially_perfect, path_graph(4)) is None

    assert split_partition(random_split(10, seed)) is not None
    assert is_connected(random_split(10, seed))
    assert is_connected(random_connected(10, seed))


def test_known_structures():
    s = known_structure("example51")
    assert [int(w) for w in s.weights] == [1, 0, 1, 2, 0] and s.threshold == 3
    s = known_structure("kstar", 4)
    assert s.n == 10 and s.threshold == 3
    s = known_structure("gchain", 2)
    assert s.n == 10 and s.threshold == 9 and s.flavor == "cd"
    with pytest.raises(GraphInputError):
        known_structure("ssplit", 4)


def test_forbidden_pattern_names():
    assert forbidden_pattern("F1") == f_pattern(1)
    assert forbidden_pattern("H(4)") == h_pattern(4)
    with pytest.raises(GraphInputError):
        forbidden_pattern("F3")
