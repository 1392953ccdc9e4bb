import pytest

from domishold.errors import CapExceededError, HypergraphInputError
from domishold.graph_core import mask_of, members
from domishold.graph_families import appendix_hypergraph, appendix_witness, path_graph, star_graph
from domishold.hypergraph import (
    SummabilityWitness,
    build_hypergraph,
    check_family_property,
    is_transversal,
    minimal_transversals,
    neighborhood_hypergraph,
    restrict,
    sperner_reduce,
    split_incidence_graph,
    summability_search,
    verify_summability_witness,
)


def _brute_transversals(h):
    transversals = [mask for mask in range(1 << h.n) if all(mask & e for e in h.edge_masks)]
    minimal = [t for t in transversals if not any(s != t and s & ~t == 0 for s in transversals)]
    return sorted((members(t) for t in minimal), key=lambda s: (len(s), s))


C4_MCH = build_hypergraph(4, [[0, 2], [1, 3]])


class TestBuild:
    def test_canonical_order(self):
        h = build_hypergraph(3, [[1, 0], [0, 1], [2]])
        assert h.edges == ((2,), (0, 1))
        assert h.q == 2 and h.total_size() == 3

    def test_out_of_range(self):
        with pytest.raises(HypergraphInputError):
            build_hypergraph(2, [[0, 2]])

    def test_essential_and_contains(self):
        h = build_hypergraph(5, [[0, 1], [3]])
        assert h.essential_vertices() == (0, 1, 3)
        assert h.contains_edge([0, 1, 2])
        assert not h.contains_edge([0, 2])


def test_restrict():
    h = build_hypergraph(5, [[1, 3], [2, 4], [3]])
    assert restrict(h, (1, 3)).edges == ((1,), (0, 1))


def test_sperner_reduce():
    h = build_hypergraph(3, [[0], [0, 1], [1, 2]])
    assert sperner_reduce(h).edges == ((0,), (1, 2))


class TestFamilyProperties:
    def test_two_disjoint_pairs(self):
        h = build_hypergraph(5, [[1, 2], [3, 4]])
        result = check_family_property(h, "one_sperner")
        assert not result.holds
        assert result.pair == ((1, 2), (3, 4))
        assert check_family_property(h, "sperner").holds
        assert not check_family_property(h, "dually_sperner").holds

    def test_one_sperner(self):
        h = build_hypergraph(3, [[0, 1], [0, 2], [1, 2]])
        assert check_family_property(h, "one_sperner").holds
        assert check_family_property(h, "dually_sperner").holds

    def test_not_sperner(self):
        h = build_hypergraph(3, [[0], [0, 1]])
        assert check_family_property(h, "sperner").pair == ((0,), (0, 1))

    def test_unknown_property(self):
        with pytest.raises(HypergraphInputError):
            check_family_property(C4_MCH, "two_sperner")


class TestTransversals:
    def test_c4_blocker(self):
        assert minimal_transversals(C4_MCH).edges == ((0, 1), (0, 3), (1, 2), (2, 3))

    def test_blocker_exact(self):
        h = build_hypergraph(4, [[0, 1], [2, 3]])
        assert minimal_transversals(h).edges == ((0, 2), (0, 3), (1, 2), (1, 3))

    def test_constant_cases(self):
        assert minimal_transversals(build_hypergraph(3, [])).edges == ((),)
        assert minimal_transversals(build_hypergraph(3, [[]])).edges == ()

    def test_is_transversal(self):
        assert is_transversal(C4_MCH, [0, 1])
        assert not is_transversal(C4_MCH, [0, 2])

    def test_double_dual(self, random_sperner):
        for seed in range(50):
            h = random_sperner(seed, 6, 6)
            assert minimal_transversals(minimal_transversals(h)) == h

    def test_against_brute_force(self, random_sperner):
        for seed in range(200):
            h = random_sperner(seed, 7, 8)
            assert list(minimal_transversals(h).edges) == _brute_transversals(h), h.edges


class TestSummability:
    def test_c4_witness(self):
        witness = summability_search(C4_MCH, 2)
        assert witness is not None and witness.r == 2
        assert verify_summability_witness(C4_MCH, witness)

    def test_threshold_has_none(self):
        h = build_hypergraph(3, [[0, 1], [0, 2]])
        assert summability_search(h, 3) is None

    def test_cap(self):
        with pytest.raises(CapExceededError):
            summability_search(C4_MCH, 2, cap=1)

    def test_bad_k(self):
        with pytest.raises(HypergraphInputError):
            summability_search(C4_MCH, 4)

    def test_appendix_is_2_asummable(self):
        assert summability_search(appendix_hypergraph(), 2) is None

    @pytest.mark.slow
    def test_appendix_is_3_summable(self):
        h = appendix_hypergraph()
        witness = summability_search(h, 3)
        assert witness is not None and witness.r == 3
        assert verify_summability_witness(h, witness)

    def test_verify_rejects(self):
        h = appendix_hypergraph()
        w = appendix_witness()
        assert verify_summability_witness(h, w)
        swapped = SummabilityWitness(r=3, a=w.b, b=w.a)
        assert not verify_summability_witness(h, swapped)
        unbalanced = SummabilityWitness(r=2, a=((0, 2), (1, 3)), b=((0, 1), (2,)))
        assert not verify_summability_witness(C4_MCH, unbalanced)


def test_neighborhood_hypergraph():
    assert neighborhood_hypergraph(path_graph(4)).edges == ((1,), (2,))
    assert neighborhood_hypergraph(star_graph(3)).edges == ((0,), (1, 2, 3))


def test_split_incidence_graph():
    h = build_hypergraph(3, [[0, 1], [2]])
    g, labeling = split_incidence_graph(h)
    assert g.n == 5 and g.m == 6
    assert labeling == {3: (2,), 4: (0, 1)}
    assert g.neighbors(4) == (0, 1)
    with pytest.raises(HypergraphInputError):
        split_incidence_graph(build_hypergraph(2, [[]]))


def test_masks_match_edges():
    h = build_hypergraph(4, [[0, 3], [1]])
    assert h.edge_masks == (mask_of([1]), mask_of([0, 3]))
