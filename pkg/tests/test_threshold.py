from fractions import Fraction

import pytest

from domishold.errors import CapExceededError, StructureError
from domishold.graph_families import appendix_hypergraph
from domishold.hypergraph import build_hypergraph, check_family_property, minimal_transversals, summability_search
from domishold.threshold import (
    WeightedStructure,
    brute_force_threshold,
    definitional_check,
    dual_separating_structure,
    integralize,
    is_threshold,
    maximal_false_points,
    strength_preorder,
    subset_weights,
    verify_refutation,
    verify_separating_structure,
    witness_from_incomparable_pair,
)


class TestWeightedStructure:
    def test_from_values(self):
        s = WeightedStructure.from_values([1, "1/2", 0], "3/2")
        assert s.weights == (Fraction(1), Fraction(1, 2), Fraction(0))
        assert s.threshold == Fraction(3, 2)
        assert s.total_weight() == Fraction(3, 2)
        assert s.weight_of([0, 1]) == Fraction(3, 2)
        assert not s.is_integral() and s.is_nonnegative()

    def test_unknown_flavor(self):
        with pytest.raises(StructureError):
            WeightedStructure.from_values([1], 1, flavor="weird")


class TestStrengthPreorder:
    def test_total(self):
        order = strength_preorder(build_hypergraph(3, [[0, 1], [0, 2]]))
        assert order.is_total
        assert order.classes == ((0,), (1, 2))

    def test_incomparable(self):
        order = strength_preorder(build_hypergraph(4, [[0, 1], [2, 3]]))
        assert not order.is_total
        assert order.incomparable == (0, 2)
        assert order.edges == ((2, 3), (0, 1))

    def test_witness_from_pair(self):
        h = build_hypergraph(4, [[0, 1], [2, 3]])
        witness = witness_from_incomparable_pair(h, 0, 2, (2, 3), (0, 1))
        assert witness.a == ((2, 3), (0, 1))
        assert witness.b == ((0, 3), (1, 2))


def test_maximal_false_points():
    assert maximal_false_points(build_hypergraph(2, [[0, 1]])) == [(0,), (1,)]
    assert maximal_false_points(build_hypergraph(4, [[0, 2], [1, 3]])) == [(0, 1), (0, 3), (1, 2), (2, 3)]


class TestIsThreshold:
    @pytest.mark.parametrize("edges, n", [
        ([[0, 1]], 2),
        ([[0, 1], [0, 2], [1, 2]], 3),
        ([[0], [1, 2]], 3),
        ([[0, 1], [0, 2]], 4),
    ])
    def test_threshold(self, edges, n):
        h = build_hypergraph(n, edges)
        report = is_threshold(h)
        assert report.verdict
        assert report.structure.is_integral()
        assert verify_separating_structure(h, report.structure)

    def test_two_disjoint_pairs(self):
        h = build_hypergraph(4, [[0, 1], [2, 3]])
        report = is_threshold(h)
        assert not report.verdict
        assert report.refutation.kind == "incomparable_pair"
        assert report.refutation.pair == (0, 2)
        assert verify_refutation(h, report.refutation)

    def test_no_edges(self):
        report = is_threshold(build_hypergraph(3, []))
        assert report.verdict
        assert report.structure.weights == (0, 0, 0) and report.structure.threshold == 0

    def test_empty_edge(self):
        h = build_hypergraph(3, [[], [0]])
        report = is_threshold(h)
        assert report.verdict and report.structure.degenerate
        assert verify_separating_structure(h, report.structure)

    def test_non_essential_vertex_weight_zero(self):
        report = is_threshold(build_hypergraph(4, [[0, 2]]))
        assert report.structure.weights[1] == 0 and report.structure.weights[3] == 0

    def test_appendix_needs_lp(self):
        h = appendix_hypergraph()
        assert strength_preorder(h).is_total
        report = is_threshold(h)
        assert not report.verdict
        assert report.refutation.kind == "infeasible_lp"
        assert verify_refutation(h, report.refutation)


class TestIntegralize:
    def test_common_denominator(self):
        s = integralize(WeightedStructure.from_values(["1/2", "1/3"], "1/6"))
        assert s.weights == (3, 2) and s.threshold == 1

    def test_checked_against_hypergraph(self):
        h = build_hypergraph(2, [[0, 1]])
        s = integralize(WeightedStructure.from_values(["1/2", "1/2"], "1/2"), h)
        assert s.weights == (1, 1) and s.threshold == 1
        with pytest.raises(StructureError):
            integralize(WeightedStructure.from_values(["1/2", "1/2"], 1), h)

    def test_negative_rejected(self):
        with pytest.raises(StructureError):
            integralize(WeightedStructure.from_values([-1], 0))


class TestDualStructure:
    def test_pair(self):
        h = build_hypergraph(2, [[0, 1]])
        s = WeightedStructure.from_values([1, 1], 1)
        dual = dual_separating_structure(s)
        assert dual.threshold == 0
        assert verify_separating_structure(minimal_transversals(h), dual)

    def test_constant_rejected(self):
        with pytest.raises(StructureError):
            dual_separating_structure(WeightedStructure.from_values([0, 0], 0))

    def test_random_threshold_duals(self, random_sperner):
        for seed in range(100):
            h = random_sperner(seed, 6, 6)
            report = is_threshold(h)
            if report.verdict:
                dual = dual_separating_structure(report.structure)
                assert verify_separating_structure(minimal_transversals(h), dual), h.edges


def test_subset_weights():
    assert subset_weights([Fraction(1), Fraction(2)]) == [0, 1, 2, 3]


def test_definitional_check():
    s = WeightedStructure.from_values([1, 1], 2)
    assert definitional_check(s, lambda mask: mask == 0b11)
    assert not definitional_check(s, lambda mask: mask != 0)


def test_verify_separating_structure_rejects():
    h = build_hypergraph(2, [[0, 1]])
    assert not verify_separating_structure(h, WeightedStructure.from_values([1, 1], 2))
    assert not verify_separating_structure(h, WeightedStructure.from_values([1], 1))


def test_brute_force_cap():
    h = build_hypergraph(4, [[0, 1], [2, 3]])
    with pytest.raises(CapExceededError):
        brute_force_threshold(h, cap=3)


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7, 8])
def test_against_brute_force(random_sperner, n):
    for seed in range(100):
        h = random_sperner(seed, n, 12)
        report = is_threshold(h)
        oracle = brute_force_threshold(h)
        assert report.verdict == oracle.verdict, h.edges
        if report.verdict:
            assert verify_separating_structure(h, report.structure)
            assert verify_separating_structure(h, integralize(oracle.structure))
        else:
            assert verify_refutation(h, report.refutation)


@pytest.mark.slow
@pytest.mark.parametrize("n", [6, 7, 8])
def test_structural_invariants(random_sperner, n):
    for seed in range(200):
        h = random_sperner(1000 + seed, n, 12)
        blocker = minimal_transversals(h)
        verdict = is_threshold(h).verdict
        assert is_threshold(blocker).verdict == verdict, h.edges
        if check_family_property(h, "one_sperner").holds:
            assert verdict, h.edges
        if verdict:
            assert blocker.q <= h.total_size(), h.edges
            assert summability_search(h, 2) is None, h.edges
            assert strength_preorder(h).is_total, h.edges
