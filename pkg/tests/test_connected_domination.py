from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from domishold.connected_domination import (
    brute_force_cd,
    enumerate_min_cds,
    induced_diamonds,
    is_cd_mask,
    recognize_cd,
    recognize_hereditarily_cd,
    recognize_td,
    solve_wcds,
    verify_dominating,
    verify_structure,
)
from domishold.errors import CapExceededError, DisconnectedGraphError, GraphInputError
from domishold.graph_core import (
    add_universal_vertex,
    build_graph,
    find_induced,
    induced_subgraph,
    is_connected,
    is_induced_embedding,
    members,
)
from domishold.graph_families import (
    complete_graph,
    f_pattern,
    forbidden_pattern,
    gchain_graph,
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
    star_graph,
    two_k2_graph,
)
from domishold.hypergraph import (
    check_family_property,
    neighborhood_hypergraph,
    split_incidence_graph,
    summability_search,
)
from domishold.scenarios import brute_force_min_cds
from domishold.separators import cutset_hypergraph, minimal_cutsets
from domishold.threshold import WeightedStructure, is_threshold, verify_refutation


def _brute_wcds_cost(g, costs):
    return min(
        sum((Fraction(costs[v]) for v in members(mask)), Fraction(0))
        for mask in range(1, 1 << g.n)
        if is_cd_mask(g, mask)
    )


def _hereditarily_cd_by_definition(g):
    for mask in range(1, 1 << g.n):
        sub, _ = induced_subgraph(g, members(mask))
        if is_connected(sub) and not recognize_cd(sub).positive:
            return False
    return True


def _hereditarily_one_sperner(g):
    for mask in range(1, 1 << g.n):
        sub, _ = induced_subgraph(g, members(mask))
        if is_connected(sub) and not check_family_property(cutset_hypergraph(sub), "one_sperner").holds:
            return False
    return True


class TestVerifyDominating:
    def test_path_internal_vertices(self, p6):
        assert verify_dominating(p6, (1, 2, 3, 4), "cd")

    def test_c4(self, c4):
        assert verify_dominating(c4, (0, 1), "cd")
        assert not verify_dominating(c4, (0, 2), "cd")
        assert not verify_dominating(c4, (), "cd")

    def test_total(self):
        star = star_graph(3)
        assert verify_dominating(star, (0, 1), "td")
        assert not verify_dominating(star, (0,), "td")

    def test_unknown_mode(self, c4):
        with pytest.raises(GraphInputError):
            verify_dominating(c4, (0,), "xd")


class TestRecognizeCD:
    def test_c4_not_cd(self, c4):
        report = recognize_cd(c4)
        assert report.verdict == "not_cd" and not report.positive
        assert report.structure is None
        assert verify_refutation(report.hypergraph, report.refutation)

    def test_complete(self, k5):
        report = recognize_cd(k5)
        assert report.verdict == "cd" and report.degenerate
        assert report.structure.weights == (1,) * 5 and report.structure.threshold == 1
        assert verify_structure(k5, report.structure)

    def test_disconnected(self):
        report = recognize_cd(two_k2_graph())
        assert report.verdict == "cd" and report.degenerate
        assert report.structure.weights == (0,) * 4 and report.structure.threshold == 1
        assert verify_structure(two_k2_graph(), report.structure)

    def test_example51(self, example51):
        report = recognize_cd(example51)
        assert report.verdict == "cd"
        assert report.structure.is_integral()
        assert verify_structure(example51, report.structure)
        assert verify_structure(example51, known_structure("example51"))

    def test_path(self, p6):
        report = recognize_cd(p6)
        assert report.verdict == "cd"
        assert verify_structure(p6, report.structure)

    @pytest.mark.parametrize("n", [4, 5])
    def test_kstar_known_structure(self, n):
        g = kstar_graph(n)
        assert recognize_cd(g).verdict == "cd"
        assert verify_structure(g, known_structure("kstar", n), cap=g.n)

    def test_gchain_known_structure(self):
        g = gchain_graph(2)
        assert recognize_cd(g).verdict == "cd"
        assert verify_structure(g, known_structure("gchain", 2))

    def test_verify_structure_rejects(self, c4):
        wrong = WeightedStructure.from_values([1, 1, 1, 1], 2, flavor="cd")
        assert not verify_structure(c4, wrong)
        with pytest.raises(GraphInputError):
            verify_structure(c4, WeightedStructure.from_values([1, 1, 1, 1], 2))

    def test_verify_structure_cap(self):
        g = kstar_graph(5)
        with pytest.raises(CapExceededError):
            verify_structure(g, known_structure("kstar", 5), cap=10)

    def test_brute_force_cd(self, c4, example51):
        assert brute_force_cd(c4).verdict == "not_cd"
        report = brute_force_cd(example51)
        assert report.verdict == "cd"
        assert verify_structure(example51, report.structure)


class TestRecognizeTD:
    def test_path_not_td(self, p6):
        assert recognize_td(p6).verdict == "not_td"

    def test_star_td(self):
        g = star_graph(3)
        report = recognize_td(g)
        assert report.verdict == "td"
        assert verify_structure(g, report.structure)

    def test_isolated_vertex(self):
        report = recognize_td(build_graph(3, [(0, 1)]))
        assert report.verdict == "not_td" and report.degenerate


class TestHereditary:
    def test_c4_hole(self, c4):
        report = recognize_hereditarily_cd(c4)
        assert not report.verdict
        assert report.hole == (0, 1, 2, 3)

    def test_kstar_f2(self):
        g = kstar_graph(4)
        report = recognize_hereditarily_cd(g)
        assert not report.verdict and report.pattern_name == "F2"
        assert is_induced_embedding(g, f_pattern(2), report.embedding)

    @pytest.mark.parametrize("i", [1, 2])
    def test_small_h_patterns(self, i):
        g = h_pattern(i)
        report = recognize_hereditarily_cd(g)
        assert not report.verdict and report.pattern_name == f"H({i})"
        assert is_induced_embedding(g, h_pattern(i), report.embedding)

    @pytest.mark.parametrize("i", [3, 4, 6])
    def test_long_h_patterns(self, i):
        report = recognize_hereditarily_cd(h_pattern(i))
        assert not report.verdict
        assert report.pattern_name == f"H({i})"
        assert report.embedding == tuple(range(i + 6))

    def test_h_pattern_inside_larger_graph(self):
        # H(3) 에 경로와 무관한 펜던트 추가
        base = h_pattern(3)
        g = build_graph(base.n + 1, base.edges() + [(8, base.n)])
        report = recognize_hereditarily_cd(g)
        assert not report.verdict
        assert is_induced_embedding(g, forbidden_pattern(report.pattern_name), report.embedding)

    @pytest.mark.parametrize("g", [path_graph(6), complete_graph(5), ssplit_graph(5), forbidden_pattern("kite")])
    def test_positive(self, g):
        report = recognize_hereditarily_cd(g)
        assert report.verdict
        assert report.hole is None and report.embedding is None

    def test_induced_diamonds(self, kite):
        diamonds = induced_diamonds(kite)
        assert len(diamonds) == 1
        assert diamonds[0].centers == (1, 2) and diamonds[0].tips == (0, 3)


class TestEnumerateMinCds:
    def test_path(self, p6):
        assert enumerate_min_cds(p6) == [(1, 2, 3, 4)]

    def test_example51(self, example51):
        assert enumerate_min_cds(example51) == [(0, 3), (2, 3)]

    def test_complete(self, k5):
        assert enumerate_min_cds(k5) == [(v,) for v in range(5)]

    def test_gchain(self):
        assert len(enumerate_min_cds(gchain_graph(3))) == 2

    def test_ssplit(self):
        assert enumerate_min_cds(ssplit_graph(4)) == list(combinations(range(4), 2))

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            enumerate_min_cds(two_k2_graph())

    @pytest.mark.parametrize("n", [4, 5])
    def test_ssplit_against_brute_force(self, n):
        g = ssplit_graph(n)
        assert sorted(enumerate_min_cds(g)) == brute_force_min_cds(g)


class TestSolveWcds:
    def test_path_unit_costs(self, p6):
        solution = solve_wcds(p6, [1] * 6)
        assert solution.set == (1, 2, 3, 4) and solution.cost == 4
        assert solution.enumerated_count == 1

    def test_complete_cheapest_vertex(self):
        solution = solve_wcds(complete_graph(4), {0: 3, 1: 1, 2: 2, 3: 1})
        assert solution.set == (1,) and solution.cost == 1

    def test_ssplit(self):
        costs = [1, 2, 3, 4, 5] + [10] * 5
        solution = solve_wcds(ssplit_graph(5), costs)
        assert solution.set == (0, 1) and solution.cost == 3

    def test_rational_costs(self, example51):
        solution = solve_wcds(example51, ["1/2", 1, "1/3", 2, 0])
        assert solution.set == (2, 3) and solution.cost == Fraction(7, 3)

    def test_missing_cost(self, p6):
        with pytest.raises(GraphInputError):
            solve_wcds(p6, {0: 1})

    def test_negative_cost(self, p6):
        with pytest.raises(GraphInputError):
            solve_wcds(p6, [1, 1, -1, 1, 1, 1])


# ============================================================
# 오라클 / 성질 검사
# ============================================================

@pytest.mark.slow
def test_definitional_soundness(connected_atlas):
    for g in connected_atlas(7):
        report = recognize_cd(g)
        if report.positive:
            assert verify_structure(g, report.structure), g.edges()


@pytest.mark.slow
def test_recognize_cd_against_definitional_lp():
    for seed in range(200):
        n = 4 + seed % 6
        g = random_connected(n, seed, p=0.35)
        assert recognize_cd(g).verdict == brute_force_cd(g).verdict, (seed, g.edges())


@pytest.mark.slow
def test_enumeration_and_wcds_against_brute_force():
    rng = np.random.default_rng(7)
    for seed in range(200):
        n = 4 + seed % 9
        g = random_connected(n, seed, p=0.3)
        assert sorted(enumerate_min_cds(g)) == brute_force_min_cds(g), (seed, g.edges())
        costs = [int(c) for c in rng.integers(0, 6, size=n)]
        assert solve_wcds(g, costs).cost == _brute_wcds_cost(g, costs), (seed, costs)


def test_universal_vertex_preserves_verdict(connected_atlas):
    for g in connected_atlas(5):
        assert recognize_cd(add_universal_vertex(g)).verdict == recognize_cd(g).verdict, g.edges()


def test_split_cutsets_equal_neighborhoods():
    for seed in range(50):
        g = random_split(9, seed)
        if any(g.degree(v) == g.n - 1 for v in range(g.n)):
            continue
        assert cutset_hypergraph(g) == neighborhood_hypergraph(g), g.edges()


@pytest.mark.slow
def test_split_graphs_cd_iff_td():
    for seed in range(200):
        g = random_split(4 + seed % 7, seed)
        assert recognize_cd(g).positive == recognize_td(g).positive, g.edges()


@pytest.mark.slow
def test_threshold_iff_split_incidence_cd(random_sperner):
    for seed in range(200):
        h = random_sperner(seed, 2 + seed % 5, 8)
        g, _ = split_incidence_graph(h)
        assert is_threshold(h).verdict == recognize_cd(g).positive, h.edges


@pytest.mark.slow
def test_cutset_hypergraph_corollary_directions(connected_atlas):
    for g in connected_atlas(7):
        mch = cutset_hypergraph(g)
        cd = recognize_cd(g).positive
        if check_family_property(mch, "one_sperner").holds:
            assert cd, g.edges()
        if cd:
            assert summability_search(mch, 2) is None, g.edges()


@pytest.mark.slow
def test_hereditary_triple_equivalence(connected_atlas):
    for g in connected_atlas(6):
        verdict = recognize_hereditarily_cd(g).verdict
        assert verdict == _hereditarily_cd_by_definition(g), g.edges()
        assert verdict == _hereditarily_one_sperner(g), g.edges()


@pytest.mark.slow
def test_hereditary_equivalence_on_eight_vertex_sample():
    for seed in range(150):
        if seed % 2:
            g = random_chordal(8, seed, density=0.4)
        else:
            g = random_connected(8, seed, p=0.35)
        verdict = recognize_hereditarily_cd(g).verdict
        assert verdict == _hereditarily_cd_by_definition(g), (seed, g.edges())
        assert verdict == _hereditarily_one_sperner(g), (seed, g.edges())


@pytest.mark.slow
def test_hereditary_one_sperner_on_seven_vertices(connected_atlas):
    for g in connected_atlas(7):
        if g.n == 7:
            assert recognize_hereditarily_cd(g).verdict == _hereditarily_one_sperner(g), g.edges()


@pytest.mark.slow
def test_hereditary_classes():
    kite = forbidden_pattern("kite")
    f2 = f_pattern(2)
    for seed in range(100):
        assert recognize_hereditarily_cd(random_block(12, seed)).verdict
        assert recognize_hereditarily_cd(random_trivially_perfect(10, seed)).verdict

        chordal = random_chordal(9, seed, density=0.3)
        if find_induced(chordal, kite) is None:
            assert recognize_hereditarily_cd(chordal).verdict, chordal.edges()

        split = random_split(10, seed)
        if find_induced(split, f2) is None:
            assert recognize_hereditarily_cd(split).verdict, split.edges()


def test_count_inequalities():
    for g in [ssplit_graph(4), ssplit_graph(6), gchain_graph(3), path_graph(6), kstar_graph(4)]:
        nu_c = len(enumerate_min_cds(g))
        nu_s = len(minimal_cutsets(g))
        assert nu_s <= (g.n - 2) * nu_c and nu_c <= (g.n - 2) * nu_s
        assert nu_c <= g.n * (g.n - 2)
