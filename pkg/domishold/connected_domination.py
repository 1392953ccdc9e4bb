#!/usr/bin/env python3
"""
연결 지배(connected domination) 모듈

    - verify_dominating: CD 집합 / total 지배집합 판정
    - recognize_cd / recognize_td: cutset / 이웃 하이퍼그래프의 threshold 판정으로 구조 계산
    - recognize_hereditarily_cd: hole, F1, F2, H(1), H(2), H(i>2) 금지 부분그래프 인증서
    - enumerate_min_cds: cutset 하이퍼그래프의 blocker 로 최소 CD 집합 열거
    - solve_wcds: 최소 비용 CD 집합 (비용 비음)
"""

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Mapping, Optional, Sequence, Tuple, Union

from domishold.config import config
from domishold.errors import CapExceededError, DisconnectedGraphError, GraphInputError
from domishold.exact_lp import LinearRow, solve_feasibility
from domishold.graph_core import (
    Embedding,
    Graph,
    VertexSet,
    component_masks,
    find_induced,
    is_chordal,
    is_complete,
    is_connected,
    is_induced_embedding,
    mask_of,
    members,
    neighborhood_mask,
    shortest_path,
)
from domishold.graph_families import f_pattern, h_pattern
from domishold.hypergraph import Hypergraph, minimal_transversals, neighborhood_hypergraph
from domishold.separators import cutset_hypergraph
from domishold.threshold import (
    Refutation,
    WeightedStructure,
    definitional_check,
    is_threshold,
)

logger = logging.getLogger(__name__)

MODES = ("cd", "td")


# ============================================================
# 지배집합 판정
# ============================================================

def is_cd_mask(g: Graph, mask: int) -> bool:
    """비트마스크 집합이 연결 지배집합인지"""
    if not mask:
        return False
    if (mask | neighborhood_mask(g.masks, mask)) != g.full_mask:
        return False
    return len(component_masks(g.masks, mask)) == 1


def is_td_mask(g: Graph, mask: int) -> bool:
    """비트마스크 집합이 total 지배집합인지 (모든 정점이 집합 안에 이웃을 가짐)"""
    return all(g.masks[v] & mask for v in range(g.n))


def verify_dominating(g: Graph, s, mode: str) -> bool:
    """
    s 가 cd (연결 지배) 또는 td (total 지배) 집합인지 판정합니다.

    Args:
        g: 그래프
        s: 정점 집합
        mode: 'cd' 또는 'td'
    """
    if mode not in MODES:
        raise GraphInputError(f"알 수 없는 모드: {mode}")
    mask = mask_of(s)
    return is_cd_mask(g, mask) if mode == "cd" else is_td_mask(g, mask)


# ============================================================
# CD / TD 인식
# ============================================================

@dataclass(frozen=True)
class DomisholdReport:
    """
    CD / TD 인식 결과

    verdict: 'cd' / 'not_cd' / 'td' / 'not_td'
    structure: 양성일 때 정수 구조 (flavor=cd/td)
    refutation: 음성일 때 하이퍼그래프의 threshold 반증 인증서
    degenerate: 비연결/완전 그래프 (cd) 또는 고립 정점 (td)
    """

    verdict: str
    structure: Optional[WeightedStructure] = None
    refutation: Optional[Refutation] = None
    degenerate: bool = False
    hypergraph: Optional[Hypergraph] = None

    @property
    def positive(self) -> bool:
        return not self.verdict.startswith("not_")


CDReport = DomisholdReport


def _covering_structure(separating: WeightedStructure, flavor: str) -> WeightedStructure:
    """분리 구조 (w, t) → (w, w(V) - t): transversal ⟺ w(S) >= w(V) - t"""
    return WeightedStructure(
        separating.weights,
        separating.total_weight() - separating.threshold,
        flavor,
    )


def _recognize_from_hypergraph(h: Hypergraph, flavor: str) -> DomisholdReport:
    report = is_threshold(h)
    if report.verdict:
        return DomisholdReport(flavor, structure=_covering_structure(report.structure, flavor), hypergraph=h)
    return DomisholdReport(f"not_{flavor}", refutation=report.refutation, hypergraph=h)


def recognize_cd(g: Graph, budget: Optional[int] = None) -> DomisholdReport:
    """
    connected-domishold 여부를 판정합니다.

    - 비연결: CD 집합이 없으므로 (0, t=1) 구조, degenerate
    - 완전 그래프: 공집합이 아닌 모든 집합이 CD 이므로 (1, t=1)
    - 그 외: cutset 하이퍼그래프가 threshold 이면 분리 구조 (w, t) 로부터 (w, w(V) - t)

    Args:
        g: 그래프
        budget: 분리집합 열거 예산

    Returns:
        DomisholdReport
    """
    if not is_connected(g):
        structure = WeightedStructure.from_values([0] * g.n, 1, flavor="cd")
        return DomisholdReport("cd", structure=structure, degenerate=True)
    if is_complete(g):
        structure = WeightedStructure.from_values([1] * g.n, 1, flavor="cd")
        return DomisholdReport("cd", structure=structure, degenerate=True)

    return _recognize_from_hypergraph(cutset_hypergraph(g, budget), "cd")


def recognize_td(g: Graph) -> DomisholdReport:
    """
    total-domishold 여부를 판정합니다 (이웃 하이퍼그래프 MNH 의 threshold 판정).

    고립 정점이 있으면 total 지배집합이 없으므로 not_td (degenerate) 입니다.
    """
    if any(g.degree(v) == 0 for v in range(g.n)):
        return DomisholdReport("not_td", degenerate=True)
    return _recognize_from_hypergraph(neighborhood_hypergraph(g), "td")


def verify_structure(g: Graph, s: WeightedStructure, cap: Optional[int] = None) -> bool:
    """
    cd / td 구조를 모든 2^n 부분집합에 대해 정의대로 확인합니다.

    Raises:
        CapExceededError: n 이 cap (기본값 BRUTE_FORCE_CAP) 초과
    """
    cap = config.BRUTE_FORCE_CAP if cap is None else cap
    if s.flavor not in MODES:
        raise GraphInputError(f"cd/td 구조가 아닙니다: {s.flavor}")
    if g.n > cap:
        raise CapExceededError("verify_structure", cap, g.n)
    if s.n != g.n or not s.is_nonnegative():
        return False
    predicate = is_cd_mask if s.flavor == "cd" else is_td_mask
    return definitional_check(s, lambda mask: predicate(g, mask))


def brute_force_cd(g: Graph, cap: Optional[int] = None) -> DomisholdReport:
    """
    정의 그대로의 LP: 모든 부분집합 S 에 대해
    CD 이면 w(S) >= t, 아니면 w(S) <= t - 1

    Raises:
        CapExceededError: n 이 cap (기본값 BRUTE_FORCE_CAP) 초과
    """
    cap = config.BRUTE_FORCE_CAP if cap is None else cap
    if g.n > cap:
        raise CapExceededError("brute_force_cd", cap, g.n)

    rows = []
    for mask in range(1 << g.n):
        coeffs = [Fraction(0)] * (g.n + 1)
        if is_cd_mask(g, mask):
            for v in members(mask):
                coeffs[v] = Fraction(-1)
            coeffs[g.n] = Fraction(1)
            rows.append(LinearRow(tuple(coeffs), Fraction(0)))
        else:
            for v in members(mask):
                coeffs[v] = Fraction(1)
            coeffs[g.n] = Fraction(-1)
            rows.append(LinearRow(tuple(coeffs), Fraction(-1)))

    result = solve_feasibility(rows, g.n + 1)
    if not result.feasible:
        return DomisholdReport("not_cd")
    structure = WeightedStructure.from_values(result.solution[:-1], result.solution[-1], flavor="cd")
    return DomisholdReport("cd", structure=structure)


# ============================================================
# 유전적 CD 인식
# ============================================================

@dataclass(frozen=True)
class HereditaryReport:
    """
    유전적 CD 인식 결과

    verdict 가 False 이면 hole 또는 (pattern_name, embedding) 중 하나가 존재합니다.
    embedding[i] 는 패턴 정점 i 에 대응하는 호스트 정점입니다.
    """

    verdict: bool
    hole: Optional[VertexSet] = None
    pattern_name: Optional[str] = None
    embedding: Optional[Embedding] = None


@dataclass(frozen=True)
class _Diamond:
    centers: Tuple[int, int]
    tips: Tuple[int, int]
    vertex_mask: int
    closed_mask: int


def induced_diamonds(g: Graph) -> List[_Diamond]:
    """모든 유도 diamond (중심 간선 + 비인접 공통 이웃 두 개)"""
    diamonds = []
    for c1, c2 in g.edges():
        tips = members(g.masks[c1] & g.masks[c2])
        for a, t1 in enumerate(tips):
            for t2 in tips[a + 1:]:
                if g.has_edge(t1, t2):
                    continue
                vertex_mask = mask_of((c1, c2, t1, t2))
                diamonds.append(_Diamond(
                    centers=(c1, c2),
                    tips=(t1, t2),
                    vertex_mask=vertex_mask,
                    closed_mask=vertex_mask | neighborhood_mask(g.masks, vertex_mask),
                ))
    return diamonds


def _linked_diamond_pair(g: Graph) -> Optional[Embedding]:
    """
    교차 간선 없는 두 diamond D1, D2 와 꼭지 u ∈ D1, v ∈ D2 에 대해
    G - (N_{G-u}[D1 - u] ∪ N_{G-v}[D2 - v]) 에서 u, v 가 연결되면
    최단 경로로 H(i) embedding 을 만듭니다.
    """
    diamonds = induced_diamonds(g)
    closed = [g.closed_mask(v) for v in range(g.n)]

    def blocked(d: _Diamond, tip: int) -> int:
        core = d.vertex_mask & ~(1 << tip)
        region = 0
        for w in members(core):
            region |= closed[w]
        return region & ~(1 << tip)

    for i, d1 in enumerate(diamonds):
        for d2 in diamonds[i + 1:]:
            if d2.vertex_mask & d1.closed_mask:
                continue
            for u in d1.tips:
                for v in d2.tips:
                    allowed = g.full_mask & ~(blocked(d1, u) | blocked(d2, v))
                    path = shortest_path(g.masks, allowed, u, v)
                    if path is None:
                        continue
                    x1 = d1.tips[0] if d1.tips[1] == u else d1.tips[1]
                    z1 = d2.tips[0] if d2.tips[1] == v else d2.tips[1]
                    embedding = (x1, *d1.centers, *path, *d2.centers, z1)
                    if is_induced_embedding(g, h_pattern(len(path)), embedding):
                        return embedding
                    logger.warning(f"diamond 연결 경로가 유도 H(i) 가 아닙니다: {embedding}")
    return None


def recognize_hereditarily_cd(g: Graph) -> HereditaryReport:
    """
    유전적 CD 여부를 판정합니다.

    검사 순서: chordal → F1, F2, H(1), H(2) 유도 부분그래프 → diamond 쌍 연결 검사.
    처음 발견한 인증서를 반환합니다.

    Args:
        g: 그래프

    Returns:
        HereditaryReport
    """
    chordal = is_chordal(g)
    if not chordal.verdict:
        return HereditaryReport(False, hole=chordal.hole)

    for name, pattern in (("F1", f_pattern(1)), ("F2", f_pattern(2)), ("H(1)", h_pattern(1)), ("H(2)", h_pattern(2))):
        embedding = find_induced(g, pattern)
        if embedding is not None:
            return HereditaryReport(False, pattern_name=name, embedding=embedding)

    embedding = _linked_diamond_pair(g)
    if embedding is not None:
        return HereditaryReport(False, pattern_name=f"H({len(embedding) - 6})", embedding=embedding)
    return HereditaryReport(True)


# ============================================================
# 최소 CD 집합 열거 / WCDS
# ============================================================

def enumerate_min_cds(g: Graph, budget: Optional[int] = None) -> List[VertexSet]:
    """
    모든 최소 연결 지배집합을 열거합니다.

    완전 그래프는 단일 정점 집합들, 그 외에는 cutset 하이퍼그래프의 최소 transversal.

    Raises:
        DisconnectedGraphError: 비연결 그래프
        SeparatorBudgetExceeded: 분리집합 예산 초과
    """
    if not is_connected(g):
        raise DisconnectedGraphError(f"enumerate_min_cds: 연결 그래프가 필요합니다 (n={g.n})")
    if is_complete(g):
        return [(v,) for v in range(g.n)]
    return list(minimal_transversals(cutset_hypergraph(g, budget)).edges)


@dataclass(frozen=True)
class WcdsSolution:
    set: VertexSet
    cost: Fraction
    enumerated_count: int


Costs = Union[Mapping[int, object], Sequence[object]]


def _normalize_costs(g: Graph, costs: Costs) -> List[Fraction]:
    values = []
    for v in range(g.n):
        try:
            value = Fraction(costs[v])
        except (KeyError, IndexError):
            raise GraphInputError(f"정점 {v} 의 비용이 없습니다", pair=(v, v))
        if value < 0:
            raise GraphInputError(f"정점 {v} 의 비용이 음수입니다: {value}", pair=(v, v))
        values.append(value)
    return values


def solve_wcds(g: Graph, costs: Costs, budget: Optional[int] = None) -> WcdsSolution:
    """
    최소 비용 연결 지배집합을 구합니다.

    비용이 비음이므로 최적해는 최소 CD 집합 중에 있습니다. 동률은 사전순 최소.

    Args:
        g: 연결 그래프
        costs: 정점 → 비음 유리수 비용
        budget: 분리집합 열거 예산

    Returns:
        WcdsSolution
    """
    values = _normalize_costs(g, costs)
    start_time = time.time()
    candidates = enumerate_min_cds(g, budget)

    def cost_of(s: VertexSet) -> Fraction:
        return sum((values[v] for v in s), Fraction(0))

    best = min(candidates, key=lambda s: (cost_of(s), s))
    elapsed_time = time.time() - start_time
    logger.info(f"WCDS 완료: 최소 CD 집합 {len(candidates)}개 검사, 비용 {cost_of(best)} (소요 시간: {elapsed_time:.2f}초)")
    return WcdsSolution(best, cost_of(best), len(candidates))
