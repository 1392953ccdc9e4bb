#!/usr/bin/env python3
"""
threshold 판정 모듈

하이퍼그래프(= 완전 DNF 로 주어진 양의 불 함수)가 threshold 인지
정확한 유리수 연산으로 판정하고, 정수 분리 구조 또는 반증 인증서를 만듭니다.

파이프라인:
    1. sperner_reduce
    2. strength_preorder  (비교 불가능 쌍 → 2-summability 인증서)
    3. maximal_false_points (blocker 의 여집합)
    4. 정확 LP: 하이퍼엣지 e 는 w(e) >= t+1, 최대 false point F 는 w(F) <= t
    5. integralize
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

from domishold.config import config
from domishold.errors import CapExceededError, StructureError
from domishold.exact_lp import LinearRow, solve_feasibility, verify_infeasibility_certificate
from domishold.graph_core import VertexSet, mask_of, members
from domishold.hypergraph import (
    Hypergraph,
    SummabilityWitness,
    minimal_transversals,
    restrict,
    sperner_reduce,
    verify_summability_witness,
)

logger = logging.getLogger(__name__)

FLAVORS = ("separating", "cd", "td")


@dataclass(frozen=True)
class WeightedStructure:
    """정점 가중치와 임계값 (separating / cd / td)"""

    weights: Tuple[Fraction, ...]
    threshold: Fraction
    flavor: str = "separating"
    degenerate: bool = False

    @classmethod
    def from_values(cls, weights, threshold, flavor="separating", degenerate=False):
        if flavor not in FLAVORS:
            raise StructureError(f"알 수 없는 구조 종류: {flavor}")
        return cls(
            tuple(Fraction(w) for w in weights),
            Fraction(threshold),
            flavor,
            degenerate,
        )

    @property
    def n(self) -> int:
        return len(self.weights)

    def weight_of(self, s) -> Fraction:
        return sum((self.weights[v] for v in s), Fraction(0))

    def total_weight(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def is_integral(self) -> bool:
        return all(w.denominator == 1 for w in self.weights) and self.threshold.denominator == 1

    def is_nonnegative(self) -> bool:
        return all(w >= 0 for w in self.weights) and self.threshold >= 0


@dataclass(frozen=True)
class StrengthOrder:
    """필수 정점의 세기 전순서 (강한 것부터) 또는 비교 불가능 쌍"""

    classes: Optional[Tuple[VertexSet, ...]] = None
    incomparable: Optional[Tuple[int, int]] = None
    # (e, f): e 는 i⪰j, f 는 j⪰i 를 깨는 하이퍼엣지
    edges: Optional[Tuple[VertexSet, VertexSet]] = None

    @property
    def is_total(self) -> bool:
        return self.classes is not None


@dataclass(frozen=True)
class Refutation:
    """
    threshold 반증 인증서

    kind='incomparable_pair': pair, witness (r=2 summability)
    kind='infeasible_lp': rows, multipliers, variables (LP 변수 순서 = variables 다음 t)
    """

    kind: str
    pair: Optional[Tuple[int, int]] = None
    witness: Optional[SummabilityWitness] = None
    rows: Optional[Tuple[LinearRow, ...]] = None
    multipliers: Optional[Tuple[Fraction, ...]] = None
    variables: Optional[VertexSet] = None


@dataclass(frozen=True)
class ThresholdReport:
    verdict: bool
    structure: Optional[WeightedStructure] = None
    refutation: Optional[Refutation] = None


# ============================================================
# 세기 전순서
# ============================================================

def _contains_edge(mask: int, edges: Sequence[int]) -> bool:
    return any(e & ~mask == 0 for e in edges)


def _dominance_breaker(i: int, j: int, edges: Sequence[int]) -> Optional[int]:
    """i ⪰ j 를 깨는 하이퍼엣지 (j∈e, i∉e, (e-j)+i 가 false) 또는 None"""
    bi, bj = 1 << i, 1 << j
    for e in edges:
        if e & bj and not e & bi:
            if not _contains_edge((e & ~bj) | bi, edges):
                return e
    return None


def strength_preorder(h: Hypergraph) -> StrengthOrder:
    """
    필수 정점 사이의 세기 관계를 계산합니다.

    i ⪰ j  ⟺  j∈e, i∉e 인 모든 하이퍼엣지 e 에 대해 (e-{j})∪{i} 가 하이퍼엣지를 포함.

    Returns:
        StrengthOrder: 전순서면 동치류 목록 (강한 것부터), 아니면 첫 비교 불가능 쌍
    """
    reduced = sperner_reduce(h)
    edges = reduced.edge_masks
    essential = reduced.essential_vertices()

    dominates = {}
    for a, i in enumerate(essential):
        for j in essential[a + 1:]:
            breaker_ij = _dominance_breaker(i, j, edges)
            breaker_ji = _dominance_breaker(j, i, edges)
            if breaker_ij is not None and breaker_ji is not None:
                logger.debug(f"비교 불가능 쌍 발견: ({i}, {j})")
                return StrengthOrder(
                    incomparable=(i, j),
                    edges=(members(breaker_ij), members(breaker_ji)),
                )
            dominates[(i, j)] = breaker_ij is None
            dominates[(j, i)] = breaker_ji is None

    score = {
        i: sum(1 for j in essential if j != i and dominates[(i, j)])
        for i in essential
    }
    ordered = sorted(essential, key=lambda v: (-score[v], v))
    classes: List[List[int]] = []
    for v in ordered:
        if classes and dominates[(classes[-1][0], v)] and dominates[(v, classes[-1][0])]:
            classes[-1].append(v)
        else:
            classes.append([v])
    return StrengthOrder(classes=tuple(tuple(sorted(c)) for c in classes))


def witness_from_incomparable_pair(h: Hypergraph, i: int, j: int, e: VertexSet, f: VertexSet) -> SummabilityWitness:
    """비교 불가능 쌍 (i, j) 를 A=(e, f), B=((e-j)+i, (f-i)+j) 의 2-summability 인증서로 변환"""
    b1 = tuple(sorted((set(e) - {j}) | {i}))
    b2 = tuple(sorted((set(f) - {i}) | {j}))
    return SummabilityWitness(r=2, a=(tuple(e), tuple(f)), b=(b1, b2))


# ============================================================
# false point 와 LP
# ============================================================

def maximal_false_points(h: Hypergraph) -> List[VertexSet]:
    """포함 관계상 최대인 false point = 최소 transversal 의 여집합"""
    full = (1 << h.n) - 1
    blocker = minimal_transversals(h)
    return sorted(members(full & ~mask_of(t)) for t in blocker.edges)


def _separation_rows(edges: Sequence[VertexSet], false_points: Sequence[VertexSet], k: int) -> List[LinearRow]:
    """변수 w_0..w_{k-1}, t (인덱스 k) 에 대한 분리 제약식"""
    rows = []
    for e in edges:
        coeffs = [Fraction(0)] * (k + 1)
        for v in e:
            coeffs[v] = Fraction(-1)
        coeffs[k] = Fraction(1)
        rows.append(LinearRow(tuple(coeffs), Fraction(-1), label=f"edge {list(e)}"))
    for point in false_points:
        coeffs = [Fraction(0)] * (k + 1)
        for v in point:
            coeffs[v] = Fraction(1)
        coeffs[k] = Fraction(-1)
        rows.append(LinearRow(tuple(coeffs), Fraction(0), label=f"false {list(point)}"))
    return rows


def _constant_report(reduced: Hypergraph) -> Optional[ThresholdReport]:
    """상수 함수 처리: 간선 없음 → (0, t=0), 빈 간선 → degenerate"""
    if not reduced.edges:
        return ThresholdReport(True, WeightedStructure.from_values([0] * reduced.n, 0))
    if reduced.edges[0] == ():
        return ThresholdReport(True, WeightedStructure.from_values([0] * reduced.n, 0, degenerate=True))
    return None


def _solve_separation(h: Hypergraph, essential: VertexSet, rows: List[LinearRow]) -> ThresholdReport:
    result = solve_feasibility(rows, len(essential) + 1)
    if not result.feasible:
        return ThresholdReport(False, refutation=Refutation(
            kind="infeasible_lp",
            rows=tuple(rows),
            multipliers=result.certificate,
            variables=essential,
        ))

    weights = [Fraction(0)] * h.n
    for idx, v in enumerate(essential):
        weights[v] = result.solution[idx]
    rational = WeightedStructure.from_values(weights, result.solution[-1])
    return ThresholdReport(True, integralize(rational, h))


def is_threshold(h: Hypergraph) -> ThresholdReport:
    """
    하이퍼그래프의 threshold 여부를 판정합니다.

    Args:
        h: 하이퍼그래프 (내부에서 Sperner 축약)

    Returns:
        ThresholdReport: threshold 이면 정수 분리 구조
                         (w(e) >= t+1, 최대 false point F 에 대해 w(F) <= t),
                         아니면 비교 불가능 쌍 또는 LP Farkas 인증서
    """
    reduced = sperner_reduce(h)
    constant = _constant_report(reduced)
    if constant is not None:
        return constant

    order = strength_preorder(reduced)
    if not order.is_total:
        i, j = order.incomparable
        e, f = order.edges
        return ThresholdReport(False, refutation=Refutation(
            kind="incomparable_pair",
            pair=(i, j),
            witness=witness_from_incomparable_pair(reduced, i, j, e, f),
        ))

    essential = reduced.essential_vertices()
    sub = restrict(reduced, essential)
    false_points = maximal_false_points(sub)
    logger.debug(f"threshold LP 구성: 필수 정점 {len(essential)}개, 간선 {sub.q}개, 최대 false point {len(false_points)}개")
    rows = _separation_rows(sub.edges, false_points, len(essential))
    return _solve_separation(reduced, essential, rows)


def brute_force_threshold(h: Hypergraph, cap: Optional[int] = None) -> ThresholdReport:
    """
    정의 그대로의 LP: 필수 정점의 모든 부분집합마다 제약식 하나

    Raises:
        CapExceededError: 필수 정점 수가 cap (기본값 BRUTE_FORCE_CAP) 초과
    """
    cap = config.BRUTE_FORCE_CAP if cap is None else cap
    reduced = sperner_reduce(h)
    essential = reduced.essential_vertices()
    if len(essential) > cap:
        raise CapExceededError("brute_force_threshold", cap, len(essential))

    constant = _constant_report(reduced)
    if constant is not None:
        return constant

    sub = restrict(reduced, essential)
    k = len(essential)
    true_points, false_points = [], []
    for mask in range(1 << k):
        (true_points if _contains_edge(mask, sub.edge_masks) else false_points).append(members(mask))
    rows = _separation_rows(true_points, false_points, k)
    return _solve_separation(reduced, essential, rows)


# ============================================================
# 구조 변환 / 검증
# ============================================================

def integralize(s: WeightedStructure, h: Optional[Hypergraph] = None) -> WeightedStructure:
    """
    공통 분모를 곱해 정수 구조로 만듭니다. t 는 내림합니다.

    Args:
        s: 유리수 구조
        h: 주어지면 separating 불변식을 다시 검증

    Raises:
        StructureError: 변환 후 불변식이 깨질 때
    """
    scale = 1
    for value in list(s.weights) + [s.threshold]:
        scale = math.lcm(scale, value.denominator)
    weights = tuple(w * scale for w in s.weights)
    threshold = Fraction(math.floor(s.threshold * scale))
    result = WeightedStructure(weights, threshold, s.flavor, s.degenerate)

    if not result.is_nonnegative():
        raise StructureError(f"음수 가중치/임계값: {result}")
    if h is not None and s.flavor == "separating" and not verify_separating_structure(h, result, cap=0):
        raise StructureError("정수화 후 분리 구조 불변식이 깨졌습니다")
    return result


def dual_separating_structure(s: WeightedStructure) -> WeightedStructure:
    """
    (w, t) → (w, Σw - t - 1): blocker 에 대한 분리 구조

    Raises:
        StructureError: 정수/separating 구조가 아니거나 Σw - t - 1 < 0
    """
    if s.flavor != "separating" or not s.is_integral():
        raise StructureError("dual 구조는 정수 separating 구조에서만 계산할 수 있습니다")
    threshold = s.total_weight() - s.threshold - 1
    if threshold < 0:
        raise StructureError(f"Σw - t - 1 = {threshold} < 0 (상수 함수)")
    return WeightedStructure(s.weights, threshold, "separating")


def subset_weights(weights: Sequence[Fraction]) -> List[Fraction]:
    """모든 부분집합 mask 의 가중치 합 (길이 2^n)"""
    totals = [Fraction(0)] * (1 << len(weights))
    for mask in range(1, len(totals)):
        low = mask & -mask
        totals[mask] = totals[mask ^ low] + weights[low.bit_length() - 1]
    return totals


def definitional_check(s: WeightedStructure, predicate: Callable[[int], bool], at_least: bool = True) -> bool:
    """
    모든 부분집합 S 에 대해 predicate(S) 와 가중치 조건이 일치하는지 확인합니다.

    at_least=True 이면 w(S) >= t, False 이면 w(S) <= t 와 비교합니다.
    """
    totals = subset_weights(s.weights)
    for mask, total in enumerate(totals):
        side = total >= s.threshold if at_least else total <= s.threshold
        if side != predicate(mask):
            return False
    return True


def verify_separating_structure(h: Hypergraph, s: WeightedStructure, cap: Optional[int] = None) -> bool:
    """
    분리 구조를 검증합니다.

    하이퍼엣지마다 w(e) > t, 최대 false point 마다 w(F) <= t 인지 확인하고,
    정점 수가 cap (기본값 BRUTE_FORCE_CAP) 이하이면 모든 부분집합에 대해 정의를 직접 확인합니다.
    """
    cap = config.BRUTE_FORCE_CAP if cap is None else cap
    if s.n != h.n or not s.is_nonnegative():
        return False

    reduced = sperner_reduce(h)
    if s.degenerate:
        return bool(reduced.edges) and reduced.edges[0] == ()

    if any(s.weight_of(e) <= s.threshold for e in reduced.edges):
        return False
    if any(s.weight_of(point) > s.threshold for point in maximal_false_points(reduced)):
        return False

    if h.n <= cap:
        edges = reduced.edge_masks
        return definitional_check(s, lambda mask: not _contains_edge(mask, edges), at_least=False)
    return True


def verify_refutation(h: Hypergraph, refutation: Refutation) -> bool:
    """반증 인증서를 다시 확인합니다 (summability 인증서 또는 Farkas 승수)"""
    if refutation.kind == "incomparable_pair":
        return verify_summability_witness(sperner_reduce(h), refutation.witness)
    if refutation.kind == "infeasible_lp":
        return verify_infeasibility_certificate(refutation.rows, refutation.multipliers)
    return False
