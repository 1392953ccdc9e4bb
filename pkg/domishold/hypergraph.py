#!/usr/bin/env python3
"""
하이퍼그래프 모듈

하이퍼그래프 데이터 모델과 조합적 연산을 제공합니다.
    - sperner_reduce: 포함 관계상 최소인 하이퍼엣지만 유지
    - check_family_property: sperner / one_sperner / dually_sperner 판정
    - minimal_transversals: 간선 단위 곱(Berge multiplication)으로 blocker 계산
    - summability_search / verify_summability_witness: k-summability (k <= 3)
    - neighborhood_hypergraph / split_incidence_graph

하이퍼엣지는 (크기, 사전순) 으로 정렬해 중복 없이 보관합니다.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from domishold.config import config
from domishold.errors import CapExceededError, HypergraphInputError
from domishold.graph_core import Graph, VertexSet, build_graph, iter_bits, mask_of, members

logger = logging.getLogger(__name__)

FAMILY_PROPERTIES = ("sperner", "one_sperner", "dually_sperner")


def _edge_key(edge: VertexSet):
    return len(edge), edge


@dataclass(frozen=True)
class Hypergraph:
    """정점 0..n-1 위의 하이퍼그래프 (간선은 정렬된 VertexSet)"""

    n: int
    edges: Tuple[VertexSet, ...]

    @cached_property
    def edge_masks(self) -> Tuple[int, ...]:
        return tuple(mask_of(edge) for edge in self.edges)

    @property
    def q(self) -> int:
        return len(self.edges)

    def essential_vertices(self) -> VertexSet:
        """어떤 하이퍼엣지에든 속한 정점"""
        union = 0
        for mask in self.edge_masks:
            union |= mask
        return members(union)

    def contains_edge(self, s: Iterable[int]) -> bool:
        """s 가 하이퍼엣지를 포함하는지 (true point 여부)"""
        mask = mask_of(s)
        return any(e & ~mask == 0 for e in self.edge_masks)

    def total_size(self) -> int:
        return sum(len(edge) for edge in self.edges)


@dataclass(frozen=True)
class SummabilityWitness:
    """A_1..A_r (각각 하이퍼엣지 포함) 과 B_1..B_r (하이퍼엣지 미포함), 정점별 등장 횟수 동일"""

    r: int
    a: Tuple[VertexSet, ...]
    b: Tuple[VertexSet, ...]


@dataclass(frozen=True)
class FamilyCheck:
    holds: bool
    pair: Optional[Tuple[VertexSet, VertexSet]] = None


def build_hypergraph(n: int, edges: Iterable[Iterable[int]]) -> Hypergraph:
    """
    하이퍼그래프를 생성합니다. 간선은 정렬/중복 제거됩니다.

    Raises:
        HypergraphInputError: 범위 밖 정점
    """
    if n < 0:
        raise HypergraphInputError(f"정점 수는 0 이상이어야 합니다: {n}")
    canonical = set()
    for edge in edges:
        vertices = tuple(sorted(set(int(v) for v in edge)))
        for v in vertices:
            if not 0 <= v < n:
                raise HypergraphInputError(f"범위 밖 정점 {v} (n={n}) in {list(edge)}")
        canonical.add(vertices)
    return Hypergraph(n, tuple(sorted(canonical, key=_edge_key)))


def _from_masks(n: int, masks: Iterable[int]) -> Hypergraph:
    return Hypergraph(n, tuple(sorted({members(mask) for mask in masks}, key=_edge_key)))


def restrict(h: Hypergraph, vertices: Sequence[int]) -> Hypergraph:
    """vertices 안에 포함된 간선만 남기고 정점을 0..len-1 로 재번호"""
    index = {v: i for i, v in enumerate(vertices)}
    return build_hypergraph(
        len(vertices),
        [[index[v] for v in edge] for edge in h.edges if all(v in index for v in edge)],
    )


def sperner_reduce(h: Hypergraph) -> Hypergraph:
    """포함 관계상 최소인 하이퍼엣지만 남깁니다 (간선 크기 순이므로 앞쪽만 비교)"""
    kept: List[int] = []
    for mask in h.edge_masks:
        if not any(k & ~mask == 0 for k in kept):
            kept.append(mask)
    return _from_masks(h.n, kept)


def check_family_property(h: Hypergraph, prop: str) -> FamilyCheck:
    """
    서로 다른 두 하이퍼엣지 e, f 의 min(|e-f|, |f-e|) 조건을 검사합니다.

    Args:
        h: 하이퍼그래프
        prop: sperner (>= 1) / one_sperner (== 1) / dually_sperner (<= 1)

    Returns:
        FamilyCheck: 성립 여부와 첫 위반 간선 쌍
    """
    if prop not in FAMILY_PROPERTIES:
        raise HypergraphInputError(f"알 수 없는 속성: {prop} (가능: {', '.join(FAMILY_PROPERTIES)})")

    for (i, e), (j, f) in combinations(enumerate(h.edge_masks), 2):
        d = min(bin(e & ~f).count("1"), bin(f & ~e).count("1"))
        violated = (
            (prop == "sperner" and d < 1)
            or (prop == "one_sperner" and d != 1)
            or (prop == "dually_sperner" and d > 1)
        )
        if violated:
            return FamilyCheck(False, (h.edges[i], h.edges[j]))
    return FamilyCheck(True)


def is_transversal(h: Hypergraph, s: Iterable[int]) -> bool:
    """s 가 모든 하이퍼엣지와 만나는지"""
    mask = mask_of(s)
    return all(e & mask for e in h.edge_masks)


def _has_private_edges(candidate: int, processed: Sequence[int]) -> bool:
    """candidate 의 각 정점 u 에 대해 candidate 와 {u} 에서만 만나는 간선이 있는지"""
    for u in iter_bits(candidate):
        bit = 1 << u
        if not any(f & candidate == bit for f in processed):
            return False
    return True


def minimal_transversals(h: Hypergraph) -> Hypergraph:
    """
    blocker(최소 transversal 전체)를 계산합니다.

    간선을 하나씩 곱해 나가며, 새 후보 T∪{v} 는 처리한 간선 중에
    각 원소만을 공유하는 간선(private edge)이 있을 때만 남깁니다.
    간선이 없으면 {∅}, 빈 간선이 있으면 transversal 없음.

    Args:
        h: 하이퍼그래프

    Returns:
        Hypergraph: 같은 정점 집합 위의 blocker
    """
    edges = sperner_reduce(h).edge_masks
    if any(e == 0 for e in edges):
        return Hypergraph(h.n, ())

    current = [0]
    processed: List[int] = []
    for e in edges:
        processed.append(e)
        kept = [t for t in current if t & e]
        seen = set(kept)
        for t in current:
            if t & e:
                continue
            for v in iter_bits(e):
                candidate = t | (1 << v)
                if candidate in seen:
                    continue
                seen.add(candidate)
                if _has_private_edges(candidate, processed):
                    kept.append(candidate)
        current = kept

    logger.debug(f"blocker 계산 완료: 간선 {len(edges)}개 → 최소 transversal {len(current)}개")
    return _from_masks(h.n, current)


# ============================================================
# k-summability
# ============================================================

def _split_into_false_points(counts: Sequence[int], r: int, edges_by_vertex: Dict[int, List[int]]) -> Optional[List[int]]:
    """
    정점별 등장 횟수 counts 를 r 개의 false point 로 나눕니다.

    정점을 차례로 배치하며, 배치 직후 해당 묶음이 하이퍼엣지를 포함하면 되돌립니다.
    아직 같은 내용인 묶음들은 서로 교환 가능하므로 앞 묶음부터 채웁니다.
    """
    vertices = [v for v, c in enumerate(counts) if c > 0]
    bins = [0] * r

    def place(idx: int) -> bool:
        if idx == len(vertices):
            return True
        v = vertices[idx]
        bit = 1 << v
        for chosen in combinations(range(r), counts[v]):
            if any(b > 0 and bins[b] == bins[b - 1] and b - 1 not in chosen for b in chosen):
                continue
            for b in chosen:
                bins[b] |= bit
            if all(not any(e & ~bins[b] == 0 for e in edges_by_vertex[v]) for b in chosen):
                if place(idx + 1):
                    return True
            for b in chosen:
                bins[b] &= ~bit
        return False

    if place(0):
        return list(bins)
    return None


def summability_search(h: Hypergraph, k: int, cap: Optional[int] = None) -> Optional[SummabilityWitness]:
    """
    r <= k 인 summability 인증서를 찾습니다.

    A_i 는 일반성을 잃지 않고 하이퍼엣지로 둘 수 있으므로, 하이퍼엣지 r 개 조합의
    합 벡터마다 그 벡터를 r 개의 false point 로 나눌 수 있는지 탐색합니다.
    같은 합 벡터는 한 번만 검사합니다.

    Args:
        h: 하이퍼그래프
        k: 2 또는 3
        cap: 필수 정점 수 상한 (기본값 k=2 → SUMMABILITY_CAP_2, k=3 → SUMMABILITY_CAP_3)

    Returns:
        SummabilityWitness | None

    Raises:
        CapExceededError: 필수 정점 수가 상한 초과
    """
    if k not in (2, 3):
        raise HypergraphInputError(f"k 는 2 또는 3 이어야 합니다: {k}")
    cap = config.get_summability_cap(k) if cap is None else cap

    reduced = sperner_reduce(h)
    essential = reduced.essential_vertices()
    if len(essential) > cap:
        raise CapExceededError(f"summability_search(k={k})", cap, len(essential))

    edges = reduced.edge_masks
    if not edges or edges[0] == 0:
        return None

    incidence = np.zeros((len(edges), h.n), dtype=np.int8)
    for row, edge in enumerate(reduced.edges):
        incidence[row, list(edge)] = 1
    edges_by_vertex = {v: [e for e in edges if (e >> v) & 1] for v in essential}

    for r in range(2, k + 1):
        seen = set()
        for combo in combinations_with_replacement(range(len(edges)), r):
            counts = incidence[list(combo)].sum(axis=0)
            key = counts.tobytes()
            if key in seen:
                continue
            seen.add(key)
            split = _split_into_false_points([int(c) for c in counts], r, edges_by_vertex)
            if split is not None:
                witness = SummabilityWitness(
                    r=r,
                    a=tuple(reduced.edges[i] for i in combo),
                    b=tuple(members(mask) for mask in split),
                )
                logger.debug(f"{r}-summability 인증서 발견: A={witness.a}, B={witness.b}")
                return witness
        logger.debug(f"{r}-summability 인증서 없음 (합 벡터 {len(seen)}개 검사)")
    return None


def verify_summability_witness(h: Hypergraph, w: SummabilityWitness) -> bool:
    """A_i 는 true point, B_i 는 false point, 정점별 등장 횟수가 같은지 확인"""
    if w.r < 2 or len(w.a) != w.r or len(w.b) != w.r:
        return False
    for part in list(w.a) + list(w.b):
        if any(not 0 <= v < h.n for v in part) or len(set(part)) != len(part):
            return False
    if not all(h.contains_edge(a) for a in w.a):
        return False
    if any(h.contains_edge(b) for b in w.b):
        return False
    count_a = Counter(v for a in w.a for v in a)
    count_b = Counter(v for b in w.b for v in b)
    return count_a == count_b


# ============================================================
# 그래프 ↔ 하이퍼그래프
# ============================================================

def neighborhood_hypergraph(g: Graph) -> Hypergraph:
    """열린 이웃 N(v) 들 중 포함 관계상 최소인 것들"""
    return sperner_reduce(build_hypergraph(g.n, [g.adj[v] for v in range(g.n)]))


def split_incidence_graph(h: Hypergraph) -> Tuple[Graph, Dict[int, VertexSet]]:
    """
    split-incidence 그래프를 생성합니다.

    정점 0..n-1 은 clique, 하이퍼엣지 j 는 독립 정점 n+j 로 두고
    v ∈ e_j 이면 v 와 n+j 를 연결합니다.

    Returns:
        tuple: (그래프, 독립 정점 → 하이퍼엣지 라벨)

    Raises:
        HypergraphInputError: 빈 하이퍼엣지가 있을 때
    """
    if any(len(edge) == 0 for edge in h.edges):
        raise HypergraphInputError("빈 하이퍼엣지가 있어 split-incidence 그래프를 만들 수 없습니다")

    edges = list(combinations(range(h.n), 2))
    labeling = {}
    for j, edge in enumerate(h.edges):
        labeling[h.n + j] = edge
        edges += [(v, h.n + j) for v in edge]
    return build_graph(h.n + h.q, edges), labeling
