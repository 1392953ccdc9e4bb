#!/usr/bin/env python3
"""
그래프 기본 모듈
정수 정점(0..n-1) 단순 무방향 그래프와 구조 판정 함수들을 제공합니다.

주요 기능:
    - build_graph: 간선 목록으로 그래프 생성 (입력 검증 포함)
    - components / induced_subgraph / add_universal_vertex
    - is_chordal: 최대 기수 탐색(MCS) 기반 chordal 판정 + PEO 또는 hole 인증서
    - split_partition: 차수열 기반 split 판정 + (K, I) 분할
    - find_induced: 백트래킹 기반 유도 부분그래프 동형 탐색

내부 연산은 정수 비트마스크(bit i = 정점 i)로 처리합니다.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from domishold.config import config
from domishold.errors import GraphInputError, PatternTooLargeError

logger = logging.getLogger(__name__)

# 정렬된 중복 없는 정점 튜플
VertexSet = Tuple[int, ...]

# 패턴 정점 i → 호스트 정점 embedding[i]
Embedding = Tuple[int, ...]


# ============================================================
# 비트마스크 유틸리티
# ============================================================

def mask_of(vertices: Iterable[int]) -> int:
    """정점 집합을 비트마스크로 변환"""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """비트마스크의 정점을 오름차순으로 순회"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> VertexSet:
    """비트마스크 → 정렬된 VertexSet"""
    return tuple(iter_bits(mask))


def neighborhood_mask(masks: Sequence[int], set_mask: int) -> int:
    """집합의 열린 이웃 N(S) (S 자신은 제외)"""
    union = 0
    for v in iter_bits(set_mask):
        union |= masks[v]
    return union & ~set_mask


def component_masks(masks: Sequence[int], allowed: int) -> List[int]:
    """
    allowed 로 유도된 부분그래프의 연결 요소를 비트마스크 목록으로 반환합니다.

    Args:
        masks: 정점별 이웃 비트마스크
        allowed: 남겨둘 정점 비트마스크

    Returns:
        list: 최소 원소 순으로 정렬된 요소 비트마스크 목록
    """
    comps = []
    remaining = allowed
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            reached = 0
            for v in iter_bits(frontier):
                reached |= masks[v]
            frontier = reached & remaining & ~comp
            comp |= frontier
        comps.append(comp)
        remaining &= ~comp
    return comps


def shortest_path(masks: Sequence[int], allowed: int, source: int, target: int) -> Optional[List[int]]:
    """
    allowed 안에서 source → target 최단 경로 (BFS, 작은 정점 우선).
    경로가 없으면 None.
    """
    if not (allowed >> source) & 1 or not (allowed >> target) & 1:
        return None
    parent = {source: source}
    frontier = [source]
    seen = 1 << source
    while frontier:
        next_frontier = []
        for v in frontier:
            for u in iter_bits(masks[v] & allowed & ~seen):
                seen |= 1 << u
                parent[u] = v
                if u == target:
                    path = [u]
                    while path[-1] != source:
                        path.append(parent[path[-1]])
                    return path[::-1]
                next_frontier.append(u)
        frontier = next_frontier
    return None


# ============================================================
# 그래프 타입
# ============================================================

@dataclass(frozen=True)
class Graph:
    """단순 무방향 그래프 (정점 0..n-1, 정점별 이웃 집합)"""

    n: int
    adj: Tuple[frozenset, ...]

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        return tuple(mask_of(nbrs) for nbrs in self.adj)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> VertexSet:
        return tuple(sorted(self.adj[v]))

    def closed_mask(self, v: int) -> int:
        return self.masks[v] | (1 << v)

    def edges(self) -> List[Tuple[int, int]]:
        """정렬된 간선 목록 (u < v)"""
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    def to_networkx(self) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.n))
        nxg.add_edges_from(self.edges())
        return nxg


@dataclass(frozen=True)
class ChordalityReport:
    """chordal 판정 결과 (peo 또는 hole 중 하나만 존재)"""

    verdict: bool
    peo: Optional[Tuple[int, ...]] = None
    hole: Optional[VertexSet] = None
    # hole 을 순환 순서로 나열한 것
    cycle: Optional[Tuple[int, ...]] = None


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """
    간선 목록으로 그래프를 생성합니다.

    Args:
        n: 정점 수 (정점 id 0..n-1)
        edges: (u, v) 쌍 목록

    Returns:
        Graph: 생성된 그래프

    Raises:
        GraphInputError: self-loop, 범위 밖 정점, 중복 간선
    """
    if n < 0:
        raise GraphInputError(f"정점 수는 0 이상이어야 합니다: {n}")

    adj = [set() for _ in range(n)]
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"범위 밖 정점: ({u}, {v}), n={n}", pair=(u, v))
        if u == v:
            raise GraphInputError(f"self-loop 간선: ({u}, {v})", pair=(u, v))
        if v in adj[u]:
            raise GraphInputError(f"중복 간선: ({u}, {v})", pair=(u, v))
        adj[u].add(v)
        adj[v].add(u)

    return Graph(n, tuple(frozenset(nbrs) for nbrs in adj))


def graph_from_networkx(nxg: nx.Graph) -> Graph:
    """networkx 그래프 변환 (정렬된 노드 순서대로 0..n-1 재번호)"""
    index = {node: i for i, node in enumerate(sorted(nxg.nodes()))}
    return build_graph(len(index), [(index[u], index[v]) for u, v in nxg.edges()])


def components(g: Graph) -> List[VertexSet]:
    """연결 요소 목록 (각 요소 정렬, 최소 원소 순)"""
    return sorted(members(mask) for mask in component_masks(g.masks, g.full_mask))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return len(component_masks(g.masks, g.full_mask)) == 1


def is_complete(g: Graph) -> bool:
    return all(len(nbrs) == g.n - 1 for nbrs in g.adj)


def _check_vertices(g: Graph, s: Iterable[int]) -> VertexSet:
    vertices = tuple(sorted(set(s)))
    for v in vertices:
        if not 0 <= v < g.n:
            raise GraphInputError(f"범위 밖 정점: {v}, n={g.n}", pair=(v, v))
    return vertices


def induced_subgraph(g: Graph, s: Iterable[int]) -> Tuple[Graph, VertexSet]:
    """
    s 로 유도된 부분그래프를 반환합니다.

    Returns:
        tuple: (부분그래프, mapping) - 부분그래프의 정점 i 는 원래 정점 mapping[i]
    """
    mapping = _check_vertices(g, s)
    index = {v: i for i, v in enumerate(mapping)}
    adj = tuple(
        frozenset(index[u] for u in g.adj[v] if u in index)
        for v in mapping
    )
    return Graph(len(mapping), adj), mapping


def add_universal_vertex(g: Graph) -> Graph:
    """모든 정점과 인접한 새 정점 n 을 추가"""
    adj = [set(nbrs) | {g.n} for nbrs in g.adj]
    adj.append(set(range(g.n)))
    return Graph(g.n + 1, tuple(frozenset(nbrs) for nbrs in adj))


# ============================================================
# chordal 판정
# ============================================================

def _mcs_order(g: Graph) -> List[int]:
    """최대 기수 탐색 방문 순서 (동점 시 작은 정점 우선)"""
    weight = [0] * g.n
    numbered = [False] * g.n
    order = []
    for _ in range(g.n):
        v = max((u for u in range(g.n) if not numbered[u]), key=lambda u: (weight[u], -u))
        numbered[v] = True
        order.append(v)
        for u in g.adj[v]:
            if not numbered[u]:
                weight[u] += 1
    return order


def _hole_through(g: Graph, v: int, x: int, y: int) -> Optional[List[int]]:
    """v 의 비인접 이웃 x, y 를 N[v] 밖으로 잇는 최단 경로로 hole 구성"""
    allowed = g.full_mask & ~g.closed_mask(v) | (1 << x) | (1 << y)
    path = shortest_path(g.masks, allowed, x, y)
    if path is None:
        return None
    return [v] + path


def _find_hole(g: Graph, hint: Optional[Tuple[int, int, int]]) -> List[int]:
    if hint is not None:
        cycle = _hole_through(g, *hint)
        if cycle is not None:
            return cycle

    # 모든 hole 은 어떤 정점 v 와 그 비인접 이웃 쌍을 지나므로 전수 탐색이 항상 성공
    for v in range(g.n):
        nbrs = g.neighbors(v)
        for i, x in enumerate(nbrs):
            for y in nbrs[i + 1:]:
                if g.has_edge(x, y):
                    continue
                cycle = _hole_through(g, v, x, y)
                if cycle is not None:
                    return cycle
    raise AssertionError("PEO 검증 실패했으나 hole 을 찾지 못했습니다")


def is_chordal(g: Graph) -> ChordalityReport:
    """
    chordal 여부를 판정합니다.

    MCS 방문 순서의 역순을 PEO 후보로 두고 검증합니다.
    실패하면 위반 정점과 그 비인접 이웃 쌍에서 hole 을 추출합니다.

    Args:
        g: 입력 그래프

    Returns:
        ChordalityReport: chordal 이면 peo, 아니면 hole(길이 4 이상 유도 cycle)
    """
    peo = _mcs_order(g)[::-1]
    position = {v: i for i, v in enumerate(peo)}

    violation = None
    for v in peo:
        later = [u for u in g.adj[v] if position[u] > position[v]]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        for u in later:
            if u != parent and not g.has_edge(parent, u):
                violation = (v, parent, u)
                break
        if violation:
            break

    if violation is None:
        return ChordalityReport(verdict=True, peo=tuple(peo))

    cycle = _find_hole(g, violation)
    logger.debug(f"chordal 아님: hole {cycle}")
    return ChordalityReport(verdict=False, hole=tuple(sorted(cycle)), cycle=tuple(cycle))


# ============================================================
# split 분할
# ============================================================

def _is_split_pair(g: Graph, clique: VertexSet) -> bool:
    clique_mask = mask_of(clique)
    rest = g.full_mask & ~clique_mask
    for v in clique:
        if (clique_mask & ~(1 << v)) & ~g.masks[v]:
            return False
    return all(not (g.masks[v] & rest) for v in iter_bits(rest))


def split_partition(g: Graph) -> Optional[Tuple[VertexSet, VertexSet]]:
    """
    split 그래프이면 (K, I) 분할을 반환합니다.

    차수 내림차순 d_1..d_n 에서 m = max{i : d_i >= i-1} 로 두고
    sum(d_1..d_m) = m(m-1) + sum(d_{m+1}..d_n) 이면 split 입니다.
    K 는 최대 크기 clique 이며, 동일 크기 분할은 정점 하나 교환으로만 달라지므로
    교환 후보 중 사전순 최소 K 를 고릅니다.

    Returns:
        tuple | None: (K, I) 또는 split 이 아니면 None
    """
    if g.n == 0:
        return (), ()

    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degrees = [g.degree(v) for v in order]
    m = max(i for i in range(1, g.n + 1) if degrees[i - 1] >= i - 1)
    if sum(degrees[:m]) != m * (m - 1) + sum(degrees[m:]):
        return None

    base = tuple(sorted(order[:m]))
    if not _is_split_pair(g, base):
        return None

    best = base
    base_set = set(base)
    for u in base:
        for v in range(g.n):
            if v in base_set:
                continue
            candidate = tuple(sorted(base_set - {u} | {v}))
            if candidate < best and _is_split_pair(g, candidate):
                best = candidate

    independent = tuple(v for v in range(g.n) if v not in set(best))
    return best, independent


# ============================================================
# 유도 부분그래프 탐색
# ============================================================

def find_induced(g: Graph, pattern: Graph, cap: Optional[int] = None) -> Optional[Embedding]:
    """
    pattern 을 g 의 유도 부분그래프로 찾습니다.

    패턴 정점 0, 1, ... 순서로 호스트 정점을 오름차순 배정하는 백트래킹이므로
    처음 찾은 embedding 이 호스트 정점 튜플 기준 사전순 최소입니다.

    Args:
        g: 호스트 그래프
        pattern: 패턴 그래프
        cap: 패턴 정점 수 상한 (기본값 config.FIND_INDUCED_CAP)

    Returns:
        Embedding | None: 패턴 정점 i → 호스트 정점, 없으면 None

    Raises:
        PatternTooLargeError: 패턴이 상한보다 클 때
    """
    cap = config.FIND_INDUCED_CAP if cap is None else cap
    if pattern.n > cap:
        raise PatternTooLargeError(f"패턴 정점 수 {pattern.n}개가 상한({cap})을 초과했습니다")
    if pattern.n > g.n:
        return None

    host = g.masks
    pat = pattern.masks
    eligible = [
        mask_of(h for h in range(g.n) if g.degree(h) >= pattern.degree(i))
        for i in range(pattern.n)
    ]
    assignment: List[int] = []

    def extend(i: int, used: int) -> bool:
        if i == pattern.n:
            return True
        cand = eligible[i] & ~used
        for j, h in enumerate(assignment):
            if (pat[i] >> j) & 1:
                cand &= host[h]
            else:
                cand &= ~host[h]
        for h in iter_bits(cand):
            assignment.append(h)
            if extend(i + 1, used | (1 << h)):
                return True
            assignment.pop()
        return False

    if extend(0, 0):
        return tuple(assignment)
    return None


def is_induced_embedding(g: Graph, pattern: Graph, embedding: Embedding) -> bool:
    """embedding 이 단사이며 인접/비인접을 모두 보존하는지 확인"""
    if len(embedding) != pattern.n or len(set(embedding)) != pattern.n:
        return False
    for i in range(pattern.n):
        for j in range(i + 1, pattern.n):
            if pattern.has_edge(i, j) != g.has_edge(embedding[i], embedding[j]):
                return False
    return True
