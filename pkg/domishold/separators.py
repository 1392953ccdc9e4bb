#!/usr/bin/env python3
"""
최소 분리집합 / 최소 cutset 모듈

minimal_separators 는 출력 다항식 생성 방식으로 모든 최소 정점 분리집합을 구합니다.
    1. 각 정점 v 와 G - N[v] 의 요소 C 에 대해 N(C) 를 시드로 추가
    2. 찾은 S 와 x ∈ S 에 대해 G - (S ∪ N(x)) 의 요소 C 마다 N(C) 추가
    3. 새 분리집합이 없을 때까지 반복

분리집합 수가 SEPARATOR_BUDGET 을 넘으면 SeparatorBudgetExceeded 를 발생시킵니다.
"""

import logging
import time
from collections import deque
from typing import List, Optional

from domishold.config import config
from domishold.errors import DisconnectedGraphError, GraphInputError, SeparatorBudgetExceeded
from domishold.graph_core import (
    Graph,
    VertexSet,
    component_masks,
    is_connected,
    iter_bits,
    mask_of,
    members,
    neighborhood_mask,
)
from domishold.hypergraph import Hypergraph

logger = logging.getLogger(__name__)


def _require_connected(g: Graph, operation: str):
    if not is_connected(g):
        raise DisconnectedGraphError(f"{operation}: 연결 그래프가 필요합니다 (n={g.n}, m={g.m})")


def _sort_key(mask: int):
    vertices = members(mask)
    return len(vertices), vertices


def separator_masks(g: Graph, budget: Optional[int] = None) -> List[int]:
    """최소 분리집합 비트마스크 목록 (크기, 사전순 정렬)"""
    _require_connected(g, "minimal_separators")
    budget = config.SEPARATOR_BUDGET if budget is None else budget

    masks = g.masks
    full = g.full_mask
    found = set()
    queue = deque()

    def add_components(removed: int):
        for comp in component_masks(masks, full & ~removed):
            separator = neighborhood_mask(masks, comp)
            if separator and separator not in found:
                found.add(separator)
                queue.append(separator)
                if len(found) > budget:
                    raise SeparatorBudgetExceeded(budget, len(found))

    start_time = time.time()
    for v in range(g.n):
        add_components(g.closed_mask(v))

    while queue:
        separator = queue.popleft()
        for x in iter_bits(separator):
            add_components(separator | masks[x])

    elapsed_time = time.time() - start_time
    logger.debug(f"최소 분리집합 {len(found)}개 (n={g.n}, 소요 시간: {elapsed_time:.2f}초)")
    return sorted(found, key=_sort_key)


def minimal_separators(g: Graph, budget: Optional[int] = None) -> List[VertexSet]:
    """
    모든 비인접 쌍 u, v 에 대한 최소 u,v-분리집합 전체

    Args:
        g: 연결 그래프
        budget: 분리집합 개수 예산 (기본값 config.SEPARATOR_BUDGET)

    Returns:
        list: (크기, 사전순) 정렬된 VertexSet 목록

    Raises:
        DisconnectedGraphError: 비연결 그래프
        SeparatorBudgetExceeded: 예산 초과
    """
    return [members(mask) for mask in separator_masks(g, budget)]


def is_minimal_uv_separator(g: Graph, s, u: int, v: int) -> bool:
    """
    s 가 최소 u,v-분리집합인지 판정합니다.

    u, v 가 G - s 의 서로 다른 요소에 있고, s 의 모든 정점이
    u-요소와 v-요소 양쪽에 이웃을 가지면 참입니다.

    Raises:
        GraphInputError: u == v, u 또는 v 가 s 에 속함, u 와 v 가 인접
    """
    s_mask = mask_of(s)
    if u == v or (s_mask >> u) & 1 or (s_mask >> v) & 1 or g.has_edge(u, v):
        raise GraphInputError(f"is_minimal_uv_separator 전제 조건 위반: u={u}, v={v}, s={sorted(s)}", pair=(u, v))

    comps = component_masks(g.masks, g.full_mask & ~s_mask)
    cu = next(c for c in comps if (c >> u) & 1)
    cv = next(c for c in comps if (c >> v) & 1)
    if cu == cv:
        return False
    return all(g.masks[x] & cu and g.masks[x] & cv for x in iter_bits(s_mask))


def minimal_cutset_masks(g: Graph, budget: Optional[int] = None) -> List[int]:
    kept: List[int] = []
    for separator in separator_masks(g, budget):
        if not any(k & ~separator == 0 for k in kept):
            kept.append(separator)
    return kept


def minimal_cutsets(g: Graph, budget: Optional[int] = None) -> List[VertexSet]:
    """최소 분리집합 중 다른 분리집합을 포함하지 않는 것 (= 최소 cutset)"""
    return [members(mask) for mask in minimal_cutset_masks(g, budget)]


def cutset_hypergraph(g: Graph, budget: Optional[int] = None) -> Hypergraph:
    """하이퍼엣지가 정확히 최소 cutset 인 하이퍼그래프 MCH(G)"""
    return Hypergraph(g.n, tuple(minimal_cutsets(g, budget)))
