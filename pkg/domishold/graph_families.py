#!/usr/bin/env python3
"""
그래프 패밀리 생성 모듈

표준 패밀리(cycle/path/complete/star/edgeless), 금지 패턴(F1/F2/H(i)/kite),
구조적 예제(kstar/ssplit/gchain/appendix71/example51)와
시드 고정 랜덤 생성기(numpy.random.default_rng)를 제공합니다.

사용법:
    from domishold.graph_families import generate_family
    g = generate_family("kstar", 4)
    g = generate_family("random_block", 30, seed=7)
"""

import logging
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Tuple

import numpy as np

from domishold.errors import GraphInputError
from domishold.graph_core import Graph, build_graph
from domishold.hypergraph import Hypergraph, SummabilityWitness, build_hypergraph
from domishold.threshold import WeightedStructure

logger = logging.getLogger(__name__)


# 9-정점 부록 하이퍼그래프의 62개 최소 하이퍼엣지 (1-based 숫자열)
APPENDIX_HYPEREDGES = (
    "169 179 189 258 259 268 269 278 279 289 347 348 349 357 358 359 367 368 369 "
    "378 379 389 456 457 458 459 467 468 469 478 479 489 567 568 569 578 579 589 "
    "678 679 689 789 1234 1235 1236 1237 1238 1239 1245 1246 1247 1248 1249 1256 "
    "1257 1267 1345 1346 1356 2345 2346 2356"
).split()

# 부록 3-summability 인증서 (1-based)
APPENDIX_WITNESS_A = ("169", "258", "347")
APPENDIX_WITNESS_B = ("178", "249", "356")


def _digits(token: str) -> Tuple[int, ...]:
    return tuple(sorted(int(ch) - 1 for ch in token))


def appendix_hypergraph() -> Hypergraph:
    """부록의 9-정점, 62-하이퍼엣지 하이퍼그래프 (정점 v1..v9 → 0..8)"""
    return build_hypergraph(9, [_digits(token) for token in APPENDIX_HYPEREDGES])


def appendix_witness() -> SummabilityWitness:
    """부록 하이퍼그래프의 3-summability 인증서"""
    return SummabilityWitness(
        r=3,
        a=tuple(_digits(token) for token in APPENDIX_WITNESS_A),
        b=tuple(_digits(token) for token in APPENDIX_WITNESS_B),
    )


# ============================================================
# 결정적 패밀리
# ============================================================

def _require(condition: bool, message: str):
    if not condition:
        raise GraphInputError(message)


def _size_param(family: str, value) -> int:
    number = Fraction(str(value))
    _require(number.denominator == 1, f"{family} 의 크기 인수는 정수여야 합니다: {value}")
    return int(number)


def cycle_graph(n: int) -> Graph:
    _require(n >= 3, f"cycle 은 n >= 3 이어야 합니다: {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    _require(n >= 1, f"path 는 n >= 1 이어야 합니다: {n}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    _require(n >= 1, f"complete 는 n >= 1 이어야 합니다: {n}")
    return build_graph(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}, 중심 정점 0"""
    _require(leaves >= 1, f"star 는 잎이 1개 이상이어야 합니다: {leaves}")
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def edgeless_graph(n: int) -> Graph:
    _require(n >= 0, f"edgeless 는 n >= 0 이어야 합니다: {n}")
    return build_graph(n, [])


def diamond_graph() -> Graph:
    """K4 - e: 중심 1, 2 / 꼭지(tip) 0, 3"""
    return build_graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def two_k2_graph() -> Graph:
    return build_graph(4, [(0, 1), (2, 3)])


def kite_graph() -> Graph:
    """diamond 의 꼭지 3 에 펜던트 4 를 붙인 그래프 (co-fork)"""
    return build_graph(5, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (3, 4)])


def f_pattern(which: int) -> Graph:
    """
    금지 패턴 F1 / F2

    정점: t1'=0, c1=1, c1'=2, c2=3, c2'=4, t2'=5
    삼각형 {t1', c1, c1'} 과 {t2', c2, c2'} 에 중심 간 교차 간선을 더합니다.
    F2 는 네 중심이 clique (10 간선), F1 은 c1'-c2' 를 뺀 diamond (9 간선).
    """
    _require(which in (1, 2), f"F 패턴은 1 또는 2 입니다: {which}")
    edges = [(0, 1), (0, 2), (1, 2), (3, 5), (4, 5), (3, 4), (1, 3), (1, 4), (2, 3)]
    if which == 2:
        edges.append((2, 4))
    return build_graph(6, edges)


def h_pattern(i: int) -> Graph:
    """
    금지 패턴 H(i): 두 diamond 를 길이 i 유도 경로로 연결

    정점: x1=0 (꼭지), x2=1, x3=2 (중심), y1..yi = 3..i+2,
          z2=i+3, z3=i+4 (중심), z1=i+5 (꼭지)
    y1 은 x-diamond 의 두 번째 꼭지, yi 는 z-diamond 의 두 번째 꼭지입니다.
    """
    _require(i >= 1, f"H(i) 는 i >= 1 이어야 합니다: {i}")
    x1, x2, x3 = 0, 1, 2
    ys = list(range(3, 3 + i))
    z2, z3, z1 = 3 + i, 4 + i, 5 + i
    edges = [(x1, x2), (x1, x3), (x2, x3), (x2, ys[0]), (x3, ys[0])]
    edges += [(ys[k], ys[k + 1]) for k in range(i - 1)]
    edges += [(z2, z3), (z1, z2), (z1, z3), (ys[-1], z2), (ys[-1], z3)]
    return build_graph(6 + i, edges)


def example51_graph() -> Graph:
    """C4 (v1..v4 = 0..3) + v4 에 펜던트 v5 = 4"""
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)])


def kstar_graph(n: int) -> Graph:
    """
    K_n 의 모든 간선에 삼각형을 붙인 그래프

    u_i = i-1 (0..n-1), 꼭지 v_ij (i<j) 는 사전순으로 n 부터 번호를 매깁니다.
    """
    _require(n >= 2, f"kstar 는 n >= 2 이어야 합니다: {n}")
    edges = list(combinations(range(n), 2))
    tip = n
    for u, v in combinations(range(n), 2):
        edges += [(u, tip), (v, tip)]
        tip += 1
    return build_graph(tip, edges)


def ssplit_graph(n: int) -> Graph:
    """
    clique u_1..u_n (0..n-1) + 독립집합 v_1..v_n (n..2n-1)
    u_i 는 v_i 를 제외한 모든 v_j 와 인접
    """
    _require(n >= 2, f"ssplit 은 n >= 2 이어야 합니다: {n}")
    edges = list(combinations(range(n), 2))
    edges += [(i, n + j) for i in range(n) for j in range(n) if i != j]
    return build_graph(2 * n, edges)


def gchain_graph(n: int) -> Graph:
    """
    n 개의 P4 (x, a_i, b_i, y) 의 양 끝을 x, y 로 합치고 a_i, b_i 마다 펜던트를 붙인 그래프

    x=0, y=1, a_i=2+4(i-1), b_i=a_i+1, a_i'=a_i+2, b_i'=a_i+3 (총 4n+2 정점)
    """
    _require(n >= 1, f"gchain 은 n >= 1 이어야 합니다: {n}")
    x, y = 0, 1
    edges = []
    for i in range(n):
        a = 2 + 4 * i
        b, a_pendant, b_pendant = a + 1, a + 2, a + 3
        edges += [(x, a), (a, b), (b, y), (a, a_pendant), (b, b_pendant)]
    return build_graph(4 * n + 2, edges)


def appendix71_graph() -> Graph:
    """9-clique v1..v9 (0..8) + 이웃이 부록 하이퍼엣지인 독립 정점 62개 (9..70)"""
    edges = list(combinations(range(9), 2))
    for offset, token in enumerate(APPENDIX_HYPEREDGES):
        edges += [(v, 9 + offset) for v in _digits(token)]
    return build_graph(9 + len(APPENDIX_HYPEREDGES), edges)


# ============================================================
# 랜덤 생성기 (시드 고정)
# ============================================================

def random_chordal(n: int, seed: Optional[int] = None, density: float = 0.5) -> Graph:
    """
    역 PEO 삽입으로 연결 chordal 그래프 생성

    새 정점은 임의의 기존 정점 하나와, 그 이웃 중 clique 를 이루도록 고른 정점들에 연결됩니다.
    """
    _require(n >= 1, f"random_chordal 은 n >= 1 이어야 합니다: {n}")
    rng = np.random.default_rng(seed)
    adj: List[set] = [set() for _ in range(n)]
    edges = []
    for v in range(1, n):
        anchor = int(rng.integers(v))
        clique = [anchor]
        for u in rng.permutation(sorted(adj[anchor])):
            u = int(u)
            if rng.random() < density and all(u in adj[c] for c in clique):
                clique.append(u)
        for c in clique:
            adj[v].add(c)
            adj[c].add(v)
            edges.append((c, v))
    return build_graph(n, edges)


def random_block(n: int, seed: Optional[int] = None, max_block: int = 4) -> Graph:
    """clique 의 트리 (block graph): 기존 정점 하나를 절단점으로 새 clique 를 붙여 나감"""
    _require(n >= 1, f"random_block 은 n >= 1 이어야 합니다: {n}")
    _require(max_block >= 2, f"max_block 은 2 이상이어야 합니다: {max_block}")
    rng = np.random.default_rng(seed)
    edges = []
    count = 1
    while count < n:
        cut = int(rng.integers(count))
        size = int(rng.integers(2, max_block + 1))
        block = [cut] + list(range(count, min(n, count + size - 1)))
        edges += list(combinations(block, 2))
        count += len(block) - 1
    return build_graph(n, edges)


def _trivially_perfect_edges(vertices: List[int], rng, force_universal: bool) -> List[Tuple[int, int]]:
    if len(vertices) == 1:
        return []
    if force_universal or rng.random() < 0.5:
        top, rest = vertices[0], vertices[1:]
        return [(top, v) for v in rest] + _trivially_perfect_edges(rest, rng, False)
    k = int(rng.integers(1, len(vertices)))
    return (_trivially_perfect_edges(vertices[:k], rng, False)
            + _trivially_perfect_edges(vertices[k:], rng, False))


def random_trivially_perfect(n: int, seed: Optional[int] = None, connected: bool = True) -> Graph:
    """{K1, 서로소 합, 전체 인접 정점 추가} 문법으로 trivially perfect 그래프 생성"""
    _require(n >= 1, f"random_trivially_perfect 는 n >= 1 이어야 합니다: {n}")
    rng = np.random.default_rng(seed)
    return build_graph(n, _trivially_perfect_edges(list(range(n)), rng, connected))


def random_split(n: int, seed: Optional[int] = None, p: float = 0.5, connected: bool = True) -> Graph:
    """clique K = 0..k-1, 독립집합 k..n-1, K-I 간선은 확률 p"""
    _require(n >= 2, f"random_split 은 n >= 2 이어야 합니다: {n}")
    rng = np.random.default_rng(seed)
    k = int(rng.integers(1, n))
    edges = list(combinations(range(k), 2))
    for v in range(k, n):
        nbrs = [u for u in range(k) if rng.random() < p]
        if connected and not nbrs:
            nbrs = [int(rng.integers(k))]
        edges += [(u, v) for u in nbrs]
    return build_graph(n, edges)


def random_connected(n: int, seed: Optional[int] = None, p: float = 0.3) -> Graph:
    """랜덤 신장 트리 + 확률 p 추가 간선"""
    _require(n >= 1, f"random_connected 는 n >= 1 이어야 합니다: {n}")
    rng = np.random.default_rng(seed)
    edges = {(int(rng.integers(v)), v) for v in range(1, n)}
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < p:
            edges.add((u, v))
    return build_graph(n, sorted(edges))


# ============================================================
# 이름 기반 생성
# ============================================================

_FIXED = {
    "diamond": diamond_graph,
    "2k2": two_k2_graph,
    "kite": kite_graph,
    "f1": lambda: f_pattern(1),
    "f2": lambda: f_pattern(2),
    "example51": example51_graph,
    "appendix71": appendix71_graph,
}

_SIZED = {
    "cycle": cycle_graph,
    "path": path_graph,
    "complete": complete_graph,
    "star": star_graph,
    "edgeless": edgeless_graph,
    "kstar": kstar_graph,
    "ssplit": ssplit_graph,
    "gchain": gchain_graph,
    "h": h_pattern,
}

_RANDOM = {
    "random_chordal": random_chordal,
    "random_block": random_block,
    "random_trivially_perfect": random_trivially_perfect,
    "random_split": random_split,
    "random_connected": random_connected,
}

FAMILY_NAMES = tuple(sorted(list(_FIXED) + list(_SIZED) + list(_RANDOM)))


def generate_family(family: str, *params, seed: Optional[int] = None) -> Graph:
    """
    이름으로 그래프 패밀리를 생성합니다.

    Args:
        family: 패밀리 이름 (대소문자 무시, FAMILY_NAMES 참조)
        *params: 크기 등 패밀리별 인수
        seed: 랜덤 패밀리 시드

    Returns:
        Graph: 생성된 그래프

    Raises:
        GraphInputError: 알 수 없는 패밀리 또는 잘못된 인수
    """
    name = family.lower()
    try:
        if name in _FIXED:
            _require(not params, f"{family} 는 인수를 받지 않습니다")
            return _FIXED[name]()
        if name in _SIZED:
            _require(len(params) == 1, f"{family} 는 크기 인수 하나가 필요합니다")
            return _SIZED[name](_size_param(family, params[0]))
        if name in _RANDOM:
            _require(len(params) >= 1, f"{family} 는 크기 인수가 필요합니다")
            return _RANDOM[name](_size_param(family, params[0]), seed, *params[1:])
    except (TypeError, ValueError) as e:
        if isinstance(e, GraphInputError):
            raise
        raise GraphInputError(f"{family} 인수 오류: {params} ({e})") from e

    raise GraphInputError(f"알 수 없는 그래프 패밀리: {family}")


def known_structure(family: str, n: Optional[int] = None) -> WeightedStructure:
    """
    패밀리별로 알려진 CD 구조를 반환합니다.

    - complete(n): 모든 가중치 1, t=1
    - example51: w=(1,0,1,2,0), t=3
    - kstar(n): clique 정점 1, 꼭지 0, t=n-1
    - gchain(n): w(x)=w(y)=1, w(a_i)=w(b_i)=2, 펜던트 0, t=4n+1
    """
    name = family.lower()
    if name == "complete":
        return WeightedStructure.from_values([1] * n, 1, flavor="cd")
    if name == "example51":
        return WeightedStructure.from_values([1, 0, 1, 2, 0], 3, flavor="cd")
    if name == "kstar":
        total = n + n * (n - 1) // 2
        return WeightedStructure.from_values([1] * n + [0] * (total - n), n - 1, flavor="cd")
    if name == "gchain":
        values = [1, 1]
        for _ in range(n):
            values += [2, 2, 0, 0]
        return WeightedStructure.from_values(values, 4 * n + 1, flavor="cd")
    raise GraphInputError(f"알려진 구조가 없는 패밀리: {family}")


def forbidden_pattern(name: str) -> Graph:
    """인증서 패턴 이름 (F1, F2, H(i), kite, diamond) → 패턴 그래프"""
    key = name.strip().lower()
    if key in ("f1", "f2"):
        return f_pattern(int(key[1]))
    if key.startswith("h(") and key.endswith(")"):
        return h_pattern(int(key[2:-1]))
    if key in ("kite", "diamond"):
        return _FIXED[key]()
    raise GraphInputError(f"알 수 없는 패턴 이름: {name}")
