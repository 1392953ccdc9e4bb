"""
domishold

connected-domishold / total-domishold 그래프 인식, threshold 하이퍼그래프 판정,
최소 분리집합과 최소 연결 지배집합 열거, WCDS 풀이를 정확한 유리수 연산으로 수행합니다.
"""

from domishold.connected_domination import (
    CDReport,
    DomisholdReport,
    HereditaryReport,
    WcdsSolution,
    enumerate_min_cds,
    recognize_cd,
    recognize_hereditarily_cd,
    recognize_td,
    solve_wcds,
    verify_dominating,
    verify_structure,
)
from domishold.errors import (
    CapExceededError,
    DisconnectedGraphError,
    DomisholdError,
    FormatError,
    GraphInputError,
    HypergraphInputError,
    PatternTooLargeError,
    SeparatorBudgetExceeded,
    StructureError,
)
from domishold.graph_core import (
    Graph,
    build_graph,
    components,
    find_induced,
    induced_subgraph,
    is_chordal,
    split_partition,
)
from domishold.graph_families import generate_family
from domishold.hypergraph import (
    Hypergraph,
    SummabilityWitness,
    build_hypergraph,
    check_family_property,
    minimal_transversals,
    neighborhood_hypergraph,
    split_incidence_graph,
    summability_search,
)
from domishold.separators import cutset_hypergraph, minimal_cutsets, minimal_separators
from domishold.threshold import WeightedStructure, integralize, is_threshold, strength_preorder

__version__ = "0.1.0"
