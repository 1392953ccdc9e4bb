#!/usr/bin/env python3
"""
파일 형식 / 직렬화 모듈

텍스트 형식 (줄 단위, '#' 이후는 주석):
    그래프:      graph <n>        + 간선마다  e <u> <v>      (0-based, u < v, 정렬)
    하이퍼그래프: hypergraph <n>   + 간선마다  h <v1> <v2> ... (정렬)
    가중치/비용:  w <v> <p[/q]>    (구조 파일은 flavor <name>, t <p[/q]>, degenerate 추가)
    인증서:      a <v...> / b <v...>

JSON 출력은 json.dumps(..., ensure_ascii=False, indent=2) 를 사용하며
유리수는 "p/q" (정수는 "p") 문자열로 직렬화합니다.
CSV 내보내기는 pandas DataFrame.to_csv(index=False, encoding='utf-8-sig') 를 사용합니다.
"""

import dataclasses
import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from domishold.errors import FormatError
from domishold.graph_core import Graph, VertexSet, build_graph
from domishold.hypergraph import Hypergraph, SummabilityWitness, build_hypergraph
from domishold.threshold import FLAVORS, WeightedStructure

logger = logging.getLogger(__name__)


# ============================================================
# 유리수
# ============================================================

def format_fraction(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(token: str, path="<string>", line_no=0) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise FormatError(path, line_no, token, "유리수 형식이 아닙니다 (p 또는 p/q)")


# ============================================================
# 줄 파서
# ============================================================

def _content_lines(text: str):
    """(줄 번호, 토큰 목록) - 주석과 빈 줄 제외"""
    for line_no, raw in enumerate(text.splitlines(), 1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield line_no, content.split()


def _parse_int(token: str, path, line_no) -> int:
    try:
        return int(token)
    except ValueError:
        raise FormatError(path, line_no, token, "정수가 아닙니다")


def _parse_header(lines, keyword: str, path) -> Tuple[int, list]:
    lines = list(lines)
    if not lines:
        raise FormatError(path, 0, "", f"'{keyword} <n>' 헤더가 없습니다")
    line_no, tokens = lines[0]
    if tokens[0] != keyword or len(tokens) != 2:
        raise FormatError(path, line_no, " ".join(tokens), f"'{keyword} <n>' 헤더가 필요합니다")
    return _parse_int(tokens[1], path, line_no), lines[1:]


# ============================================================
# 그래프
# ============================================================

def parse_graph(text: str, path="<string>") -> Graph:
    n, lines = _parse_header(_content_lines(text), "graph", path)
    edges = []
    for line_no, tokens in lines:
        if tokens[0] != "e" or len(tokens) != 3:
            raise FormatError(path, line_no, " ".join(tokens), "'e <u> <v>' 형식이 필요합니다")
        pair = (_parse_int(tokens[1], path, line_no), _parse_int(tokens[2], path, line_no))
        if pair[0] == pair[1]:
            raise FormatError(path, line_no, " ".join(tokens), "self-loop")
        if not all(0 <= v < n for v in pair):
            raise FormatError(path, line_no, " ".join(tokens), f"범위 밖 정점 (n={n})")
        edges.append((pair, line_no, tokens))

    seen = set()
    for (u, v), line_no, tokens in edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(path, line_no, " ".join(tokens), "중복 간선")
        seen.add(key)
    return build_graph(n, [pair for pair, _, _ in edges])


def format_graph(g: Graph) -> str:
    lines = [f"graph {g.n}"] + [f"e {u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"), str(path))


def write_graph(g: Graph, path):
    Path(path).write_text(format_graph(g), encoding="utf-8")


# ============================================================
# 하이퍼그래프
# ============================================================

def parse_hypergraph(text: str, path="<string>") -> Hypergraph:
    n, lines = _parse_header(_content_lines(text), "hypergraph", path)
    edges = []
    for line_no, tokens in lines:
        if tokens[0] != "h":
            raise FormatError(path, line_no, " ".join(tokens), "'h <v1> <v2> ...' 형식이 필요합니다")
        edge = [_parse_int(token, path, line_no) for token in tokens[1:]]
        bad = [v for v in edge if not 0 <= v < n]
        if bad:
            raise FormatError(path, line_no, str(bad[0]), f"범위 밖 정점 (n={n})")
        edges.append(edge)
    return build_hypergraph(n, edges)


def format_hypergraph(h: Hypergraph) -> str:
    lines = [f"hypergraph {h.n}"] + ["h" + "".join(f" {v}" for v in edge) for edge in h.edges]
    return "\n".join(lines) + "\n"


def read_hypergraph(path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_text(encoding="utf-8"), str(path))


def write_hypergraph(h: Hypergraph, path):
    Path(path).write_text(format_hypergraph(h), encoding="utf-8")


# ============================================================
# 가중치 / 구조 / 인증서
# ============================================================

def parse_weights(text: str, path="<string>") -> Tuple[Dict[int, Fraction], Optional[Fraction], Optional[str], bool]:
    """
    가중치 파일을 읽습니다.

    Returns:
        tuple: (정점 → 값, t 또는 None, flavor 또는 None, degenerate 여부)
    """
    weights: Dict[int, Fraction] = {}
    threshold = None
    flavor = None
    degenerate = False
    for line_no, tokens in _content_lines(text):
        kind = tokens[0]
        if kind == "w" and len(tokens) == 3:
            v = _parse_int(tokens[1], path, line_no)
            if v in weights:
                raise FormatError(path, line_no, tokens[1], "중복 정점")
            weights[v] = parse_fraction(tokens[2], path, line_no)
        elif kind == "t" and len(tokens) == 2:
            threshold = parse_fraction(tokens[1], path, line_no)
        elif kind == "flavor" and len(tokens) == 2:
            if tokens[1] not in FLAVORS:
                raise FormatError(path, line_no, tokens[1], f"알 수 없는 구조 종류 (가능: {', '.join(FLAVORS)})")
            flavor = tokens[1]
        elif kind == "degenerate" and len(tokens) == 1:
            degenerate = True
        else:
            raise FormatError(path, line_no, " ".join(tokens), "'w <v> <p[/q]>' 또는 't <p[/q]>' 형식이 필요합니다")
    return weights, threshold, flavor, degenerate


def read_costs(path) -> Dict[int, Fraction]:
    weights, _, _, _ = parse_weights(Path(path).read_text(encoding="utf-8"), str(path))
    return weights


def parse_structure(text: str, n: int, flavor: Optional[str] = None, path="<string>") -> WeightedStructure:
    """구조 파일 → WeightedStructure (빠진 정점 가중치는 0)"""
    weights, threshold, file_flavor, degenerate = parse_weights(text, path)
    if threshold is None:
        raise FormatError(path, 0, "", "'t <p[/q]>' 줄이 없습니다")
    bad = [v for v in weights if not 0 <= v < n]
    if bad:
        raise FormatError(path, 0, str(bad[0]), f"범위 밖 정점 (n={n})")
    flavor = flavor or file_flavor or "separating"
    values = [weights.get(v, Fraction(0)) for v in range(n)]
    return WeightedStructure.from_values(values, threshold, flavor=flavor, degenerate=degenerate)


def read_structure(path, n: int, flavor: Optional[str] = None) -> WeightedStructure:
    return parse_structure(Path(path).read_text(encoding="utf-8"), n, flavor, str(path))


def format_structure(s: WeightedStructure) -> str:
    lines = [f"flavor {s.flavor}"]
    if s.degenerate:
        lines.append("degenerate")
    lines += [f"w {v} {format_fraction(w)}" for v, w in enumerate(s.weights)]
    lines.append(f"t {format_fraction(s.threshold)}")
    return "\n".join(lines) + "\n"


def parse_witness(text: str, path="<string>") -> SummabilityWitness:
    a, b = [], []
    for line_no, tokens in _content_lines(text):
        if tokens[0] not in ("a", "b"):
            raise FormatError(path, line_no, tokens[0], "'a <v...>' 또는 'b <v...>' 형식이 필요합니다")
        part = tuple(sorted(_parse_int(token, path, line_no) for token in tokens[1:]))
        (a if tokens[0] == "a" else b).append(part)
    if len(a) != len(b) or len(a) < 2:
        raise FormatError(path, 0, "", f"a 줄과 b 줄이 같은 수(2 이상)여야 합니다: a={len(a)}, b={len(b)}")
    return SummabilityWitness(r=len(a), a=tuple(a), b=tuple(b))


def read_witness(path) -> SummabilityWitness:
    return parse_witness(Path(path).read_text(encoding="utf-8"), str(path))


def format_witness(w: SummabilityWitness) -> str:
    lines = ["a" + "".join(f" {v}" for v in part) for part in w.a]
    lines += ["b" + "".join(f" {v}" for v in part) for part in w.b]
    return "\n".join(lines) + "\n"


def format_sets(sets: Iterable[VertexSet]) -> str:
    return "".join(" ".join(str(v) for v in s) + "\n" for s in sets)


# ============================================================
# JSON / CSV
# ============================================================

def to_jsonable(obj):
    """dataclass / Graph / Hypergraph / Fraction 을 JSON 으로 바꿀 수 있는 값으로 변환"""
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str, float)):
        return obj
    if isinstance(obj, Graph):
        return {"n": obj.n, "edges": [list(e) for e in obj.edges()]}
    if isinstance(obj, Hypergraph):
        return {"n": obj.n, "edges": [list(e) for e in obj.edges]}
    if dataclasses.is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    raise TypeError(f"JSON 변환 불가 타입: {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_jsonable(obj), ensure_ascii=False, indent=2)


def sets_to_dataframe(sets: Sequence[VertexSet], costs: Optional[Sequence[Fraction]] = None) -> pd.DataFrame:
    """집합 목록 → DataFrame (index, size, members[, cost])"""
    records = []
    for idx, s in enumerate(sets, 1):
        record = {
            "index": idx,
            "size": len(s),
            "members": " ".join(str(v) for v in s),
        }
        if costs is not None:
            record["cost"] = format_fraction(sum((Fraction(costs[v]) for v in s), Fraction(0)))
        records.append(record)
    return pd.DataFrame(records, columns=["index", "size", "members"] + (["cost"] if costs is not None else []))


def export_sets_csv(sets: Sequence[VertexSet], path, costs: Optional[Sequence[Fraction]] = None) -> List[dict]:
    df = sets_to_dataframe(sets, costs)
    df.to_csv(path, index=False, encoding="utf-8-sig")
    logger.info(f"CSV 저장 완료: {path} ({len(df)}행)")
    return df.to_dict("records")
