#!/usr/bin/env python3
"""
domishold 명령행 인터페이스

종료 코드:
    0 = 양성 판정 / 성공
    1 = 음성 판정
    2 = 사용법 또는 파일 형식 오류
    3 = 분리집합 예산 / 탐색 상한 초과
"""

import argparse
import logging
import sys
from pathlib import Path

from domishold import file_formats as ff
from domishold.config import config
from domishold.connected_domination import (
    recognize_cd,
    recognize_hereditarily_cd,
    recognize_td,
    enumerate_min_cds,
    solve_wcds,
    verify_structure,
)
from domishold.errors import DomisholdError
from domishold.graph_core import is_chordal, split_partition
from domishold.graph_families import FAMILY_NAMES, generate_family
from domishold.hypergraph import (
    check_family_property,
    minimal_transversals,
    split_incidence_graph,
    summability_search,
    verify_summability_witness,
)
from domishold.separators import cutset_hypergraph, minimal_cutsets, minimal_separators
from domishold.threshold import is_threshold, verify_separating_structure

logger = logging.getLogger(__name__)


def _emit(text: str, output=None):
    """output 이 있으면 파일로, 없으면 stdout 으로"""
    if output:
        Path(output).write_text(text, encoding="utf-8")
        logger.info(f"저장 완료: {output}")
    else:
        sys.stdout.write(text)


def _parse_param(token: str):
    try:
        return int(token)
    except ValueError:
        return float(token)


def _format_refutation(refutation) -> str:
    if refutation is None:
        return ""
    lines = [f"refutation {refutation.kind}"]
    if refutation.kind == "incomparable_pair":
        i, j = refutation.pair
        lines.append(f"pair {i} {j}")
        return "\n".join(lines) + "\n" + ff.format_witness(refutation.witness)
    lines.append(f"rows {len(refutation.rows)}")
    return "\n".join(lines) + "\n"


# ============================================================
# generate
# ============================================================

def cmd_generate(args) -> int:
    params = [_parse_param(token) for token in args.params]
    g = generate_family(args.family, *params, seed=args.seed)
    logger.info(f"[{args.family}] 생성 완료: 정점 {g.n}개, 간선 {g.m}개")
    _emit(ff.format_graph(g), args.output)
    return 0


# ============================================================
# graph
# ============================================================

def cmd_graph_recognize(args) -> int:
    g = ff.read_graph(args.file)
    kind = args.kind

    if kind in ("cd", "td"):
        report = recognize_cd(g) if kind == "cd" else recognize_td(g)
        if args.json:
            print(ff.dumps(report))
        else:
            sys.stdout.write(report.verdict + "\n")
            if report.structure is not None:
                sys.stdout.write(ff.format_structure(report.structure))
            sys.stdout.write(_format_refutation(report.refutation))
        return 0 if report.positive else 1

    if kind == "hereditary-cd":
        report = recognize_hereditarily_cd(g)
        if args.json:
            print(ff.dumps(report))
        else:
            print("hereditary-cd" if report.verdict else "not_hereditary-cd")
            if report.hole is not None:
                print("hole " + " ".join(map(str, report.hole)))
            if report.embedding is not None:
                print(f"pattern {report.pattern_name}")
                print("embedding " + " ".join(map(str, report.embedding)))
        return 0 if report.verdict else 1

    if kind == "chordal":
        report = is_chordal(g)
        if args.json:
            print(ff.dumps(report))
        else:
            print("chordal" if report.verdict else "not_chordal")
            if report.verdict:
                print("peo " + " ".join(map(str, report.peo)))
            else:
                print("hole " + " ".join(map(str, report.cycle)))
        return 0 if report.verdict else 1

    partition = split_partition(g)
    if args.json:
        print(ff.dumps({"verdict": partition is not None,
                        "clique": partition[0] if partition else None,
                        "independent": partition[1] if partition else None}))
    else:
        print("split" if partition else "not_split")
        if partition:
            print("K " + " ".join(map(str, partition[0])))
            print("I " + " ".join(map(str, partition[1])))
    return 0 if partition is not None else 1


def _list_sets(sets, args, costs=None) -> int:
    sys.stdout.write(ff.format_sets(sets))
    if getattr(args, "csv", None):
        ff.export_sets_csv(sets, args.csv, costs)
    return 0


def cmd_graph_separators(args) -> int:
    return _list_sets(minimal_separators(ff.read_graph(args.file)), args)


def cmd_graph_cutsets(args) -> int:
    return _list_sets(minimal_cutsets(ff.read_graph(args.file)), args)


def cmd_graph_cutset_hypergraph(args) -> int:
    _emit(ff.format_hypergraph(cutset_hypergraph(ff.read_graph(args.file))), args.output)
    return 0


def cmd_graph_enumerate(args) -> int:
    return _list_sets(enumerate_min_cds(ff.read_graph(args.file)), args)


def cmd_graph_solve_wcds(args) -> int:
    g = ff.read_graph(args.file)
    costs = ff.read_costs(args.costs)
    solution = solve_wcds(g, costs)
    if args.json:
        print(ff.dumps(solution))
    else:
        print("set " + " ".join(map(str, solution.set)))
        print(f"cost {ff.format_fraction(solution.cost)}")
        print(f"enumerated {solution.enumerated_count}")
    return 0


# ============================================================
# hypergraph
# ============================================================

def cmd_hypergraph_threshold(args) -> int:
    report = is_threshold(ff.read_hypergraph(args.file))
    if args.json:
        print(ff.dumps(report))
    else:
        print("threshold" if report.verdict else "not_threshold")
        if report.structure is not None:
            sys.stdout.write(ff.format_structure(report.structure))
        sys.stdout.write(_format_refutation(report.refutation))
    return 0 if report.verdict else 1


def cmd_hypergraph_dualize(args) -> int:
    _emit(ff.format_hypergraph(minimal_transversals(ff.read_hypergraph(args.file))), args.output)
    return 0


def cmd_hypergraph_check(args) -> int:
    result = check_family_property(ff.read_hypergraph(args.file), args.prop.replace("-", "_"))
    print("holds" if result.holds else "violated")
    if result.pair:
        e, f = result.pair
        print("e" + "".join(f" {v}" for v in e))
        print("f" + "".join(f" {v}" for v in f))
    return 0 if result.holds else 1


def cmd_hypergraph_summable(args) -> int:
    witness = summability_search(ff.read_hypergraph(args.file), args.k)
    if args.json:
        print(ff.dumps({"summable": witness is not None, "witness": witness}))
    elif witness is None:
        print(f"{args.k}-asummable")
    else:
        print(f"summable {witness.r}")
        sys.stdout.write(ff.format_witness(witness))
    return 0 if witness is not None else 1


def cmd_hypergraph_split_incidence(args) -> int:
    g, labeling = split_incidence_graph(ff.read_hypergraph(args.file))
    text = "".join(f"# {v}: {' '.join(map(str, edge))}\n" for v, edge in labeling.items())
    _emit(text + ff.format_graph(g), args.output)
    return 0


# ============================================================
# verify
# ============================================================

def cmd_verify_structure(args) -> int:
    if args.flavor == "separating":
        h = ff.read_hypergraph(args.file)
        s = ff.read_structure(args.structure, h.n, "separating")
        valid = verify_separating_structure(h, s)
    else:
        g = ff.read_graph(args.file)
        s = ff.read_structure(args.structure, g.n, args.flavor)
        valid = verify_structure(g, s)
    print("valid" if valid else "invalid")
    return 0 if valid else 1


def cmd_verify_witness(args) -> int:
    valid = verify_summability_witness(ff.read_hypergraph(args.file), ff.read_witness(args.witness))
    print("valid" if valid else "invalid")
    return 0 if valid else 1


def cmd_scenarios(args) -> int:
    from domishold.scenarios import run_scenarios
    return run_scenarios(only=args.only, keep_going=args.keep_going, export_csv=args.csv)


# ============================================================
# parser
# ============================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domishold",
        description="connected-domishold 그래프 인식, threshold 하이퍼그래프 판정, 최소 CD 집합 열거 도구",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
사용 예시:
  # 부록 71-정점 그래프 생성 후 CD 판정 (종료 코드 1 = CD 아님)
  domishold generate appendix71 -o g.txt
  domishold graph recognize cd g.txt

  # P6 의 최소 CD 집합 열거 (출력: 1 2 3 4)
  domishold generate path 6 -o p.txt
  domishold graph enumerate-min-cds p.txt

  # 1-Sperner 검사
  domishold hypergraph check one-sperner h.txt

  # 시나리오 일괄 실행
  domishold scenarios --csv
        """,
    )
    parser.add_argument("--log-level", default=config.LOG_LEVEL, help=f"로그 레벨 (기본값: {config.LOG_LEVEL})")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="그래프 패밀리 생성")
    gen.add_argument("family", help=f"패밀리 이름: {', '.join(FAMILY_NAMES)}")
    gen.add_argument("params", nargs="*", help="패밀리 인수 (크기 등)")
    gen.add_argument("--seed", type=int, default=None, help="랜덤 패밀리 시드")
    gen.add_argument("-o", "--output", help="출력 파일 (기본값: stdout)")
    gen.set_defaults(handler=cmd_generate)

    graph = sub.add_parser("graph", help="그래프 명령").add_subparsers(dest="graph_command", required=True)

    rec = graph.add_parser("recognize", help="cd / td / hereditary-cd / chordal / split 판정")
    rec.add_argument("kind", choices=["cd", "td", "hereditary-cd", "chordal", "split"])
    rec.add_argument("file")
    rec.add_argument("--json", action="store_true", help="JSON 출력")
    rec.set_defaults(handler=cmd_graph_recognize)

    for name, handler, help_text in (
        ("separators", cmd_graph_separators, "최소 분리집합 목록"),
        ("cutsets", cmd_graph_cutsets, "최소 cutset 목록"),
        ("enumerate-min-cds", cmd_graph_enumerate, "최소 연결 지배집합 목록"),
    ):
        cmd = graph.add_parser(name, help=help_text)
        cmd.add_argument("file")
        cmd.add_argument("--csv", help="CSV 내보내기 경로")
        cmd.set_defaults(handler=handler)

    mch = graph.add_parser("cutset-hypergraph", help="cutset 하이퍼그래프 출력")
    mch.add_argument("file")
    mch.add_argument("-o", "--output")
    mch.set_defaults(handler=cmd_graph_cutset_hypergraph)

    wcds = graph.add_parser("solve-wcds", help="최소 비용 연결 지배집합")
    wcds.add_argument("file")
    wcds.add_argument("--costs", required=True, help="비용 파일 (w <v> <p[/q]>)")
    wcds.add_argument("--json", action="store_true")
    wcds.set_defaults(handler=cmd_graph_solve_wcds)

    hyper = sub.add_parser("hypergraph", help="하이퍼그래프 명령").add_subparsers(dest="hypergraph_command", required=True)

    thr = hyper.add_parser("threshold", help="threshold 판정")
    thr.add_argument("file")
    thr.add_argument("--json", action="store_true")
    thr.set_defaults(handler=cmd_hypergraph_threshold)

    dual = hyper.add_parser("dualize", help="blocker (최소 transversal) 계산")
    dual.add_argument("file")
    dual.add_argument("-o", "--output")
    dual.set_defaults(handler=cmd_hypergraph_dualize)

    check = hyper.add_parser("check", help="sperner / one-sperner / dually-sperner 검사")
    check.add_argument("prop", choices=["sperner", "one-sperner", "dually-sperner"])
    check.add_argument("file")
    check.set_defaults(handler=cmd_hypergraph_check)

    summ = hyper.add_parser("summable", help="k-summability 인증서 탐색")
    summ.add_argument("-k", type=int, choices=[2, 3], default=2)
    summ.add_argument("file")
    summ.add_argument("--json", action="store_true")
    summ.set_defaults(handler=cmd_hypergraph_summable)

    inc = hyper.add_parser("split-incidence", help="split-incidence 그래프 출력")
    inc.add_argument("file")
    inc.add_argument("-o", "--output")
    inc.set_defaults(handler=cmd_hypergraph_split_incidence)

    verify = sub.add_parser("verify", help="인증서 재검증").add_subparsers(dest="verify_command", required=True)

    vs = verify.add_parser("structure", help="가중치 구조 검증")
    vs.add_argument("flavor", choices=["cd", "td", "separating"])
    vs.add_argument("file", help="그래프 파일 (cd/td) 또는 하이퍼그래프 파일 (separating)")
    vs.add_argument("structure", help="구조 파일")
    vs.set_defaults(handler=cmd_verify_structure)

    vw = verify.add_parser("witness", help="summability 인증서 검증")
    vw.add_argument("file", help="하이퍼그래프 파일")
    vw.add_argument("witness", help="인증서 파일 (a/b 줄)")
    vw.set_defaults(handler=cmd_verify_witness)

    scen = sub.add_parser("scenarios", help="검증 시나리오 일괄 실행")
    scen.add_argument("--only", type=int, nargs="+", help="실행할 시나리오 번호")
    scen.add_argument("--csv", action="store_true", help="결과 요약 CSV 저장")
    scen.add_argument("--keep-going", action="store_true", help="실패해도 다음 시나리오 계속 실행")
    scen.set_defaults(handler=cmd_scenarios)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, str(args.log_level).upper(), logging.INFO),
        format='%(asctime)s - %(levelname)s - %(message)s'
    )

    try:
        return args.handler(args)
    except DomisholdError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except OSError as e:
        logger.error(f"파일 오류: {e}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
