#!/usr/bin/env python3
"""
검증 시나리오 실행 스크립트
시나리오를 순차적으로 실행하고, 실패하면 중단합니다 (--keep-going 이면 계속).

순서: 1. C4 → 2. K_n / example51 → 3. kstar → 4. appendix71 → 5. gchain → 6. ssplit → 11. 스케일링

사용법:
    python -m domishold.scenarios [--only 1 4] [--csv] [--keep-going]
"""

import argparse
import logging
import sys
import time
from itertools import combinations

import numpy as np
import pandas as pd

from domishold.config import config
from domishold.connected_domination import (
    enumerate_min_cds,
    is_cd_mask,
    recognize_cd,
    recognize_hereditarily_cd,
    solve_wcds,
    verify_structure,
)
from domishold.errors import DomisholdError
from domishold.graph_core import is_chordal, mask_of
from domishold.graph_families import (
    appendix71_graph,
    appendix_hypergraph,
    appendix_witness,
    complete_graph,
    cycle_graph,
    example51_graph,
    gchain_graph,
    kstar_graph,
    known_structure,
    random_block,
    ssplit_graph,
)
from domishold.hypergraph import check_family_property, summability_search, verify_summability_witness
from domishold.separators import cutset_hypergraph, is_minimal_uv_separator, minimal_cutsets, minimal_separators
from domishold.threshold import is_threshold

logger = logging.getLogger(__name__)


class ScenarioFailure(Exception):
    """시나리오 검사 실패"""


def _check(condition, message: str):
    if not condition:
        raise ScenarioFailure(message)


def brute_force_min_cds(g):
    """모든 부분집합을 확인해 최소 CD 집합을 구합니다 (작은 그래프 전용)"""
    cds = [mask for mask in range(1, 1 << g.n) if is_cd_mask(g, mask)]
    minimal = [s for s in cds if not any(t != s and t & ~s == 0 for t in cds)]
    return sorted(tuple(v for v in range(g.n) if (s >> v) & 1) for s in minimal)


# ============================================================
# 시나리오
# ============================================================

def scenario_c4():
    g = cycle_graph(4)
    report = recognize_cd(g)
    _check(report.verdict == "not_cd", f"C4 판정 오류: {report.verdict}")
    mch = cutset_hypergraph(g)
    witness = summability_search(mch, 2)
    _check(witness is not None, "C4 의 cutset 하이퍼그래프에서 2-summability 인증서를 찾지 못했습니다")
    _check(verify_summability_witness(mch, witness), f"2-summability 인증서 검증 실패: {witness}")
    return f"not_cd, 인증서 A={witness.a} B={witness.b}"


def scenario_complete_and_example51():
    for n in range(3, 7):
        g = complete_graph(n)
        report = recognize_cd(g)
        _check(report.verdict == "cd", f"K{n} 판정 오류: {report.verdict}")
        _check(verify_structure(g, report.structure), f"K{n} 반환 구조 검증 실패")
        _check(verify_structure(g, known_structure("complete", n)), f"K{n} 알려진 구조 검증 실패")

    g = example51_graph()
    report = recognize_cd(g)
    _check(report.verdict == "cd", f"example51 판정 오류: {report.verdict}")
    _check(verify_structure(g, report.structure), "example51 반환 구조 검증 실패")
    _check(verify_structure(g, known_structure("example51")), "example51 알려진 구조 검증 실패")
    return "K3..K6, example51 모두 cd"


def scenario_kstar():
    for n in range(4, 7):
        g = kstar_graph(n)
        report = recognize_cd(g)
        _check(report.verdict == "cd", f"kstar({n}) 판정 오류: {report.verdict}")
        if n <= 5:
            _check(verify_structure(g, known_structure("kstar", n), cap=g.n),
                   f"kstar({n}) 알려진 구조 검증 실패")
        check = check_family_property(cutset_hypergraph(g), "one_sperner")
        _check(not check.holds and check.pair == ((0, 1), (2, 3)),
               f"kstar({n}) one_sperner 위반 쌍 오류: {check}")
        hereditary = recognize_hereditarily_cd(g)
        _check(not hereditary.verdict and hereditary.pattern_name == "F2",
               f"kstar({n}) 유전적 판정 오류: {hereditary}")
    return "kstar(4..6): cd, one_sperner 위반, F2 포함"


def scenario_appendix71():
    g = appendix71_graph()
    mch = cutset_hypergraph(g)
    expected = set(appendix_hypergraph().edges)
    _check(set(mch.edges) == expected,
           f"cutset 하이퍼그래프 불일치: 예상 {len(expected)}개, 실제 {mch.q}개")
    _check(summability_search(mch, 2) is None, "2-summability 인증서가 있으면 안 됩니다")
    _check(verify_summability_witness(mch, appendix_witness()), "부록 3-summability 인증서 검증 실패")
    _check(not is_threshold(mch).verdict, "cutset 하이퍼그래프가 threshold 로 판정되었습니다")
    report = recognize_cd(g)
    _check(report.verdict == "not_cd", f"appendix71 판정 오류: {report.verdict}")
    return f"하이퍼엣지 {mch.q}개 일치, 2-asummable, not threshold, not_cd"


def scenario_gchain():
    for n in range(2, 9):
        g = gchain_graph(n)
        report = recognize_cd(g)
        _check(report.verdict == "cd", f"gchain({n}) 판정 오류: {report.verdict}")
        if n <= 3:
            _check(verify_structure(g, known_structure("gchain", n), cap=g.n),
                   f"gchain({n}) 알려진 구조 검증 실패")
        min_cds = enumerate_min_cds(g)
        _check(len(min_cds) == 2, f"gchain({n}) 최소 CD 집합 수 오류: {len(min_cds)}")
        xy_separators = [
            s for s in minimal_separators(g)
            if 0 not in s and 1 not in s and is_minimal_uv_separator(g, s, 0, 1)
        ]
        _check(len(xy_separators) >= 2 ** n,
               f"gchain({n}) 최소 x,y-분리집합 수 오류: {len(xy_separators)} < {2 ** n}")
    return "gchain(2..8): cd, 최소 CD 집합 2개, x,y-분리집합 >= 2^n"


def scenario_ssplit():
    for n in range(4, 9):
        g = ssplit_graph(n)
        _check(recognize_hereditarily_cd(g).verdict, f"ssplit({n}) 유전적 CD 가 아닙니다")
        min_cds = enumerate_min_cds(g)
        _check(min_cds == list(combinations(range(n), 2)),
               f"ssplit({n}) 최소 CD 집합 오류: {min_cds}")
        if n <= 5:
            _check(brute_force_min_cds(g) == sorted(min_cds), f"ssplit({n}) 전수 비교 불일치")
        nu_c, nu_s = len(min_cds), len(minimal_cutsets(g))
        _check(nu_s <= (g.n - 2) * nu_c and nu_c <= (g.n - 2) * nu_s,
               f"ssplit({n}) 개수 부등식 위반: nu_c={nu_c}, nu_s={nu_s}")
    return "ssplit(4..8): 유전적 CD, 최소 CD 집합 = clique 쌍"


def scenario_scaling():
    g = ssplit_graph(60)
    costs = [i + 1 for i in range(60)] + [100] * 60
    solution = solve_wcds(g, costs)
    _check(solution.set == (0, 1) and solution.cost == 3, f"ssplit(60) WCDS 오류: {solution}")
    _check(solution.enumerated_count == 1770, f"ssplit(60) 최소 CD 집합 수 오류: {solution.enumerated_count}")
    _check(solution.enumerated_count <= g.n * (g.n - 2), "ssplit(60) 개수 상한 위반")

    block = random_block(200, seed=11)
    _check(is_chordal(block).verdict, "random_block(200) 이 chordal 이 아닙니다")
    _check(recognize_cd(block).verdict == "cd", "random_block(200) 이 cd 가 아닙니다")
    rng = np.random.default_rng(11)
    block_costs = [int(c) for c in rng.integers(1, 10, size=block.n)]
    block_solution = solve_wcds(block, block_costs)
    _check(block_solution.enumerated_count <= block.n * (block.n - 2), "random_block(200) 개수 상한 위반")
    _check(mask_of(block_solution.set) and is_cd_mask(block, mask_of(block_solution.set)),
           "random_block(200) WCDS 해가 CD 집합이 아닙니다")
    return f"ssplit(60) 비용 {solution.cost}, random_block(200) 비용 {block_solution.cost}"


SCENARIOS = {
    1: ("C4", scenario_c4),
    2: ("K_n / example51", scenario_complete_and_example51),
    3: ("kstar", scenario_kstar),
    4: ("appendix71", scenario_appendix71),
    5: ("gchain", scenario_gchain),
    6: ("ssplit", scenario_ssplit),
    11: ("스케일링 (WCDS)", scenario_scaling),
}


# ============================================================
# 실행기
# ============================================================

def run_scenario(number, name, func):
    """
    시나리오 하나를 실행합니다.

    Returns:
        dict: scenario, passed, elapsed_sec, detail
    """
    logger.info("=" * 60)
    logger.info(f"[{number}. {name}] 실행 시작")
    logger.info("=" * 60)

    start_time = time.time()
    try:
        detail = func()
        passed = True
    except (ScenarioFailure, DomisholdError) as e:
        detail = f"{type(e).__name__}: {e}"
        passed = False
    elapsed_time = time.time() - start_time

    if passed:
        logger.info(f"[{number}. {name}] 통과 - {detail} (소요 시간: {elapsed_time:.2f}초)")
    else:
        logger.error(f"[{number}. {name}] 실패 - {detail}")
        logger.error(f"소요 시간: {elapsed_time:.2f}초")
    logger.info("")

    return {
        "scenario": number,
        "passed": passed,
        "elapsed_sec": round(elapsed_time, 2),
        "detail": detail,
    }


def run_scenarios(only=None, keep_going=False, export_csv=False) -> int:
    """
    시나리오를 순서대로 실행합니다.

    Args:
        only: 실행할 시나리오 번호 목록 (None 이면 전체)
        keep_going: 실패해도 다음 시나리오 계속 실행
        export_csv: SCENARIO_OUTPUT_DIR/scenario_summary.csv 저장

    Returns:
        int: 모두 통과하면 0, 아니면 1
    """
    selected = sorted(SCENARIOS) if not only else sorted(set(only))
    unknown = [n for n in selected if n not in SCENARIOS]
    if unknown:
        logger.error(f"알 수 없는 시나리오 번호: {unknown} (가능: {sorted(SCENARIOS)})")
        return 2

    logger.info("=" * 60)
    logger.info("시나리오 실행 시작")
    logger.info("=" * 60)
    logger.info(f"대상 시나리오: {selected}")
    logger.info("")

    pipeline_start_time = time.time()
    results = []
    success_count = 0
    failure_count = 0

    for number in selected:
        name, func = SCENARIOS[number]
        result = run_scenario(number, name, func)
        results.append(result)
        if result["passed"]:
            success_count += 1
        else:
            failure_count += 1
            if not keep_going:
                logger.error("=" * 60)
                logger.error(f"시나리오 중단: [{number}. {name}] 실패")
                logger.error("=" * 60)
                logger.error("")
                break

    pipeline_elapsed_time = time.time() - pipeline_start_time

    logger.info("=" * 60)
    logger.info("시나리오 실행 완료")
    logger.info("=" * 60)
    logger.info(f"성공: {success_count}개, 실패: {failure_count}개")
    logger.info(f"총 소요 시간: {pipeline_elapsed_time:.2f}초 ({pipeline_elapsed_time/60:.2f}분)")
    logger.info("")

    if export_csv:
        output_path = config.get_scenario_output_path("scenario_summary.csv")
        output_path.parent.mkdir(parents=True, exist_ok=True)
        df = pd.DataFrame(results, columns=["scenario", "passed", "elapsed_sec", "detail"])
        df.to_csv(output_path, index=False, encoding="utf-8-sig")
        logger.info(f"요약 저장 완료: {output_path}")

    if failure_count > 0:
        logger.error("시나리오 실행 중 실패가 발생했습니다.")
        return 1
    logger.info("모든 시나리오가 통과했습니다!")
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        description="검증 시나리오 실행",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
사용 예시:
  # 전체 시나리오 실행
  python -m domishold.scenarios

  # 시나리오 1, 4 만 실행하고 요약 CSV 저장
  python -m domishold.scenarios --only 1 4 --csv
        """,
    )
    parser.add_argument("--only", type=int, nargs="+", help="실행할 시나리오 번호")
    parser.add_argument("--csv", action="store_true", help="결과 요약 CSV 저장")
    parser.add_argument("--keep-going", action="store_true", help="실패해도 다음 시나리오 계속 실행")
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, config.LOG_LEVEL.upper(), logging.INFO),
        format='%(asctime)s - %(levelname)s - %(message)s'
    )
    return run_scenarios(only=args.only, keep_going=args.keep_going, export_csv=args.csv)


if __name__ == "__main__":
    sys.exit(main())
