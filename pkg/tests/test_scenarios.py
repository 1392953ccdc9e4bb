import pandas as pd
import pytest

from domishold.config import Config
from domishold.graph_families import complete_graph, path_graph
from domishold.scenarios import SCENARIOS, ScenarioFailure, brute_force_min_cds, run_scenario, run_scenarios


def test_brute_force_min_cds():
    assert brute_force_min_cds(path_graph(6)) == [(1, 2, 3, 4)]
    assert brute_force_min_cds(complete_graph(3)) == [(0,), (1,), (2,)]


def test_run_selected():
    assert run_scenarios(only=[1, 2]) == 0


@pytest.mark.parametrize("number", sorted(SCENARIOS))
def test_each_scenario_passes(number):
    name, func = SCENARIOS[number]
    result = run_scenario(number, name, func)
    assert result["passed"], result["detail"]


def test_run_all():
    assert run_scenarios() == 0


def test_unknown_number():
    assert run_scenarios(only=[99]) == 2


def test_run_scenario_records_failure():
    def broken():
        raise ScenarioFailure("의도된 실패")

    result = run_scenario(1, "broken", broken)
    assert result["scenario"] == 1
    assert not result["passed"]
    assert "의도된 실패" in result["detail"]


def test_csv_summary(tmp_path, monkeypatch):
    monkeypatch.setattr(Config, "SCENARIO_OUTPUT_DIR", str(tmp_path / "out"))
    assert run_scenarios(only=[1], export_csv=True) == 0
    df = pd.read_csv(tmp_path / "out" / "scenario_summary.csv", encoding="utf-8-sig")
    assert list(df.columns) == ["scenario", "passed", "elapsed_sec", "detail"]
    assert df["scenario"].tolist() == [1]
    assert bool(df.loc[0, "passed"])


def test_stops_on_first_failure(tmp_path, monkeypatch):
    def broken():
        raise ScenarioFailure("의도된 실패")

    monkeypatch.setattr(Config, "SCENARIO_OUTPUT_DIR", str(tmp_path))
    monkeypatch.setitem(SCENARIOS, 1, ("broken", broken))
    assert run_scenarios(only=[1, 2], export_csv=True) == 1
    df = pd.read_csv(tmp_path / "scenario_summary.csv", encoding="utf-8-sig")
    assert df["scenario"].tolist() == [1]


def test_keep_going(tmp_path, monkeypatch):
    def broken():
        raise ScenarioFailure("의도된 실패")

    monkeypatch.setattr(Config, "SCENARIO_OUTPUT_DIR", str(tmp_path))
    monkeypatch.setitem(SCENARIOS, 1, ("broken", broken))
    assert run_scenarios(only=[1, 2], keep_going=True, export_csv=True) == 1
    df = pd.read_csv(tmp_path / "scenario_summary.csv", encoding="utf-8-sig")
    assert df["scenario"].tolist() == [1, 2]
    assert df["passed"].tolist() == [False, True]
