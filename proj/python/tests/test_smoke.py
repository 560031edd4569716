import csv
import io

import pytest

import forestcolor as fc


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_session_greedy_forced_recoloring():
    s = fc.Session(5, delta=2)
    assert s.insert(0, 1) == 0
    assert s.insert(1, 2) == 0
    assert s.insert(3, 4) == 0
    # 2 sees color 2, 3 sees color 1: nothing is free for (2, 3)
    assert s.insert(2, 3) == 1
    assert s.is_proper()
    assert s.edge_count == 4
    assert sorted(c for _, _, c in s.coloring()) == [1, 1, 2, 2]


def test_errors_carry_kind():
    s = fc.Session(3, delta=2)
    s.insert(0, 1)
    s.insert(1, 2)
    with pytest.raises(fc.ForestColorError, match="SameComponent"):
        s.insert(0, 2)
    with pytest.raises(fc.ForestColorError, match="WrongPalette"):
        fc.Session(4, delta=4, extra=0, algorithm="colorful-path")


def test_experiment_csv_schema():
    text = fc.run_experiment("dist-maint", "random-dynamic", delta=4, extra=1, n=60, seed=3, reps=2)
    assert text.splitlines()[0] == fc.CSV_HEADER
    table = rows(text)
    summaries = [r for r in table if r["kind"] == "summary"]
    assert len(summaries) == 2
    for rep in ("0", "1"):
        updates = [r for r in table if r["rep"] == rep and r["kind"] != "summary"]
        total = sum(int(r["recourse"]) for r in updates)
        summary = next(r for r in summaries if r["rep"] == rep)
        assert int(summary["recourse"]) == total
        assert float(summary["cum_amortized"]) == total / len(updates)
    assert text == fc.run_experiment("dist-maint", "random-dynamic", delta=4, extra=1, n=60, seed=3, reps=2)


def test_seed_required_for_random_runs():
    with pytest.raises(fc.ForestColorError):
        fc.run_experiment("dist-maint", "random-incremental", delta=3, n=20)


def test_toggle_bound_column():
    text = fc.run_experiment("dist-maint", "adv:toggle", delta=3, extra=1, depth=4, steps=200, seed=1)
    summary = rows(text)[-1]
    assert float(summary["bound"]) == pytest.approx(fc.toggle_expected_recourse(3, 4, 4))


def test_histogram_csv_uniform_support():
    script = "+ 0 1\n+ 1 2\n+ 2 3\n"
    assert fc.count_colorings(script, 3, 1) == 36
    table = rows(fc.histogram(script, extra=1, runs=3600, seed=5))
    assert len(table) == 36
    assert sum(int(r["count"]) for r in table) == 3600
    assert all(float(r["expected"]) == 100.0 for r in table)
    assert float(table[0]["chisq_p"]) > 1e-4


def test_oracle_criterion_from_python():
    v = fc.run_criterion(1)
    assert v["id"] == 1
    assert v["passed"], v["detail"]
    assert fc.suite_criteria("all") == list(range(1, 13))
