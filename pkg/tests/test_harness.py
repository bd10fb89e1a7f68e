import csv
import io
import json

import pytest
from hypothesis import given, strategies as st

import cyclestar.harness as harness
from cyclestar.constructions import closed_form_es
from cyclestar.graph import CycleStarSpec
from cyclestar.harness import (CSV_COLUMNS, SweepRow, conjectured_es, emit_report, formula_es,
                               load_cache, sweep)
from cyclestar.solver import SearchBudget


@pytest.mark.parametrize("l,es", [(1, 5), (2, 6), (3, 6), (4, 7), (5, 7)])
def test_conjectured_k8(l, es):
    assert conjectured_es(CycleStarSpec(8, l)) == es


def test_conjectured_rejects_small_k():
    with pytest.raises(ValueError):
        conjectured_es(CycleStarSpec(7, 3))


@given(st.integers(8, 200))
def test_conjecture_branches_meet(k):
    n1, n2 = 2 * k - 4, 2 * k - 3
    assert conjectured_es(CycleStarSpec(k, n1 - k)) == k - 1
    assert conjectured_es(CycleStarSpec(k, n2 - k)) == k - 1


@given(st.integers(3, 60), st.integers(1, 60))
def test_unified_form(k, l):
    spec = CycleStarSpec(k, l)
    n = spec.n
    assert formula_es(spec) == max((n + 2) // 2, n - k + 2)
    if k <= 7:
        assert formula_es(spec) == closed_form_es(spec)


def test_sweep_k3_to_7_grid_by_search():
    rows = sweep(range(3, 8), range(1, 5), seed_constructions=False)
    assert len(rows) == 20
    assert [(r.k, r.l) for r in rows] == [(k, l) for k in range(3, 8) for l in range(1, 5)]
    assert all(r.agrees is True and r.method == "backtracking" for r in rows)
    assert all(r.lower_bound <= r.es_exact for r in rows)


def test_sweep_conjecture_rows():
    rows = sweep([8], range(1, 5))
    assert [r.es_formula for r in rows] == [5, 6, 6, 7]
    for r in rows:
        assert r.es_exact is not None and r.lower_bound <= r.es_exact
        assert r.agrees == (r.es_exact == r.es_formula)


def test_mismatch_is_reported_not_raised(monkeypatch):
    monkeypatch.setattr(harness, "conjectured_es", lambda spec: 99)
    rows = sweep([8], [1])
    assert rows[0].agrees is False and rows[0].es_formula == 99


def test_budget_exhaustion_row():
    rows = sweep([9], [4], budget=SearchBudget(max_nodes=1))
    r = rows[0]
    assert r.es_exact is None and r.agrees is None and r.witness is None


def test_warm_cache(tmp_path, monkeypatch):
    cache = tmp_path / "c.jsonl"
    cold = sweep(range(3, 9), range(1, 4), cache_path=cache, jobs=2)
    calls = []
    real = harness.compute_row
    monkeypatch.setattr(harness, "compute_row", lambda *a, **kw: calls.append(a) or real(*a, **kw))
    warm = sweep(range(3, 9), range(1, 4), cache_path=cache)
    assert calls == []
    assert emit_report(warm) == emit_report(cold)
    lines = cache.read_text().splitlines()
    assert len(lines) == 18
    d = json.loads(lines[0])
    assert set(d) == {"k", "l", "n", "lower_bound", "es_formula", "es_exact", "agrees",
                      "witness", "method", "nodes", "elapsed_ms"}


def test_malformed_cache_lines_recomputed(tmp_path, caplog):
    cache = tmp_path / "c.jsonl"
    rows = sweep([3, 8], [1, 2], cache_path=cache)
    lines = cache.read_text().splitlines()
    bad = json.loads(lines[1])
    bad["witness"] = [1] * len(bad["witness"])  # fails re-verification
    lines[1] = json.dumps(bad)
    lines[2] = "{not json"
    cache.write_text("\n".join(lines) + "\n")
    with caplog.at_level("WARNING"):
        again = sweep([3, 8], [1, 2], cache_path=cache)
    assert ":2:" in caplog.text and ":3:" in caplog.text
    assert [(r.k, r.l, r.es_exact) for r in again] == [(r.k, r.l, r.es_exact) for r in rows]
    assert len(load_cache(cache)) == 4


def test_last_cache_entry_wins(tmp_path):
    cache = tmp_path / "c.jsonl"
    sweep([3], [1], cache_path=cache)
    line = json.loads(cache.read_text())
    line["elapsed_ms"] = 12345
    with open(cache, "a") as fh:
        fh.write(json.dumps(line) + "\n")
    assert load_cache(cache)[(3, 1)].elapsed_ms == 12345


def test_unwritable_cache(tmp_path):
    with pytest.raises(OSError):
        sweep([3], [1], cache_path=tmp_path / "missing-dir" / "c.jsonl")


def test_report_shapes():
    row = SweepRow(3, 1, 4, 3, 3, 3, True, (1, 1, 2, 3), "construction", 0, 0)
    text, js = emit_report([row])
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1] == "3,1,4,3,3,3,true,construction,0,0"
    assert json.loads(js) == [{c: getattr(row, c) for c in CSV_COLUMNS}]
    empty_csv, empty_js = emit_report([])
    assert empty_csv == ",".join(CSV_COLUMNS) + "\n" and json.loads(empty_js) == []
    unknown = SweepRow(9, 4, 13, 7, 7, None, None, None, "backtracking", 1, 0)
    rec = next(csv.DictReader(io.StringIO(emit_report([unknown])[0])))
    assert rec["es_exact"] == "" and rec["agrees"] == ""


def test_row_json_round_trip():
    row = SweepRow(7, 4, 11, 6, 6, 6, True, (6, 2, 4), "construction", 0, 3)
    assert SweepRow.from_json(json.loads(json.dumps(row.to_json()))) == row
    with pytest.raises(ValueError):
        SweepRow.from_json({**row.to_json(), "method": "guess"})
