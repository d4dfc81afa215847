"""
Tests for RunReport, run_sweep and the JSON helpers.
"""

import io
import json

from reports.run_report import CaseReport, RunReport, read_json, run_sweep, summary_table, write_json
from verification import sweeps


def _check(n: int, **_) -> dict:
    return {"check": "toy", "pass": n != 2, "residual_terms": n}


def test_pass_is_conjunction():
    report = RunReport("verify toy", {})
    assert report.passed
    report.add(CaseReport({"n": 0}, {"pass": True}))
    report.add(CaseReport({"n": 1}, {}))
    assert not report.passed
    assert report.first_failure().params == {"n": 1}


def test_case_json_layout():
    data = CaseReport({"k": 1}, {"check": "dual", "pass": 1, "params": "ignored"}).to_json()
    assert list(data) == ["params", "check", "pass"]
    assert data["params"] == {"k": 1}
    assert data["pass"] is True


def test_run_sweep_keeps_order_and_flags_failure():
    cases = [(_check, {"n": n}) for n in (3, 2, 1, 0)]
    report = run_sweep("verify toy", {"nmax": 3}, cases)
    assert [case.params["n"] for case in report.details] == [3, 2, 1, 0]
    assert not report.passed
    assert report.first_failure().params == {"n": 2}
    assert report.to_json()["first_failure"]["params"] == {"n": 2}


def test_timing_only_on_request():
    report = run_sweep("verify toy", {}, [(_check, {"n": 0})])
    assert "timing_ms" not in report.to_json()
    assert "timing_ms" in report.to_json(include_timing=True)
    assert report.to_json()["cases"] == 1


def test_reports_are_reproducible():
    cases = sweeps.kr_cases(sweeps.case_duality, 2, -1, 1)
    first = json.dumps(run_sweep("verify duality", {}, cases).to_json())
    second = json.dumps(run_sweep("verify duality", {}, cases).to_json())
    assert first == second


def test_summary_table():
    report = run_sweep("verify toy", {}, [(_check, {"n": n, "tag": [n]}) for n in range(3)])
    table = summary_table(report)
    assert list(table["pass"]) == [True, True, False]
    assert list(table["residual_terms"]) == [0, 1, 2]
    assert list(table["tag"]) == ["[0]", "[1]", "[2]"]


def test_write_and_read_json(tmp_path, monkeypatch):
    path = tmp_path / "out.json"
    write_json({"value": "1/2", "name": "Ξ"}, str(path))
    assert read_json(str(path)) == {"value": "1/2", "name": "Ξ"}

    stream = io.StringIO()
    write_json({"a": 1}, "-", stream=stream)
    assert json.loads(stream.getvalue()) == {"a": 1}

    monkeypatch.setattr("sys.stdin", io.StringIO('{"b": 2}'))
    assert read_json("-") == {"b": 2}
