"""
End-to-end tests for the pushcalc command line and its exit codes.
"""

import json

import pytest

from algebra.polyring import Basis, GradedPoly
from app import main
from cli.config import get_settings, reset_settings
from cli.parser import build_parser
from operations.pushforward import PushforwardClass, xi_pe


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    for name in ("LOG_LEVEL", "PUSHCALC_DEFAULT_ORDER", "PUSHCALC_DEFAULT_WINDOW", "PUSHCALC_JOBS",
                 "PUSHCALC_SEED", "PUSHCALC_PROGRESS"):
        monkeypatch.delenv(name, raising=False)
    reset_settings()
    yield
    reset_settings()


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_parser_defaults():
    args = build_parser().parse_args(["verify", "roundtrip"])
    assert args.ranks == [-1, 0, 1, 2]
    assert args.order is None
    assert args.jobs is None


def test_pi_odd_degree(capsys):
    code, data = run(capsys, "pi", "--rank", "0", "--degree", "3", "--order", "6")
    assert code == 0
    assert data["parity"] == "odd"
    assert data["dimension"] == 1
    assert len(data["witness"]) == 1


def test_pi_even_degree(capsys):
    code, data = run(capsys, "pi", "--rank", "1", "--degree", "0", "--order", "4", "--basis", "z")
    assert code == 0
    assert data["parity"] == "even"
    assert data["dimension"] == len(data["basis"]) > 0


def test_out_of_range_flag_exits_2(capsys):
    assert main(["pi", "--rank", "99", "--degree", "2"]) == 2
    assert main(["verify", "commutator", "--jmax", "0"]) == 2


def test_missing_subcommand_exits_2(capsys):
    assert main([]) == 2
    assert main(["verify"]) == 2


def test_malformed_json_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["decompose", "--input", str(path)]) == 2


def test_missing_input_file_exits_2(tmp_path, capsys):
    assert main(["decompose", "--input", str(tmp_path / "absent.json")]) == 2


def test_decompose_non_kernel_exits_1(tmp_path, capsys):
    y = lambda j: GradedPoly.generator(Basis.Y, j)
    path = tmp_path / "class.json"
    path.write_text(json.dumps(PushforwardClass(2, 0, (y(1), y(2) * 3)).to_json()), encoding="utf-8")
    code, data = run(capsys, "decompose", "--input", str(path))
    assert code == 1
    assert data["is_kernel"] is False
    assert data["witness_index"] == 1


def test_decompose_xi_pe(tmp_path, capsys):
    path = tmp_path / "xi.json"
    path.write_text(json.dumps(xi_pe(0, 6).to_json()), encoding="utf-8")
    code, data = run(capsys, "decompose", "--input", str(path), "--base", "pe")
    assert code == 0
    assert data["pass"] is True
    assert data["roundtrip"] is True


def test_verify_composition(capsys):
    code, data = run(capsys, "verify", "composition", "--imax", "1", "--jmax", "1", "--rank-min", "0", "--rank-max", "0")
    assert code == 0
    assert data["command"] == "verify composition"
    assert data["pass"] is True
    assert data["cases"] == 4
    assert "timing_ms" not in data


def test_verify_rank_range_inverted_exits_2(capsys):
    assert main(["verify", "duality", "--rank-min", "2", "--rank-max", "-2"]) == 2


def test_verify_reports_identical_across_jobs(tmp_path, capsys):
    one, two = tmp_path / "one.json", tmp_path / "two.json"
    flags = ["verify", "duality", "--kmax", "2", "--rank-min", "-1", "--rank-max", "1"]
    assert main(flags + ["--jobs", "1", "--out", str(one)]) == 0
    assert main(flags + ["--jobs", "2", "--out", str(two)]) == 0
    assert one.read_bytes() == two.read_bytes()


def test_verify_summary_goes_to_stderr(capsys):
    code = main(["verify", "binomial", "--nmin", "-3", "--nmax", "3", "--kmax", "3", "--summary"])
    captured = capsys.readouterr()
    assert code == 0
    assert json.loads(captured.out)["pass"] is True
    assert "pass" in captured.err


def test_verify_lie_on_given_lattice(tmp_path, capsys):
    positive = tmp_path / "positive.json"
    positive.write_text(json.dumps({"gram": [[2]]}), encoding="utf-8")
    assert main(["verify", "lie", "--lattice", str(positive), "--window", "2"]) == 0

    hyperbolic = tmp_path / "hyperbolic.json"
    hyperbolic.write_text(json.dumps({"gram": [[0, -1], [-1, 0]]}), encoding="utf-8")
    code, data = run(capsys, "verify", "lie", "--lattice", str(hyperbolic), "--window", "3")
    assert code == 1
    assert data["details"][0]["jacobi_pass"] is False
    assert "jacobi_witness" in data["first_failure"]


def test_selftest_single_criterion(capsys):
    code, data = run(capsys, "selftest", "--only", "9")
    assert code == 0
    assert data["pass"] is True
    assert [c["criterion"] for c in data["criteria"]] == [9]


def test_bad_environment_exits_2(monkeypatch, capsys):
    monkeypatch.setenv("PUSHCALC_JOBS", "zero")
    assert main(["pi", "--rank", "0", "--degree", "2"]) == 2


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("PUSHCALC_DEFAULT_ORDER", "4")
    monkeypatch.setenv("PUSHCALC_PROGRESS", "1")
    settings = get_settings()
    assert settings.default_order == 4
    assert settings.progress is True
    assert get_settings() is settings


def test_settings_reject_bad_values(monkeypatch):
    monkeypatch.setenv("LOG_LEVEL", "LOUD")
    with pytest.raises(ValueError, match="LOG_LEVEL"):
        get_settings()
    reset_settings()
    monkeypatch.setenv("LOG_LEVEL", "DEBUG")
    monkeypatch.setenv("PUSHCALC_DEFAULT_WINDOW", "-1")
    with pytest.raises(ValueError, match="PUSHCALC_DEFAULT_WINDOW"):
        get_settings()
