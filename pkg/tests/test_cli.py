"""Command line interface: exit codes, determinism, output formats."""

import json

import pytest

from qsl21.cli import main

OK, VIOLATION, CONFIG = 0, 1, 2


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_default_checks_pass(capsys):
    code, out, _ = run(capsys, "verify", "--l", "3", "--family",
                       "typical-periodic", "--draws", "1")
    assert code == OK
    report = json.loads(out)
    assert report["ok"] and report["checks"] == ["relations", "centrality",
                                                 "eigenvalues"]
    assert report["instances"][0]["dim"] == 12


def test_verify_explicit_params_and_csv(capsys):
    code, out, _ = run(capsys, "verify", "--l", "3", "--family",
                       "typical-periodic",
                       "--params", "lambda1=2/3,lambda2=5/7,phi=1,beta=4",
                       "--checks", "relations,burnside", "--format", "csv")
    assert code == OK
    lines = out.strip().splitlines()
    assert lines[0] == "family,l,params,check,status,detail"
    assert len(lines) == 3   # two checks for the single instance


def test_verify_unknown_check_is_config_error(capsys):
    code, _, err = run(capsys, "verify", "--l", "3", "--checks", "bogus")
    assert code == CONFIG and "unknown check" in err


def test_verify_centre_identity_needs_odd_order(capsys):
    code, _, err = run(capsys, "verify", "--l", "4", "--family",
                       "typical-periodic", "--checks", "centre-identity")
    assert code == CONFIG and "odd l" in err


def test_verify_parallel_matches_serial(capsys, monkeypatch):
    monkeypatch.setenv("QSL21_SEED", "42")
    code1, out1, _ = run(capsys, "verify", "--l", "3", "--family",
                         "atypical-periodic", "--draws", "2")
    monkeypatch.setenv("QSL21_SEED", "42")
    code2, out2, _ = run(capsys, "verify", "--l", "3", "--family",
                         "atypical-periodic", "--draws", "2", "--parallel", "2")
    assert code1 == code2 == OK
    assert out1 == out2


def test_seed_env_controls_sampling(capsys, monkeypatch):
    monkeypatch.setenv("QSL21_SEED", "7")
    _, out1, _ = run(capsys, "dump-module", "--l", "3", "--family",
                     "typical-periodic")
    monkeypatch.setenv("QSL21_SEED", "7")
    _, out2, _ = run(capsys, "dump-module", "--l", "3", "--family",
                     "typical-periodic")
    monkeypatch.setenv("QSL21_SEED", "8")
    _, out3, _ = run(capsys, "dump-module", "--l", "3", "--family",
                     "typical-periodic")
    assert out1 == out2 != out3
    monkeypatch.setenv("QSL21_SEED", "not-an-int")
    code, _, err = run(capsys, "dump-module", "--l", "3", "--family",
                       "typical-periodic")
    assert code == CONFIG and "QSL21_SEED" in err


def test_golden_round_trip_and_corruption(capsys, tmp_path):
    golden = tmp_path / "golden.json"
    args = ("--l", "3", "--family", "typical-nilpotent",
            "--params", "N=2,lambda1=q,lambda2=5/7")
    code, _, _ = run(capsys, "dump-module", *args, "--out", str(golden))
    assert code == OK
    code, _, _ = run(capsys, "verify", *args, "--checks", "relations",
                     "--golden", str(golden))
    assert code == OK
    text = golden.read_text()
    assert '"3; 0,1"' in text   # the stated weight q appears verbatim
    golden.write_text(text.replace('"3; 0,1"', '"3; 0,2"', 1))
    code, _, _ = run(capsys, "verify", *args, "--checks", "relations",
                     "--golden", str(golden))
    assert code == VIOLATION
    golden.write_text("this is not json")
    code, _, _ = run(capsys, "verify", *args, "--checks", "relations",
                     "--golden", str(golden))
    assert code == VIOLATION
    code, _, err = run(capsys, "verify", *args, "--checks", "relations",
                       "--golden", str(tmp_path / "missing.json"))
    assert code == CONFIG and "golden" in err


def test_classify_inline_and_file(capsys, tmp_path):
    code, out, err = run(capsys, "classify", "--l", "5",
                         "--params", "lambda1=2/3,lambda2=5/7,phi=1,beta=4")
    assert code == OK and err == ""
    assert "typical-periodic" in out and ",20," in out
    table = tmp_path / "rows.txt"
    table.write_text(
        "lambda1=q^2,lambda2=5/7,N=3\n"
        "# a comment line\n"
        "lambda1=nonsense\n"
        "lambda1=1/2,lambda2=1,N=7\n")
    code, out, err = run(capsys, "classify", "--l", "5",
                         "--params-file", str(table))
    assert code == CONFIG
    assert "typical-nilpotent" in out
    assert "line 3:" in err and "line 4:" in err and "line 1:" not in err


def test_classify_without_input_is_config_error(capsys):
    code, _, err = run(capsys, "classify", "--l", "5")
    assert code == CONFIG and "classify needs" in err


def test_centre_table_reports_violation_honestly(capsys):
    # the full report includes the one identity that fails on generic
    # typical periodic modules, so the exit code is 1, not 0
    code, out, _ = run(capsys, "centre-table", "--l", "3", "--family",
                       "typical-periodic",
                       "--params", "lambda1=2/3,lambda2=5/7,phi=1,beta=4")
    assert code == VIOLATION
    data = json.loads(out)
    assert data["verdicts"]["products"] is True
    assert data["verdicts"]["shift_full"] is True
    assert data["verdicts"]["factorised_eigenvalue"] is True
    assert data["verdicts"]["main_identity"] is False
    code, _, err = run(capsys, "centre-table", "--l", "4", "--family",
                       "typical-periodic")
    assert code == CONFIG and "odd l" in err
    code, _, err = run(capsys, "centre-table", "--l", "3", "--family",
                       "gl2-periodic")
    assert code == CONFIG


def test_centre_table_csv(capsys):
    code, out, _ = run(capsys, "centre-table", "--l", "3", "--family",
                       "atypical-periodic",
                       "--params", "lambda1=2/3,lambda2=5/7,phi=1",
                       "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "quantity,exact,float"
    assert any(line.startswith("C_1,") for line in lines)
    assert any(line.startswith("verdict:") for line in lines)


def test_complete_set_small_window(capsys):
    code, out, _ = run(capsys, "complete-set", "--l", "3",
                       "--p-max", "1", "--t-max", "1", "--a-max", "1",
                       "--count", "6")
    assert code == OK
    report = json.loads(out)
    assert report["rank"] == report["monomials"] == 576
    assert report["injective"] is True


def test_complete_set_nilpotent_rank_drops(capsys):
    code, out, _ = run(capsys, "complete-set", "--l", "3",
                       "--p-max", "1", "--t-max", "1", "--a-max", "1",
                       "--count", "6", "--nilpotent")
    assert code == VIOLATION
    report = json.loads(out)
    assert report["rank"] < report["monomials"]


def test_dump_module_requires_family(capsys):
    code, _, err = run(capsys, "dump-module", "--l", "3")
    assert code == CONFIG and "family" in err


def test_invalid_l_is_config_error(capsys):
    code, _, err = run(capsys, "verify", "--l", "2", "--family",
                       "typical-periodic")
    assert code == CONFIG
