"""Command-line interface: exit codes, report schema, and determinism."""

import json

import pytest

from confal.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.lstrip().startswith("{") else out)


def test_verify_axioms_passes(capsys):
    code, report = run_cli(capsys, "verify-axioms", "--family", "rkk:2",
                           "--k", "1", "--max-weight", "3", "--max-mode", "3")
    assert code == 0
    assert report["schema"] == "confal-report/1"
    assert report["ok"]
    assert set(report["checks"]) == {"derivative", "skew", "jacobi"}


def test_invalid_matrix_size_is_a_config_error(capsys):
    code, _ = run_cli(capsys, "verify-axioms", "--family", "rkk:2", "--k", "0")
    assert code == 2


def test_unknown_selector_is_a_config_error(capsys):
    code, _ = run_cli(capsys, "basis", "--family", "bogus", "--k", "1",
                      "--weight", "2")
    assert code == 2


def test_unknown_subcommand_exits_two():
    with pytest.raises(SystemExit) as err:
        main(["frobnicate"])
    assert err.value.code == 2


def test_basis_listing(capsys):
    code, report = run_cli(capsys, "basis", "--family", "rkk:2", "--k", "1",
                           "--weight", "5")
    assert code == 0
    assert report["dimension"] == 4
    assert len(report["elements"]) == 4
    assert all("E[1,1]{0,0}" in text for text in report["elements"])


def test_probe_simplicity_exit_zero(capsys):
    code, report = run_cli(capsys, "probe-simplicity", "--family", "rkk:1",
                           "--k", "1", "--window", "3", "--slack", "2")
    assert code == 0
    assert report["probe"]["status"] == "reached-full-span"


def test_probe_generators_exit_zero(capsys):
    code, report = run_cli(capsys, "probe-generators", "--family", "rkk:1",
                           "--k", "1", "--max-weight", "4")
    assert code == 0
    assert report["ok"]


def test_jordan_check(capsys):
    code, report = run_cli(capsys, "jordan-check", "--kind", "A", "--k", "2",
                           "--ell", "0")
    assert code == 0
    assert report["check"]["ok"]


def test_oracle_crosscheck(capsys):
    code, report = run_cli(capsys, "oracle-crosscheck", "--k", "1",
                           "--max-exp", "2")
    assert code == 0
    assert report["modes"]["ok"] and report["derivation"]["ok"]


def test_fixtures_subcommand(capsys):
    code, report = run_cli(capsys, "fixtures", "--max-depth", "3")
    assert code == 0
    assert len(report["checks"]) == 8


def test_corpus_report_is_deterministic(capsys, monkeypatch, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for threads, path in zip(("1", "4"), paths):
        monkeypatch.setenv("CONFAL_THREADS", threads)
        code = main(["corpus", "--k", "1", "--max-exp", "1", "--levels", "0",
                     "--output", str(path)])
        assert code == 0
    first, second = (json.loads(p.read_text()) for p in paths)
    first["config"].pop("threads")
    second["config"].pop("threads")
    assert first == second


def test_text_format_and_output_file(capsys, tmp_path):
    path = tmp_path / "report.txt"
    code = main(["basis", "--family", "rkk:2", "--k", "1", "--weight", "2",
                 "--format", "text", "--output", str(path)])
    assert code == 0
    text = path.read_text()
    assert "schema" in text and "confal-report/1" in text
