"""Command-line driver: flags, output format, exit codes, report files."""

import csv

import pytest

from elpsolve.cli import main


@pytest.fixture
def prog1(tmp_path):
    path = tmp_path / "prog1.lp"
    path.write_text("b :- K a.\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_file(prog1, capsys):
    code, out, err = run(capsys, prog1)
    assert code == 0
    assert out == (
        "Worldview 1:\n"
        "  K: { }\n"
        "  Belief set: { {} }\n"
        "SATISFIABLE (1 worldviews)\n"
    )


def test_unsatisfiable_exit_code(tmp_path, capsys):
    path = tmp_path / "none.lp"
    path.write_text("a :- not K a.\n")
    code, out, _ = run(capsys, str(path))
    assert code == 1
    assert out.endswith("UNSATISFIABLE\n")


def test_models_zero_lists_all_and_exits_zero(tmp_path, capsys):
    path = tmp_path / "two.lp"
    path.write_text("a :- K a.\n")
    code, out, _ = run(capsys, str(path), "--models", "0", "--generator", "g0")
    assert code == 0
    assert out.count("Worldview") == 2
    assert "SATISFIABLE (2 worldviews)" in out

    unsat = tmp_path / "none.lp"
    unsat.write_text("a :- not K a.\n")
    code, out, _ = run(capsys, str(unsat), "--models", "0")
    assert code == 0  # all worldviews were requested and delivered: zero
    assert "UNSATISFIABLE" in out


def test_family_stats_lines(capsys):
    code, out, _ = run(capsys, "--gen-family", "3", "--generator", "g0", "--stats")
    assert code == 0
    assert out.splitlines()[-1] == "candidates=8 tests=8 skipped=0 worldviews=1"

    code, out, _ = run(capsys, "--gen-family", "3", "--generator", "g1", "--stats")
    assert out.splitlines()[-1] == "candidates=1 tests=0 skipped=1 worldviews=1"


def test_family_reports_empty_worldview(capsys):
    code, out, _ = run(capsys, "--gen-family", "2")
    assert code == 0
    assert "Belief set: { {} }" in out


def test_parse_error_exit_two(tmp_path, capsys):
    path = tmp_path / "bad.lp"
    path.write_text("k_x :- a.\n")
    code, _, err = run(capsys, str(path))
    assert code == 2
    assert "reserved prefix" in err


def test_missing_file_exit_two(capsys):
    code, _, err = run(capsys, "/nonexistent/prog.lp")
    assert code == 2


def test_needs_exactly_one_input(prog1, capsys):
    assert run(capsys, prog1, "--gen-family", "2")[0] == 2
    assert run(capsys)[0] == 2


def test_family_requires_positive_n(capsys):
    code, _, err = run(capsys, "--gen-family", "0")
    assert code == 2


def test_emit_normal_form(tmp_path, capsys):
    path = tmp_path / "inner.lp"
    path.write_text("a :- not K not a.\n")
    code, out, _ = run(capsys, str(path), "--emit", "nf")
    assert code == 0
    assert out == "a :- not K not1_a.\nnot1_a :- not a.\n"


def test_emit_generator(prog1, capsys):
    code, out, _ = run(capsys, prog1, "--emit", "g0")
    assert code == 0
    assert out == "b :- k_a.\n{k_a}.\n:- k_a, not a.\n"


def test_quiet_suppresses_listing(capsys):
    code, out, _ = run(capsys, "--gen-family", "2", "--quiet")
    assert code == 0
    assert out == "SATISFIABLE (1 worldviews)\n"


def test_verify_agrees(tmp_path, capsys):
    path = tmp_path / "two.lp"
    path.write_text("a :- K a.\n")
    code, out, _ = run(capsys, str(path), "--verify", "--models", "0", "--generator", "g1")
    assert code == 0
    assert "verify: ok (2 worldviews agree with the oracle)" in out


def test_verify_skips_oracle_when_large(capsys):
    code, out, err = run(capsys, "--gen-family", "3", "--verify")
    assert code == 0
    assert "oracle comparison skipped" in err


def test_duplicate_rule_warning_on_stderr(tmp_path, capsys):
    path = tmp_path / "dup.lp"
    path.write_text("a :- b.\na :- b.\n")
    code, _, err = run(capsys, str(path), "--models", "0")
    assert code == 0
    assert "warning: duplicate rule" in err


def test_output_deterministic(tmp_path, capsys):
    path = tmp_path / "mix.lp"
    path.write_text("a | b. c :- K c. {d} :- not K a.\n")
    runs = {
        run(capsys, str(path), "--models", "0", "--stats", "--generator", kind)
        for kind in ("t0", "g0", "g1")
    }
    again = {
        run(capsys, str(path), "--models", "0", "--stats", "--generator", kind)
        for kind in ("t0", "g0", "g1")
    }
    assert runs == again


def test_report_writes_csv_and_figures(tmp_path, capsys):
    out_dir = tmp_path / "report"
    code, out, _ = run(capsys, "--report", str(out_dir), "--report-max-n", "3")
    assert code == 0
    csv_path = out_dir / "report.csv"
    assert csv_path.exists()
    with open(csv_path, newline="") as handle:
        rows = list(csv.DictReader(handle))
    assert len(rows) == 9  # three generators for n in 1..3
    by_key = {(r["n"], r["generator"]): r for r in rows}
    assert by_key[("3", "g0")]["candidates"] == "8"
    assert by_key[("3", "g1")]["candidates"] == "1"
    assert by_key[("3", "g1")]["tests_skipped"] == "1"
    assert all(r["worldviews"] == "1" for r in rows)
    for name in ("candidates.png", "runtime.png"):
        figure = out_dir / name
        assert figure.exists() and figure.stat().st_size > 0
