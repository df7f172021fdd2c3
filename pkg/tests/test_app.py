"""CLI tests: run() end to end with exit codes and stdout."""

import json

import pytest

from perfectlab import verifier
from perfectlab.app import EXIT_ARGUMENT, EXIT_FAILED, EXIT_OK, EXIT_PARSE, EXIT_SIZE, run
from perfectlab.database import get_findings
from perfectlab.enumeration import canonical_form
from perfectlab.named import cycle


@pytest.fixture(autouse=True)
def data_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("PERFECTLAB_DATA_DIR", str(tmp_path / "data"))
    return tmp_path / "data"


def _json(capsys):
    return json.loads(capsys.readouterr().out)


# --- check ---

def test_check_graph6_json(capsys):
    assert run(["check", "--graph6", "Dhc", "--output", "json"]) == EXIT_OK
    [entry] = _json(capsys)
    assert entry["graph6"] == "Dhc"
    assert entry["n"] == 5
    verdicts = {r["class"]: r["holds"] for r in entry["reports"]}
    assert verdicts["perfect"] is False
    assert verdicts["2-perfect"] and verdicts["nice"] and verdicts["stable-perfect"]
    assert verdicts["2-divisible"] is False


def test_check_selected_classes(capsys):
    assert run(["check", "--named", "petersen", "--classes", "perfect,2-perfect", "--output", "json"]) == EXIT_OK
    [entry] = _json(capsys)
    assert [r["class"] for r in entry["reports"]] == ["perfect", "2-perfect"]


def test_check_human_output(capsys):
    assert run(["check", "--graph6", "Dhc", "--classes", "stable-perfect"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "stable-perfect" in out
    assert "S=[0]" in out


def test_check_file_input(tmp_path, capsys):
    path = tmp_path / "graphs.g6"
    path.write_text("Dhc\n@\n")
    assert run(["check", str(path), "--classes", "perfect", "--output", "json"]) == EXIT_OK
    assert [e["n"] for e in _json(capsys)] == [5, 1]


def test_check_parse_error():
    assert run(["check", "--graph6", "Dh!"]) == EXIT_PARSE


def test_check_size_limit():
    assert run(["check", "--named", "mycielski5", "--classes", "nice"]) == EXIT_SIZE


def test_check_unknown_class():
    assert run(["check", "--graph6", "Dhc", "--classes", "3-perfect"]) == EXIT_ARGUMENT


def test_check_missing_input():
    assert run(["check"]) == EXIT_ARGUMENT


def test_check_missing_file(tmp_path):
    assert run(["check", str(tmp_path / "nope.g6")]) == EXIT_ARGUMENT


def test_check_exclusive_inputs():
    with pytest.raises(SystemExit) as exc:
        run(["check", "--graph6", "Dhc", "--named", "petersen"])
    assert exc.value.code == EXIT_ARGUMENT


# --- enumerate ---

def test_enumerate_four_vertices(capsys):
    assert run(["enumerate", "--n", "4"]) == EXIT_OK
    lines = capsys.readouterr().out.split()
    assert len(lines) == 11
    assert lines == sorted(lines)


def test_enumerate_single_vertex(capsys):
    assert run(["enumerate", "--n", "1"]) == EXIT_OK
    assert capsys.readouterr().out.split() == ["@"]


def test_enumerate_triangle_free(capsys):
    assert run(["enumerate", "--n", "5", "--filter", "triangle-free"]) == EXIT_OK
    assert len(capsys.readouterr().out.split()) == 14


def test_enumerate_over_cap():
    assert run(["enumerate", "--n", "11"]) == EXIT_SIZE


def test_enumerate_requires_n():
    with pytest.raises(SystemExit) as exc:
        run(["enumerate"])
    assert exc.value.code == EXIT_ARGUMENT


# --- verify ---

def test_verify_json(capsys):
    assert run(["verify", "lemma3", "--n-max", "5", "--threads", "1"]) == EXIT_OK
    data = _json(capsys)
    assert data["suite"] == "lemma3"
    assert data["universe"] == {"n_max": 5, "filter": "triangle-free"}
    assert data["graphs_tested"] == 27
    assert data["counterexamples"] == []


def test_verify_failing_lemma_exits_one(monkeypatch, capsys):
    monkeypatch.setitem(verifier.SUITE_CHECKS, "lemma3", lambda g: {"reason": "planted"})
    assert run(["verify", "lemma3", "--n-max", "2", "--threads", "1"]) == EXIT_FAILED


def test_verify_record_and_findings(monkeypatch, data_dir, capsys):
    monkeypatch.setitem(verifier.SUITE_CHECKS, "hoang-mcdiarmid",
                        lambda g: {"reason": "planted"} if g.n == 2 else None)
    args = ["verify", "hoang-mcdiarmid", "--n-max", "2", "--threads", "1", "--record", "--output", "human"]
    assert run(args) == EXIT_OK
    assert (data_dir / "findings.db").exists()
    capsys.readouterr()

    assert run(["findings", "--suite", "hoang-mcdiarmid"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "2 finding(s)" in out
    assert "planted" in out


def test_findings_mark_reviewed(monkeypatch, capsys):
    monkeypatch.setitem(verifier.SUITE_CHECKS, "hoang-mcdiarmid",
                        lambda g: {"reason": "planted"} if g.n == 2 else None)
    run(["verify", "hoang-mcdiarmid", "--n-max", "2", "--threads", "1", "--record"])
    first, second = get_findings("hoang-mcdiarmid")
    capsys.readouterr()

    assert run(["findings", "--mark-reviewed", str(first.id)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "Marked 1 finding(s) as reviewed." in out
    assert out.count("(reviewed)") == 1
    assert [f.reviewed for f in get_findings("hoang-mcdiarmid") if f.id == second.id] == [False]


@pytest.mark.parametrize("threads", ["0", "-1"])
def test_verify_rejects_bad_thread_count(threads):
    assert run(["verify", "lemma3", "--n-max", "3", "--threads", threads]) == EXIT_ARGUMENT


def test_verify_writes_out_file(tmp_path):
    out = tmp_path / "lemma4.json"
    assert run(["verify", "lemma4", "--n-max", "4", "--threads", "1", "--out", str(out)]) == EXIT_OK
    assert json.loads(out.read_text())["graphs_tested"] == 13


def test_verify_over_cap():
    assert run(["verify", "lemma6", "--n-max", "13"]) == EXIT_SIZE


def test_verify_unknown_suite():
    with pytest.raises(SystemExit) as exc:
        run(["verify", "lemma99"])
    assert exc.value.code == EXIT_ARGUMENT


# --- search, census, findings, report ---

def test_search_json(capsys):
    assert run(["search", "minimal-imperfect", "--n-max", "6", "--output", "json"]) == EXIT_OK
    data = _json(capsys)
    assert data["graphs"] == [canonical_form(cycle(5)).decode("ascii")]


def test_search_bad_n_max():
    assert run(["search", "minimal-imperfect", "--n-max", "0"]) == EXIT_ARGUMENT


def test_census_csv(tmp_path, capsys):
    out = tmp_path / "census.csv"
    assert run(["census", "--n-max", "4", "--csv", str(out)]) == EXIT_OK
    assert "n= 4" in capsys.readouterr().out
    assert out.read_text().splitlines()[-1] == "4,all,11"


def test_findings_empty(capsys):
    assert run(["findings"]) == EXIT_OK
    assert "No findings recorded" in capsys.readouterr().out


def test_report_written(tmp_path, capsys):
    out = tmp_path / "dash.html"
    assert run(["report", "--out", str(out)]) == EXIT_OK
    assert out.exists()
    assert str(out) in capsys.readouterr().out


def test_no_command_prints_help(capsys):
    assert run([]) == EXIT_ARGUMENT
