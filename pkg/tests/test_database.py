"""Unit tests for database.py: uses a temp SQLite DB."""

import pytest

from perfectlab.database import (
    finding_count,
    get_findings,
    get_runs,
    mark_reviewed,
    record_run,
)
from perfectlab.verifier import Counterexample, SuiteResult


def _result(suite="hoang-mcdiarmid", graph6s=("Dhc", "Fw`Vw", "I?hNh@~k?")):
    return SuiteResult(
        suite_id=suite,
        tier="conjecture" if suite == "hoang-mcdiarmid" else "lemma",
        n_max=8,
        filter="all",
        graphs_tested=12346,
        counterexamples=[Counterexample(g, {"reason": f"planted {g}"}) for g in graph6s],
        elapsed_ms=1500,
    )


@pytest.fixture
def db(tmp_path):
    """Temp DB path, fresh for each test."""
    return tmp_path / "test_findings.db"


def test_record_run_inserts_findings(db):
    new = record_run(_result(), db_path=db)
    assert len(new) == 3


def test_record_run_deduplicates(db):
    record_run(_result(), db_path=db)
    new = record_run(_result(), db_path=db)
    assert new == []


def test_record_run_returns_only_new(db):
    record_run(_result(graph6s=("Dhc", "Fw`Vw")), db_path=db)
    new = record_run(_result(), db_path=db)
    assert [f.graph6 for f in new] == ["I?hNh@~k?"]


def test_findings_isolated_by_suite(db):
    record_run(_result("hoang-mcdiarmid"), db_path=db)
    new = record_run(_result("lemma3"), db_path=db)
    assert len(new) == 3


def test_record_run_stores_run_row(db):
    record_run(_result(), db_path=db)
    record_run(_result(graph6s=()), db_path=db)
    runs = get_runs("hoang-mcdiarmid", db_path=db)
    assert len(runs) == 2
    assert {r.counterexamples for r in runs} == {0, 3}
    assert runs[0].graphs_tested == 12346


def test_get_runs_empty(db):
    assert get_runs(db_path=db) == []


def test_finding_detail_round_trip(db):
    record_run(_result(graph6s=("Dhc",)), db_path=db)
    finding = get_findings(db_path=db)[0]
    assert finding.detail_dict == {"reason": "planted Dhc"}
    assert finding.reviewed is False


def test_finding_count(db):
    record_run(_result("hoang-mcdiarmid", ("Dhc",)), db_path=db)
    record_run(_result("lemma3", ("Dhc", "Fw`Vw")), db_path=db)
    assert finding_count(db_path=db) == 3
    assert finding_count("lemma3", db_path=db) == 2


def test_get_findings_by_suite(db):
    record_run(_result("hoang-mcdiarmid", ("Dhc",)), db_path=db)
    record_run(_result("lemma3", ("Fw`Vw",)), db_path=db)
    assert [f.graph6 for f in get_findings("lemma3", db_path=db)] == ["Fw`Vw"]


def test_mark_reviewed(db):
    record_run(_result(), db_path=db)
    findings = get_findings(db_path=db)
    mark_reviewed([findings[0].id], db_path=db)

    reviewed = [f for f in get_findings(db_path=db) if f.reviewed]
    assert [f.id for f in reviewed] == [findings[0].id]


def test_mark_reviewed_empty_list(db):
    record_run(_result(), db_path=db)
    mark_reviewed([], db_path=db)
    assert not any(f.reviewed for f in get_findings(db_path=db))
