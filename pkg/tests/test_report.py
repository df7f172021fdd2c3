"""Unit tests for report.py: temp DB, no suite runs."""

import pytest

from perfectlab.config import SUITES
from perfectlab.database import record_run
from perfectlab.report import generate_report
from perfectlab.verifier import Counterexample, SuiteResult


@pytest.fixture
def db(tmp_path):
    return tmp_path / "findings.db"


def test_generate_report_creates_file(tmp_path, db):
    out = tmp_path / "report.html"
    generate_report(report_path=out, db_path=db)
    assert out.exists()
    assert out.stat().st_size > 0


def test_generate_report_html_structure(tmp_path, db):
    out = tmp_path / "report.html"
    generate_report(report_path=out, db_path=db)
    html = out.read_text()

    assert "<!DOCTYPE html>" in html
    assert "PerfectLab Dashboard" in html
    assert "Findings" in html
    assert "Updated" in html


def test_generate_report_contains_all_suites(tmp_path, db):
    out = tmp_path / "report.html"
    generate_report(report_path=out, db_path=db)
    html = out.read_text()

    for key in SUITES:
        assert key in html, f"Missing suite '{key}' in report"


def test_generate_report_empty_state_message(tmp_path, db):
    out = tmp_path / "report.html"
    generate_report(report_path=out, db_path=db)
    assert "No counterexamples recorded." in out.read_text()


def test_generate_report_lists_findings(tmp_path, db):
    result = SuiteResult("lemma3", "lemma", 6, "triangle-free", graphs_tested=65,
                         counterexamples=[Counterexample("Dhc", {"reason": "a <b> mismatch"})])
    record_run(result, db_path=db)
    out = tmp_path / "report.html"
    generate_report(report_path=out, db_path=db)
    html = out.read_text()

    assert "<code>Dhc</code>" in html
    assert "a &lt;b&gt; mismatch" in html
    assert 'class="card fail"' in html


def test_generate_report_passing_run(tmp_path, db):
    record_run(SuiteResult("self-duality", "lemma", 5, "all", graphs_tested=52), db_path=db)
    out = tmp_path / "report.html"
    generate_report(report_path=out, db_path=db)
    assert 'class="card pass"' in out.read_text()


def test_generate_report_returns_path(tmp_path, db):
    out = tmp_path / "report.html"
    assert generate_report(report_path=out, db_path=db) == out
