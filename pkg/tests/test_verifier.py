"""Tests for verifier.py: suites, report JSON and extremal search.

Suites run at small n here; default-size runs are marked slow.
"""

import json

import pytest

from perfectlab import verifier
from perfectlab.enumeration import EnumSpec, GraphFilter, canonical_form
from perfectlab.errors import InconsistencyError, InvalidArgumentError, SizeLimitError
from perfectlab.formats import write_graph6
from perfectlab.graph import complement
from perfectlab.named import cycle, grotzsch
from perfectlab.verifier import (
    Counterexample,
    SuiteResult,
    SuiteSpec,
    check_hoang_mcdiarmid,
    check_lemma3,
    check_lemma4,
    check_lemma6,
    parse_suite_report,
    run_suite,
    search_extremal,
)

SMALL_RUNS = [
    ("lemma3", 6, 65),
    ("lemma4", 6, 65),
    ("lemma6", 6, 65),
    ("inclusion-chain", 5, 52),
    ("perfect-oracle", 5, 52),
    ("self-duality", 5, 52),
    ("heredity", 4, 18),
    ("hoang-mcdiarmid", 5, 52),
]


# --- suite specs ---

def test_suite_spec_defaults():
    spec = SuiteSpec("lemma3")
    assert spec.n_max == 8
    assert spec.tier == "lemma"
    assert spec.filter is GraphFilter.TRIANGLE_FREE


def test_suite_spec_unknown_suite():
    with pytest.raises(InvalidArgumentError):
        SuiteSpec("lemma99")


def test_suite_spec_bad_n_max():
    with pytest.raises(InvalidArgumentError):
        SuiteSpec("lemma3", 0)


def test_suite_spec_over_suite_cap():
    with pytest.raises(SizeLimitError):
        SuiteSpec("lemma6", 13)


def test_suite_spec_over_builtin_enumeration_cap():
    with pytest.raises(SizeLimitError):
        SuiteSpec("lemma3", 11)


# --- suite runs ---

@pytest.mark.parametrize("suite_id, n_max, tested", SMALL_RUNS)
def test_small_suites_find_nothing(suite_id, n_max, tested):
    result = run_suite(SuiteSpec(suite_id, n_max), threads=1)
    assert result.graphs_tested == tested
    assert result.counterexamples == []
    assert result.passed


def test_worker_pool_matches_in_process_run():
    spec = SuiteSpec("perfect-oracle", 5)
    serial = run_suite(spec, threads=1)
    pooled = run_suite(spec, threads=2)
    assert pooled.graphs_tested == serial.graphs_tested
    assert pooled.counterexamples == serial.counterexamples


def test_file_universe(tmp_path):
    source = tmp_path / "graphs.g6"
    source.write_text(f"{write_graph6(cycle(5))}\n{write_graph6(grotzsch())}\n")
    spec = SuiteSpec("perfect-oracle", 12, source=EnumSpec(None, GraphFilter.ALL, source))
    result = run_suite(spec, threads=1)
    assert result.graphs_tested == 2
    assert result.filter == "all"
    assert result.passed


def test_counterexamples_sorted_and_fail_lemma_suites(monkeypatch):
    def one_edge(g):
        return {"reason": "planted"} if g.edge_count() == 1 else None

    monkeypatch.setitem(verifier.SUITE_CHECKS, "lemma3", one_edge)
    result = run_suite(SuiteSpec("lemma3", 3), threads=1)
    assert result.graphs_tested == 6
    assert [c.graph6 for c in result.counterexamples] == ["A_", "BG"]
    assert result.counterexamples[0].detail == {"reason": "planted"}
    assert not result.passed


def test_conjecture_suite_passes_with_findings(monkeypatch):
    monkeypatch.setitem(verifier.SUITE_CHECKS, "hoang-mcdiarmid", lambda g: {"reason": "planted"})
    result = run_suite(SuiteSpec("hoang-mcdiarmid", 2), threads=1)
    assert len(result.counterexamples) == 3
    assert result.passed


def test_conjecture_suite_fails_on_invalid_certificate(monkeypatch):
    def bad_certificate(g):
        return {"reason": "certificate failed validation",
                "invalid_certificates": [{"class": "2-divisible", "problems": ["planted"]}]}

    monkeypatch.setitem(verifier.SUITE_CHECKS, "hoang-mcdiarmid", bad_certificate)
    assert not run_suite(SuiteSpec("hoang-mcdiarmid", 1), threads=1).passed


def test_internal_errors_become_counterexamples(monkeypatch):
    def broken(g):
        raise InconsistencyError("routes disagree")

    monkeypatch.setitem(verifier.SUITE_CHECKS, "perfect-oracle", broken)
    result = run_suite(SuiteSpec("perfect-oracle", 1), threads=1)
    assert result.counterexamples[0].detail["reason"] == "internal error"
    assert "routes disagree" in result.counterexamples[0].detail["error"]


# --- per-graph checks ---

def test_lemma_checks_on_named_graphs():
    for g in (cycle(5), cycle(7), grotzsch()):
        assert check_lemma3(g) is None
        assert check_lemma4(g) is None


def test_lemma6_on_c7():
    assert check_lemma6(cycle(7)) is None


def test_hoang_mcdiarmid_odd_antihole():
    assert check_hoang_mcdiarmid(complement(cycle(7))) is None


# --- report JSON ---

def test_suite_result_json_shape():
    result = SuiteResult("lemma3", "lemma", 5, "triangle-free", graphs_tested=24,
                         counterexamples=[Counterexample("Dhc", {"reason": "x"})], elapsed_ms=12)
    data = json.loads(result.to_json())
    assert data == {
        "suite": "lemma3",
        "tier": "lemma",
        "universe": {"n_max": 5, "filter": "triangle-free"},
        "graphs_tested": 24,
        "counterexamples": [{"graph6": "Dhc", "detail": {"reason": "x"}}],
        "elapsed_ms": 12,
    }
    assert parse_suite_report(result.to_json()) == result


# --- extremal search ---

def test_minimal_imperfect_up_to_six():
    found = search_extremal("minimal-imperfect", 6)
    assert [canonical_form(g) for g in found] == [canonical_form(cycle(5))]


@pytest.mark.slow
def test_minimal_imperfect_up_to_seven():
    found = {canonical_form(g) for g in search_extremal("minimal-imperfect", 7)}
    expected = {canonical_form(g) for g in (cycle(5), cycle(7), complement(cycle(7)))}
    assert found == expected


def test_minimal_non_two_divisible():
    found = search_extremal("minimal-non-2-divisible", 6)
    assert [canonical_form(g) for g in found] == [canonical_form(cycle(5))]


def test_no_small_triangle_free_non_nice_graph():
    assert search_extremal("minimal-non-nice", 7, GraphFilter.TRIANGLE_FREE) == []


def test_search_extremal_rejects_bad_arguments():
    with pytest.raises(InvalidArgumentError):
        search_extremal("minimal-nothing", 5)
    with pytest.raises(InvalidArgumentError):
        search_extremal("minimal-imperfect", 0)
    with pytest.raises(SizeLimitError):
        search_extremal("minimal-imperfect", 11)


# --- default-size runs ---

@pytest.mark.slow
@pytest.mark.parametrize("suite_id", [
    "lemma3", "lemma4", "lemma6", "inclusion-chain", "perfect-oracle", "self-duality", "heredity",
])
def test_default_size_suites(suite_id):
    result = run_suite(SuiteSpec(suite_id))
    assert result.counterexamples == []
    assert result.passed


@pytest.mark.slow
def test_hoang_mcdiarmid_default_size():
    result = run_suite(SuiteSpec("hoang-mcdiarmid"))
    assert result.n_max == 8
    assert result.passed
    assert result.counterexamples == []
