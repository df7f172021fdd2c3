"""Exhaustive property suites and extremal-graph search over enumerated universes.

Every suite maps one graph to either None (the property held and every
certificate re-validated) or a detail dict describing the violation. Lemma
suites must come back empty; the conjecture suite reports what it finds.
"""

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .bitset import subsets_by_size
from .certificates import PropertyReport, validate
from .classes import check_class, check_inclusions, classify_all
from .classes.constructions import (
    coloring_from_stable_set,
    divisible_partition_from_coloring,
    stable_set_from_partition,
)
from .config import CANONICAL_CAP, CLASSES, PREDICATES, SUITES, default_threads
from .enumeration import EnumSpec, GraphFilter, enumerate_graphs, enumerate_up_to
from .errors import InvalidArgumentError, PerfectLabError, SizeLimitError
from .formats import parse_graph6, write_graph6
from .graph import Graph, complement, induced_subgraph, is_bipartite
from .invariants import SubsetCache, is_k_colorable
from .logger import get_logger
from .perfection import find_odd_hole, is_perfect, is_perfect_by_definition, is_perfect_by_spgt

logger = get_logger("verifier")

Detail = dict | None


@dataclass(frozen=True)
class SuiteSpec:
    suite_id: str
    n_max: int | None = None
    source: EnumSpec | None = None      # file universe instead of builtin enumeration

    def __post_init__(self):
        config = SUITES.get(self.suite_id)
        if not config:
            raise InvalidArgumentError(f"Unknown suite: {self.suite_id}")
        if self.n_max is None:
            object.__setattr__(self, "n_max", config.default_n_max)
        if self.n_max < 1:
            raise InvalidArgumentError("n_max must be at least 1")
        if self.n_max > config.cap:
            raise SizeLimitError(f"suite {self.suite_id}", self.n_max, config.cap)
        if self.source is None and self.n_max > CANONICAL_CAP:
            raise SizeLimitError("builtin enumeration", self.n_max, CANONICAL_CAP)

    @property
    def tier(self) -> str:
        return SUITES[self.suite_id].tier

    @property
    def filter(self) -> GraphFilter:
        if self.source is not None:
            return self.source.filter
        return GraphFilter(SUITES[self.suite_id].filter)

    def universe(self) -> Iterator[Graph]:
        if self.source is None:
            return enumerate_up_to(self.n_max, self.filter)
        return (g for g in enumerate_graphs(self.source) if 1 <= g.n <= self.n_max)


@dataclass
class Counterexample:
    graph6: str
    detail: dict

    def to_dict(self) -> dict:
        return {"graph6": self.graph6, "detail": self.detail}


@dataclass
class SuiteResult:
    suite_id: str
    tier: str
    n_max: int
    filter: str
    graphs_tested: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        """Lemma suites pass with no counterexamples. Conjecture suites only fail
        on a certificate that did not re-validate."""
        if self.tier == "lemma":
            return not self.counterexamples
        return not any("invalid_certificates" in c.detail for c in self.counterexamples)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite_id,
            "tier": self.tier,
            "universe": {"n_max": self.n_max, "filter": self.filter},
            "graphs_tested": self.graphs_tested,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> "SuiteResult":
        return cls(
            suite_id=data["suite"],
            tier=data["tier"],
            n_max=data["universe"]["n_max"],
            filter=data["universe"]["filter"],
            graphs_tested=data["graphs_tested"],
            counterexamples=[Counterexample(c["graph6"], c["detail"]) for c in data["counterexamples"]],
            elapsed_ms=data["elapsed_ms"],
        )


def parse_suite_report(text: str) -> SuiteResult:
    return SuiteResult.from_dict(json.loads(text))


# --- per-graph checks ------------------------------------------------------

def _audit(g: Graph, reports: list[PropertyReport]) -> list[dict]:
    """Validator problems per report; empty when every certificate checks out."""
    problems = []
    for report in reports:
        found = validate(g, report)
        if found:
            problems.append({"class": report.name, "problems": found})
    return problems


def _detail(reason: str, reports: list[PropertyReport], problems: list[dict] | None = None) -> dict:
    out = {"reason": reason, "verdicts": [r.to_dict() for r in reports]}
    if problems:
        out["invalid_certificates"] = problems
    return out


def _finish(g: Graph, reports: list[PropertyReport], mismatch: str | None) -> Detail:
    problems = _audit(g, reports)
    if mismatch is None and not problems:
        return None
    return _detail(mismatch or "certificate failed validation", reports, problems)


def _coloring_report(g: Graph, k: int) -> PropertyReport:
    coloring = is_k_colorable(g, k)
    return PropertyReport(f"{k}-colorable", coloring is not None, coloring, extra={"colors": k})


def check_lemma3(g: Graph) -> Detail:
    """Triangle-free: perfect by definition <=> perfect by odd holes <=> bipartite."""
    report = is_perfect(g, verify=True)
    by_definition = is_perfect_by_definition(g) is None
    bipartite = is_bipartite(g) is not None
    agree = report.holds == by_definition == bipartite == is_perfect_by_spgt(g)
    return _finish(g, [report], None if agree else "perfect and bipartite disagree")


def check_lemma4(g: Graph) -> Detail:
    """Triangle-free: 2-perfect (direct search) <=> 4-colorable, and the fast path agrees."""
    direct = check_class(g, "2-perfect", direct=True)
    fast = check_class(g, "2-perfect")
    colorable = _coloring_report(g, 4)
    reports = [direct, colorable]
    if direct.holds != colorable.holds:
        return _finish(g, reports, "2-perfect and 4-colorable disagree")
    if fast.holds != direct.holds:
        return _finish(g, reports + [fast], "triangle-free route disagrees with direct search")
    return _finish(g, reports + [fast], None)


def check_lemma6(g: Graph) -> Detail:
    """Triangle-free: 3-colorable = perfectly divisible = stable-perfect = nice,
    and each coloring-based construction yields a valid certificate."""
    cache = SubsetCache(g)
    colorable = _coloring_report(g, 3)
    divisible = check_class(g, "perfectly-divisible", cache)
    stable = check_class(g, "stable-perfect", cache, direct=True)
    stable_fast = check_class(g, "stable-perfect", cache)
    nice = check_class(g, "nice", cache)
    reports = [colorable, divisible, stable, nice]
    verdicts = {r.holds for r in reports} | {stable_fast.holds}
    if len(verdicts) != 1:
        reason = "3-colorable, perfectly divisible, stable-perfect and nice disagree"
        return _finish(g, reports + [stable_fast], reason)
    if colorable.holds:
        partition = divisible_partition_from_coloring(colorable.certificate)
        reports.append(PropertyReport("perfectly-divisible", True, partition, extra={"route": "construction"}))
        stable_set = stable_set_from_partition(g, partition)
        reports.append(PropertyReport("stable-perfect", True, stable_set, extra={"route": "construction"}))
        recolored = coloring_from_stable_set(g, stable.certificate)
        reports.append(PropertyReport("3-colorable", True, recolored, extra={"colors": 3}))
    return _finish(g, reports, None)


def check_inclusion_chain(g: Graph) -> Detail:
    reports = classify_all(g, strict=False)
    try:
        check_inclusions(reports)
    except PerfectLabError as e:
        return _finish(g, reports, str(e))
    return _finish(g, reports, None)


def check_perfect_oracle(g: Graph) -> Detail:
    report = is_perfect(g)
    witness = is_perfect_by_definition(g)
    agree = report.holds == (witness is None) == is_perfect_by_spgt(g)
    reports = [report]
    if witness is not None:
        reports.append(PropertyReport("perfect-by-definition", False, witness))
    return _finish(g, reports, None if agree else "definition and odd-hole routes disagree")


def check_self_duality(g: Graph) -> Detail:
    report = is_perfect(g)
    dual = is_perfect(complement(g))
    dual.name = "complement-perfect"
    if report.holds != dual.holds:
        return _detail("G and its complement disagree on perfection", [report, dual])
    return _finish(g, [report], None)


def _holds(g: Graph, key: str) -> bool:
    return is_perfect(g).holds if key == "perfect" else check_class(g, key).holds


def check_heredity(g: Graph) -> Detail:
    """Every class that holds on G holds on each induced subgraph."""
    keys = ["perfect", *CLASSES]
    held = [key for key in keys if _holds(g, key)]
    for s in subsets_by_size(g.vertices, min_size=1, max_size=g.n - 1):
        sub = induced_subgraph(g, s)
        for key in held:
            if not _holds(sub, key):
                return {"reason": f"{key} holds on G but not on G[{write_graph6(sub)}]",
                        "subset": [v for v in range(g.n) if s >> v & 1]}
    return None


def check_hoang_mcdiarmid(g: Graph) -> Detail:
    """2-divisible <=> no odd hole."""
    divisible = check_class(g, "2-divisible")
    hole = find_odd_hole(g)
    odd_hole_free = PropertyReport("odd-hole-free", hole is None, hole)
    reports = [divisible, odd_hole_free]
    agree = divisible.holds == odd_hole_free.holds
    return _finish(g, reports, None if agree else "2-divisible and odd-hole-free disagree")


SUITE_CHECKS: dict[str, Callable[[Graph], Detail]] = {
    "lemma3": check_lemma3,
    "lemma4": check_lemma4,
    "lemma6": check_lemma6,
    "inclusion-chain": check_inclusion_chain,
    "perfect-oracle": check_perfect_oracle,
    "self-duality": check_self_duality,
    "heredity": check_heredity,
    "hoang-mcdiarmid": check_hoang_mcdiarmid,
}


def _evaluate(job: tuple[str, str]) -> tuple[str, Detail]:
    """Worker entry point: (suite, graph6) -> (graph6, detail)."""
    suite_id, text = job
    g = parse_graph6(text)
    try:
        return text, SUITE_CHECKS[suite_id](g)
    except PerfectLabError as e:
        # an internal inconsistency is a finding about this graph
        return text, {"reason": "internal error", "error": f"{type(e).__name__}: {e}"}


def run_suite(spec: SuiteSpec, threads: int | None = None) -> SuiteResult:
    """Evaluate the suite on every graph of its universe.

    threads=1 runs in-process; otherwise graphs are spread over worker
    processes. Counterexamples are sorted by graph6 string.
    """
    threads = threads or default_threads()
    result = SuiteResult(spec.suite_id, spec.tier, spec.n_max, spec.filter.value)
    log_start = time.monotonic()
    logger.info("suite_start suite=%s n_max=%d filter=%s threads=%d",
                spec.suite_id, spec.n_max, result.filter, threads)

    jobs = ((spec.suite_id, write_graph6(g)) for g in spec.universe())
    if threads == 1:
        outcomes = map(_evaluate, jobs)
        found = _collect(outcomes, result)
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            found = _collect(pool.map(_evaluate, jobs, chunksize=32), result)

    result.counterexamples = sorted(found, key=lambda c: c.graph6)
    result.elapsed_ms = int((time.monotonic() - log_start) * 1000)
    logger.info(
        "suite_end suite=%s graphs=%d counterexamples=%d duration=%.2fs",
        spec.suite_id, result.graphs_tested, len(result.counterexamples), result.elapsed_ms / 1000,
    )
    return result


def _collect(outcomes: Iterator[tuple[str, Detail]], result: SuiteResult) -> list[Counterexample]:
    found = []
    for text, detail in outcomes:
        result.graphs_tested += 1
        if detail is not None:
            logger.warning("counterexample suite=%s graph6=%s reason=%s",
                           result.suite_id, text, detail.get("reason", ""))
            found.append(Counterexample(text, detail))
    return found


# --- extremal search -------------------------------------------------------

def search_extremal(
    predicate_id: str, n_max: int, graph_filter: GraphFilter = GraphFilter.ALL
) -> list[Graph]:
    """Graphs failing the predicate's property whose every proper induced
    subgraph has it.

    The properties are hereditary, so checking the one-vertex deletions is enough.
    """
    config = PREDICATES.get(predicate_id)
    if not config:
        raise InvalidArgumentError(f"Unknown predicate: {predicate_id}")
    if n_max < 1:
        raise InvalidArgumentError("n_max must be at least 1")
    if n_max > min(config.cap, CANONICAL_CAP):
        raise SizeLimitError(f"search {predicate_id}", n_max, min(config.cap, CANONICAL_CAP))

    logger.info("search_start predicate=%s n_max=%d filter=%s", predicate_id, n_max, graph_filter.value)
    found = []
    for g in enumerate_up_to(n_max, graph_filter):
        if _holds(g, config.property):
            continue
        if all(_holds(induced_subgraph(g, g.vertices & ~(1 << v)), config.property) for v in range(g.n)):
            found.append(g)
    logger.info("search_end predicate=%s found=%d", predicate_id, len(found))
    return found
