"""CLI entry point for PerfectLab."""

import argparse
import json
import sys
import traceback
from pathlib import Path

from dotenv import load_dotenv

from . import __version__
from .bitset import to_list
from .certificates import (
    Bipartition,
    CliqueWitness,
    Coloring,
    Exhausted,
    ImperfectionWitness,
    OddCycle,
    Partition2,
    PropertyReport,
    RefutingSubgraph,
    StableSet,
)
from .classes import check_class, classify_all
from .config import CLASSES, PREDICATES, SUITES, default_threads
from .database import finding_count, get_findings, mark_reviewed, record_run
from .enumeration import EnumSpec, GraphFilter, census, enumerate_graphs, write_census_csv
from .errors import GraphParseError, InvalidArgumentError, PerfectLabError, SizeLimitError
from .formats import load_graphs, parse_graph6, write_graph6
from .graph import Graph
from .logger import get_logger
from .named import NAMED, get_named
from .perfection import is_perfect
from .report import generate_report
from .verifier import SuiteSpec, run_suite, search_extremal

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_SIZE = 3
EXIT_ARGUMENT = 4


class ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to the argument exit code."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ARGUMENT, f"{self.prog}: error: {message}\n")


# --- rendering ---------------------------------------------------------------

def describe_certificate(cert) -> str:
    """One-line human rendering, vertex lists in original labels."""
    if cert is None:
        return "-"
    if isinstance(cert, Coloring):
        return "coloring " + " | ".join(str(to_list(c)) for c in cert.classes if c)
    if isinstance(cert, Bipartition):
        return f"bipartition {to_list(cert.left)} | {to_list(cert.right)}"
    if isinstance(cert, Partition2):
        return f"A={to_list(cert.a)} B={to_list(cert.b)}"
    if isinstance(cert, StableSet):
        return f"S={to_list(cert.vertices)}"
    if isinstance(cert, OddCycle):
        return f"{cert.kind} {list(cert.vertices)}"
    if isinstance(cert, CliqueWitness):
        return f"clique {to_list(cert.vertices)}"
    if isinstance(cert, ImperfectionWitness):
        return f"subgraph {to_list(cert.subset)} chi={cert.chi} omega={cert.omega}"
    if isinstance(cert, RefutingSubgraph):
        return f"no valid split of {to_list(cert.subset)} (omega={cert.omega})"
    if isinstance(cert, Exhausted):
        return cert.reason
    return repr(cert)


def _print_reports(g: Graph, reports: list[PropertyReport]) -> None:
    print(f"\n{write_graph6(g)}  (n={g.n}, m={g.edge_count()})")
    for report in reports:
        verdict = "yes" if report.holds else "no"
        print(f"  {report.name:20s} {verdict:4s} {describe_certificate(report.certificate)}")


# --- input -------------------------------------------------------------------

def _read_input(args: argparse.Namespace) -> list[Graph]:
    if args.graph6:
        return [parse_graph6(args.graph6)]
    if args.named:
        try:
            return [get_named(args.named)]
        except ValueError as e:
            raise InvalidArgumentError(str(e)) from None
    if args.path:
        try:
            return load_graphs(Path(args.path), args.format)
        except FileNotFoundError:
            raise InvalidArgumentError(f"no such file: {args.path}") from None
    raise InvalidArgumentError("give an input file, --graph6 or --named")


def _class_keys(raw: str) -> list[str]:
    keys = [k.strip() for k in raw.split(",") if k.strip()]
    if "all" in keys:
        return ["all"]
    unknown = [k for k in keys if k != "perfect" and k not in CLASSES]
    if unknown:
        raise InvalidArgumentError(f"unknown class(es): {', '.join(unknown)}")
    return keys


# --- commands ----------------------------------------------------------------

def cmd_check(args: argparse.Namespace) -> int:
    """Decide the requested classes for every input graph."""
    log = get_logger("cli")
    keys = _class_keys(args.classes)
    graphs = _read_input(args)
    log.info("check_start graphs=%d classes=%s", len(graphs), ",".join(keys))

    results = []
    for g in graphs:
        if keys == ["all"]:
            reports = classify_all(g, verify=args.verify)
        else:
            reports = [
                is_perfect(g, verify=args.verify) if key == "perfect" else check_class(g, key)
                for key in keys
            ]
        results.append((g, reports))

    if args.output == "json":
        payload = [
            {"graph6": write_graph6(g), "n": g.n, "reports": [r.to_dict() for r in reports]}
            for g, reports in results
        ]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for g, reports in results:
            _print_reports(g, reports)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Run one property suite over its universe."""
    if args.threads < 1:
        raise InvalidArgumentError(f"--threads must be at least 1, got {args.threads}")
    source = None
    if args.source:
        source = EnumSpec(None, GraphFilter(SUITES[args.suite].filter), Path(args.source))
    spec = SuiteSpec(args.suite, args.n_max, source)
    result = run_suite(spec, threads=args.threads)

    if args.record:
        new = record_run(result)
        get_logger("cli").info("run_recorded suite=%s new_findings=%d", spec.suite_id, len(new))

    text = result.to_json()
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    if args.output == "json":
        print(text)
    else:
        status = "PASS" if not result.counterexamples else ("FINDINGS" if result.passed else "FAIL")
        print(f"\n{SUITES[spec.suite_id].name}")
        print(f"  universe: n <= {result.n_max}, {result.filter}")
        print(f"  {result.graphs_tested} graphs tested, {len(result.counterexamples)} counterexample(s)  {status}")
        for example in result.counterexamples:
            print(f"    {example.graph6}  {example.detail.get('reason', '')}")
    return EXIT_OK if result.passed else EXIT_FAILED


def cmd_enumerate(args: argparse.Namespace) -> int:
    """Print one graph6 line per isomorphism class."""
    for g in enumerate_graphs(EnumSpec(args.n, GraphFilter(args.filter))):
        print(write_graph6(g))
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    """Print the minimal graphs failing a property."""
    found = search_extremal(args.predicate, args.n_max, GraphFilter(args.filter))
    if args.output == "json":
        payload = {
            "predicate": args.predicate,
            "n_max": args.n_max,
            "filter": args.filter,
            "graphs": [write_graph6(g) for g in found],
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"\n{PREDICATES[args.predicate].name} graphs, n <= {args.n_max} ({args.filter}): {len(found)}")
        for g in found:
            print(f"  {write_graph6(g):12s} n={g.n} m={g.edge_count()}")
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    """Count isomorphism classes per vertex count."""
    rows = census(args.n_max, GraphFilter(args.filter))
    for row in rows:
        print(f"  n={row.n:2d}  {row.filter:24s} {row.count}")
    if args.csv:
        write_census_csv(rows, Path(args.csv))
    return EXIT_OK


def cmd_findings(args: argparse.Namespace) -> int:
    """List stored counterexamples, optionally marking some as reviewed."""
    if args.mark_reviewed:
        mark_reviewed(args.mark_reviewed)
        print(f"Marked {len(args.mark_reviewed)} finding(s) as reviewed.")
    findings = get_findings(args.suite)
    if not findings:
        print("No findings recorded. Run 'verify --record' first.")
        return EXIT_OK

    print(f"\n{finding_count(args.suite)} finding(s):\n")
    current = None
    for finding in findings:
        if finding.suite != current:
            current = finding.suite
            print(f"  [{current}]")
        reviewed = " (reviewed)" if finding.reviewed else ""
        print(f"    #{finding.id:<4d} {finding.graph6}  {finding.detail_dict.get('reason', '')}{reviewed}")
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    """Write the HTML dashboard."""
    path = generate_report(Path(args.out) if args.out else None)
    print(f"Report written to {path}")
    return EXIT_OK


# --- parser ------------------------------------------------------------------

def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="perfectlab",
        description="PerfectLab: exact checkers and exhaustive suites for generalizations of perfect graphs",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=ArgumentParser)
    filters = [f.value for f in GraphFilter]

    # check
    p_check = sub.add_parser("check", help="Decide classes for input graphs")
    p_check.add_argument("path", nargs="?", help="graph6 or edge-list file")
    source = p_check.add_mutually_exclusive_group()
    source.add_argument("--graph6", help="Inline graph6 string")
    source.add_argument("--named", help=f"Named graph: {', '.join(NAMED)}")
    p_check.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p_check.add_argument(
        "--classes", default="all",
        help="Comma-separated: perfect and/or " + ", ".join(CLASSES) + " (default: all)",
    )
    p_check.add_argument("--output", choices=["human", "json"], default="human")
    p_check.add_argument("--verify", action="store_true", help="Cross-check perfection by definition")
    p_check.set_defaults(func=cmd_check)

    # verify
    p_verify = sub.add_parser("verify", help="Run a property suite")
    p_verify.add_argument("suite", choices=list(SUITES))
    p_verify.add_argument("--n-max", type=int, default=None, help="Largest vertex count (default per suite)")
    p_verify.add_argument("--threads", type=int, default=default_threads())
    p_verify.add_argument("--source", help="graph6 file to use as the universe")
    p_verify.add_argument("--record", action="store_true", help="Store the run and findings")
    p_verify.add_argument("--out", help="Also write the JSON report here")
    p_verify.add_argument("--output", choices=["human", "json"], default="json")
    p_verify.set_defaults(func=cmd_verify)

    # enumerate
    p_enum = sub.add_parser("enumerate", help="List graphs up to isomorphism as graph6")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--filter", choices=filters, default="all")
    p_enum.set_defaults(func=cmd_enumerate)

    # search
    p_search = sub.add_parser("search", help="Find minimal graphs failing a property")
    p_search.add_argument("predicate", choices=list(PREDICATES))
    p_search.add_argument("--n-max", type=int, default=7)
    p_search.add_argument("--filter", choices=filters, default="all")
    p_search.add_argument("--output", choices=["human", "json"], default="human")
    p_search.set_defaults(func=cmd_search)

    # census
    p_census = sub.add_parser("census", help="Count graphs per vertex count")
    p_census.add_argument("--n-max", type=int, default=7)
    p_census.add_argument("--filter", choices=filters, default="all")
    p_census.add_argument("--csv", help="Write the census as CSV")
    p_census.set_defaults(func=cmd_census)

    # findings
    p_findings = sub.add_parser("findings", help="List stored counterexamples")
    p_findings.add_argument("--suite", choices=list(SUITES))
    p_findings.add_argument("--mark-reviewed", type=int, nargs="+", metavar="ID", help="Mark findings as reviewed")
    p_findings.set_defaults(func=cmd_findings)

    # report
    p_report = sub.add_parser("report", help="Write the HTML dashboard")
    p_report.add_argument("--out", help="Output path (default: data/report.html)")
    p_report.set_defaults(func=cmd_report)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse arguments, dispatch, and map errors to exit codes."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "func"):
        parser.print_help()
        return EXIT_ARGUMENT

    log = get_logger("cli")
    try:
        return args.func(args)
    except GraphParseError as e:
        print(f"Parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except SizeLimitError as e:
        print(f"Size limit: {e}", file=sys.stderr)
        return EXIT_SIZE
    except InvalidArgumentError as e:
        print(f"Invalid argument: {e}", file=sys.stderr)
        return EXIT_ARGUMENT
    except PerfectLabError as e:
        log.error("command=%s error=%s", args.command, e)
        log.debug(traceback.format_exc())
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILED


def main():
    load_dotenv()
    sys.exit(run())


if __name__ == "__main__":
    main()
