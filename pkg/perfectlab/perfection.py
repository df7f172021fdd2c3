"""Perfection of a graph by two independent routes, and odd-hole search.

The production route uses the Strong Perfect Graph Theorem: G is perfect iff
neither G nor its complement contains an odd hole. The definition route
(chi == omega on every induced subgraph) is kept as an oracle.
"""

from typing import Iterator

from .bitset import VertexSet, bits, popcount, subsets_by_size
from .certificates import Exhausted, ImperfectionWitness, OddCycle, PropertyReport
from .config import DEFINITION_CAP, HEREDITARY_MEMO_CAP
from .errors import InconsistencyError, SizeLimitError
from .graph import Graph, complement, is_bipartite, is_triangle_free
from .invariants import SubsetCache


def _closed(g: Graph, v: int) -> VertexSet:
    return g.adj[v] | (1 << v)


def _odd_holes(
    g: Graph, v0: int, allowed: VertexSet, length: int | None, counter: list[int] | None
) -> Iterator[list[int]]:
    """Induced odd cycles v0, v1, ..., v_{L-1} with all other vertices in `allowed`.

    Each cycle is produced once, oriented so that v1 < v_{L-1}. With
    `length=None` every odd length >= 5 is produced.
    """
    ring = g.adj[v0] & allowed
    max_len = popcount(allowed) + 1 if length is None else length

    def extend(path: list[int], last: int, blocked: VertexSet, inner: VertexSet) -> Iterator[list[int]]:
        # blocked = closed nbhds of v0..v_{k-1}; inner = closed nbhds of v1..v_{k-1}
        if counter is not None:
            counter[0] += 1
        k = len(path) - 1
        size = k + 2  # cycle length if closed now
        if size >= 5 and size % 2 == 1 and (length is None or size == length):
            above_v1 = ~((1 << (path[1] + 1)) - 1)
            for w in bits(g.adj[last] & ring & ~inner & above_v1):
                yield path + [w]
        if size + 1 > max_len:
            return
        for w in bits(g.adj[last] & allowed & ~blocked):
            yield from extend(path + [w], w, blocked | _closed(g, last), inner | _closed(g, last))

    for v1 in bits(ring):
        yield from extend([v0, v1], v1, _closed(g, v0), 0)


def _as_set(cycle: list[int]) -> tuple[int, ...]:
    return tuple(sorted(cycle))


def find_odd_hole(
    g: Graph, within: VertexSet | None = None, counter: list[int] | None = None
) -> OddCycle | None:
    """Shortest induced odd cycle of length >= 5, lexicographically least vertex set."""
    dom = g.vertices if within is None else within
    size = popcount(dom)
    for length in range(5, size + 1, 2):
        for v0 in bits(dom):
            allowed = dom & ~((1 << (v0 + 1)) - 1)
            found = list(_odd_holes(g, v0, allowed, length, counter))
            if found:
                return OddCycle(tuple(min(found, key=_as_set)), kind="hole")
    return None


def has_odd_hole(
    g: Graph, within: VertexSet | None = None, through: int | None = None,
    counter: list[int] | None = None,
) -> bool:
    """Any odd hole in G[within]; with `through`, only holes containing that vertex."""
    dom = g.vertices if within is None else within
    if through is not None:
        return next(_odd_holes(g, through, dom & ~(1 << through), None, counter), None) is not None
    for v0 in bits(dom):
        allowed = dom & ~((1 << (v0 + 1)) - 1)
        if next(_odd_holes(g, v0, allowed, None, counter), None) is not None:
            return True
    return False


def find_odd_antihole(
    g: Graph, within: VertexSet | None = None, counter: list[int] | None = None
) -> OddCycle | None:
    """Odd hole of the complement, reported in G's labels."""
    hole = find_odd_hole(complement(g), within, counter)
    return OddCycle(hole.vertices, kind="antihole") if hole else None


def is_berge(g: Graph, within: VertexSet | None = None, comp: Graph | None = None) -> bool:
    """No odd hole and no odd antihole in G[within]."""
    comp = comp or complement(g)
    return not has_odd_hole(g, within) and not has_odd_hole(comp, within)


def is_perfect_by_spgt(g: Graph) -> bool:
    return find_odd_hole(g) is None and find_odd_hole(complement(g)) is None


def _induces_odd_cycle(g: Graph, s: VertexSet, in_complement: bool) -> bool:
    """G[s] (or its complement) is a single odd cycle of length >= 5."""
    size = popcount(s)
    if size < 5 or size % 2 == 0:
        return False
    want = 2 if not in_complement else size - 3
    if any(popcount(g.adj[v] & s) != want for v in bits(s)):
        return False
    start = s & -s
    seen, frontier = start, start
    while frontier:
        v = frontier.bit_length() - 1
        frontier &= ~(1 << v)
        row = g.adj[v] if not in_complement else ~g.adj[v] & ~(1 << v)
        new = row & s & ~seen
        seen |= new
        frontier |= new
    return seen == s


def is_perfect_subset(cache: SubsetCache, s: VertexSet) -> bool:
    """Memoized perfection of G[s].

    Small graphs use heredity: G[s] is perfect iff every G[s - v] is perfect
    and G[s] itself is neither an odd hole nor an odd antihole. Larger graphs
    search for odd holes in G[s] and its complement directly.
    """
    table = cache.perfect_table
    if s in table:
        return table[s]
    g = cache.graph
    if popcount(s) < 5:
        result = True
    elif g.n <= HEREDITARY_MEMO_CAP:
        result = (
            all(is_perfect_subset(cache, s & ~(1 << v)) for v in bits(s))
            and not _induces_odd_cycle(g, s, False)
            and not _induces_odd_cycle(g, s, True)
        )
    else:
        result = is_berge(g, s)
    if cache.enabled:
        table[s] = result
    return result


def is_perfect_by_definition(g: Graph, cache: SubsetCache | None = None) -> ImperfectionWitness | None:
    """Least subset (by size, then lexicographically) with chi > omega, or None."""
    if g.n > DEFINITION_CAP:
        raise SizeLimitError("perfection by definition", g.n, DEFINITION_CAP)
    cache = cache or SubsetCache(g)
    cache.check_owner(g)
    for s in subsets_by_size(g.vertices, min_size=1):
        omega = cache.omega(s)
        chi = cache.chi(s)
        if chi != omega:
            return ImperfectionWitness(s, chi, omega)
    return None


def is_perfect(g: Graph, verify: bool = False) -> PropertyReport:
    """Perfection with a certificate.

    Triangle-free graphs are perfect iff bipartite; otherwise the odd hole /
    odd antihole route decides. With `verify`, graphs within DEFINITION_CAP
    are re-decided by definition and any disagreement raises.
    """
    counter = [0]
    if is_triangle_free(g):
        route = "triangle-free"
        part = is_bipartite(g)
        report = (
            PropertyReport("perfect", True, part)
            if part is not None
            else PropertyReport("perfect", False, find_odd_hole(g, counter=counter))
        )
    else:
        route = "odd-hole"
        witness = find_odd_hole(g, counter=counter) or find_odd_antihole(g, counter=counter)
        report = (
            PropertyReport("perfect", False, witness)
            if witness is not None
            else PropertyReport("perfect", True, Exhausted("no odd hole in G or its complement"))
        )
    report.nodes_searched = counter[0]
    report.extra["route"] = route

    if verify and g.n <= DEFINITION_CAP:
        by_definition = is_perfect_by_definition(g) is None
        if by_definition != report.holds:
            raise InconsistencyError(
                f"perfection routes disagree: {route}={report.holds} definition={by_definition}"
            )
    return report
