"""Isomorph-free graph enumeration and census.

Graphs are compared by their column string: for j = 1..n-1 the bits
x(0,j), x(1,j), ..., x(j-1,j), which is exactly the graph6 bit order. The
canonical labeling is the one with the least column string. Dropping the
last vertex of a canonically labeled graph leaves a canonically labeled
graph, so every class on n vertices is reached exactly once by adding a
vertex to each canonical graph on n-1 vertices and keeping the canonical
results (orderly generation).
"""

import csv
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterator

from .bitset import VertexSet, bits
from .config import CANONICAL_CAP
from .errors import InvalidArgumentError, SizeLimitError
from .formats import load_graphs, write_graph6
from .graph import Graph, is_triangle_free
from .logger import get_logger

logger = get_logger("enumeration")


class GraphFilter(str, Enum):
    ALL = "all"
    TRIANGLE_FREE = "triangle-free"
    CONNECTED = "connected"
    TRIANGLE_FREE_CONNECTED = "triangle-free-connected"

    @property
    def triangle_free(self) -> bool:
        return self in (GraphFilter.TRIANGLE_FREE, GraphFilter.TRIANGLE_FREE_CONNECTED)

    @property
    def connected(self) -> bool:
        return self in (GraphFilter.CONNECTED, GraphFilter.TRIANGLE_FREE_CONNECTED)

    def accepts(self, g: Graph) -> bool:
        if self.triangle_free and not is_triangle_free(g):
            return False
        return not self.connected or is_connected(g)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = frontier = 1
    while frontier:
        v = frontier.bit_length() - 1
        frontier &= ~(1 << v)
        new = g.adj[v] & ~seen
        seen |= new
        frontier |= new
    return seen == g.vertices


@dataclass(frozen=True)
class EnumSpec:
    n: int | None                       # None with a file source: every size in the file
    filter: GraphFilter = GraphFilter.ALL
    source: Path | None = None          # None: builtin orderly generation

    def __post_init__(self):
        if self.source is None:
            if self.n is None or self.n < 0:
                raise InvalidArgumentError("builtin enumeration needs a vertex count n >= 0")
            if self.n > CANONICAL_CAP:
                raise SizeLimitError("builtin enumeration", self.n, CANONICAL_CAP)


# --- canonical form ----------------------------------------------------------

def _columns(g: Graph) -> list[int]:
    """Column string of g under its own labeling, one int per column (x(0,j) high)."""
    cols = []
    for j in range(g.n):
        c = 0
        for i in range(j):
            c = (c << 1) | (g.adj[i] >> j & 1)
        cols.append(c)
    return cols


def _twins(g: Graph, v: int, w: int) -> bool:
    return g.adj[v] & ~(1 << w) == g.adj[w] & ~(1 << v)


class _Smaller(Exception):
    pass


def _least_labeling(g: Graph, bound: list[int] | None = None) -> tuple[list[int], list[int]]:
    """Vertex order with the least column string, and that string.

    Each position takes only vertices that minimize the next column; among
    those, twins of an already tried vertex are skipped (swapping twins is an
    automorphism). With `bound`, raises _Smaller as soon as some order beats it.
    """
    best: list = [bound, None]

    def dfs(order: list[int], cols: list[int], pending: dict[int, int]) -> None:
        j = len(cols)
        if j == g.n:
            if best[0] is None or cols < best[0]:
                if bound is not None:
                    raise _Smaller
                best[0], best[1] = list(cols), list(order)
            elif best[1] is None:
                best[1] = list(order)
            return
        low = min(pending.values())
        ref = best[0]
        if ref is not None:
            head = cols + [low]
            if head > ref[:j + 1]:
                return
            if bound is not None and head < ref[:j + 1]:
                raise _Smaller
        tried: list[int] = []
        for v, c in pending.items():
            if c != low or any(_twins(g, u, v) for u in tried):
                continue
            tried.append(v)
            rest = {w: (cw << 1) | (g.adj[v] >> w & 1) for w, cw in pending.items() if w != v}
            dfs(order + [v], cols + [low], rest)

    dfs([], [], {v: 0 for v in range(g.n)})
    return best[1] or [], best[0] or []


def _relabel(g: Graph, order: list[int]) -> Graph:
    position = {v: i for i, v in enumerate(order)}
    adj = [0] * g.n
    for i, v in enumerate(order):
        for u in bits(g.adj[v]):
            adj[i] |= 1 << position[u]
    return Graph(g.n, tuple(adj))


def canonical_labeling(g: Graph) -> Graph:
    if g.n > CANONICAL_CAP:
        raise SizeLimitError("canonical form", g.n, CANONICAL_CAP)
    order, _ = _least_labeling(g)
    return _relabel(g, order)


def canonical_form(g: Graph) -> bytes:
    """graph6 bytes of the canonical labeling; equal iff the graphs are isomorphic."""
    return write_graph6(canonical_labeling(g)).encode("ascii")


def is_canonical(g: Graph) -> bool:
    """True when g's own labeling already has the least column string."""
    if g.n > CANONICAL_CAP:
        raise SizeLimitError("canonical form", g.n, CANONICAL_CAP)
    try:
        _least_labeling(g, bound=_columns(g))
    except _Smaller:
        return False
    return True


# --- orderly generation ------------------------------------------------------

def _extensions(g: Graph, triangle_free: bool) -> Iterator[Graph]:
    """Canonical one-vertex extensions of canonical g, in ascending column order."""
    n = g.n
    for column in range(1 << n):
        # column bit (n-1-i) is x(i, n)
        nbrs: VertexSet = 0
        for i in range(n):
            if column >> (n - 1 - i) & 1:
                nbrs |= 1 << i
        if triangle_free and any(g.adj[v] & nbrs for v in bits(nbrs)):
            continue
        adj = [row | ((nbrs >> v & 1) << n) for v, row in enumerate(g.adj)] + [nbrs]
        child = Graph(n + 1, tuple(adj))
        if is_canonical(child):
            yield child


def _generate(g: Graph, n: int, triangle_free: bool) -> Iterator[Graph]:
    if g.n == n:
        yield g
        return
    for child in _extensions(g, triangle_free):
        yield from _generate(child, n, triangle_free)


def enumerate_graphs(spec: EnumSpec) -> Iterator[Graph]:
    """One graph per isomorphism class passing the filter.

    Builtin output is canonically labeled and in ascending canonical order.
    File input is filtered, and deduplicated up to CANONICAL_CAP vertices.
    """
    if spec.source is not None:
        yield from _from_file(spec)
        return
    root = Graph(0, ())
    for g in _generate(root, spec.n, spec.filter.triangle_free):
        if spec.filter.accepts(g):
            yield g


def _from_file(spec: EnumSpec) -> Iterator[Graph]:
    seen: set[bytes] = set()
    for g in load_graphs(spec.source):
        if spec.n is not None and g.n != spec.n:
            continue
        if not spec.filter.accepts(g):
            continue
        if g.n <= CANONICAL_CAP:
            key = canonical_form(g)
            if key in seen:
                logger.debug("duplicate_skipped graph6=%s", write_graph6(g))
                continue
            seen.add(key)
        yield g


def enumerate_up_to(n_max: int, graph_filter: GraphFilter = GraphFilter.ALL,
                    min_n: int = 1) -> Iterator[Graph]:
    for n in range(min_n, n_max + 1):
        yield from enumerate_graphs(EnumSpec(n, graph_filter))


# --- census ------------------------------------------------------------------

@dataclass(frozen=True)
class CensusRow:
    n: int
    filter: str
    count: int


def census(n_max: int, graph_filter: GraphFilter = GraphFilter.ALL) -> list[CensusRow]:
    rows = []
    for n in range(0, n_max + 1):
        count = sum(1 for _ in enumerate_graphs(EnumSpec(n, graph_filter)))
        logger.info("census n=%d filter=%s count=%d", n, graph_filter.value, count)
        rows.append(CensusRow(n, graph_filter.value, count))
    return rows


def write_census_csv(rows: list[CensusRow], path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["n", "filter", "count"])
        for row in rows:
            writer.writerow([row.n, row.filter, row.count])
    return path
