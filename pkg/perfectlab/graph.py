"""Graph representation and elementary structural queries.

A Graph is immutable: vertex count plus one adjacency bitmask per vertex.
All functions here are pure.
"""

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator

from .bitset import VertexSet, bits, full_mask, popcount, to_list
from .certificates import Bipartition, OddCycle
from .config import MAX_VERTICES
from .errors import InvalidEdgeError, SelfLoopError, SizeLimitError


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise SizeLimitError("graph", self.n, MAX_VERTICES)
        object.__setattr__(self, "adj", tuple(self.adj))
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = full_mask(self.n)
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {u} has neighbors outside 0..{self.n - 1}")
            if row >> u & 1:
                raise SelfLoopError(u)
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @property
    def vertices(self) -> VertexSet:
        return full_mask(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        return self.adj[v]

    def degree(self, v: int, within: VertexSet | None = None) -> int:
        row = self.adj[v] if within is None else self.adj[v] & within
        return popcount(row)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v, in ascending order."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield u, v

    def edge_count(self, within: VertexSet | None = None) -> int:
        if within is None:
            return sum(popcount(row) for row in self.adj) // 2
        return sum(popcount(self.adj[v] & within) for v in bits(within)) // 2

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; duplicate edges collapse."""
    if not 0 <= n <= MAX_VERTICES:
        raise SizeLimitError("graph", n, MAX_VERTICES)
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidEdgeError(u, v, n)
        if u == v:
            raise SelfLoopError(u)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    full = g.vertices
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def induced_subgraph(g: Graph, s: VertexSet) -> Graph:
    """G[s] relabeled 0..|s|-1 in ascending order of original labels."""
    order = to_list(s)
    index = {v: i for i, v in enumerate(order)}
    adj = []
    for v in order:
        row = 0
        for u in bits(g.adj[v] & s):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(order), tuple(adj))


def lift(local: VertexSet, s: VertexSet) -> VertexSet:
    """Map a vertex set of induced_subgraph(g, s) back to the labels of g."""
    order = to_list(s)
    out = 0
    for i in bits(local):
        out |= 1 << order[i]
    return out


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, g.vertices & ~(1 << v))


def is_triangle_free(g: Graph, within: VertexSet | None = None) -> bool:
    """No three mutually adjacent vertices (neighborhood intersection per edge)."""
    dom = g.vertices if within is None else within
    for u in bits(dom):
        higher = g.adj[u] & dom & ~((1 << (u + 1)) - 1)
        for v in bits(higher):
            if g.adj[u] & g.adj[v] & dom:
                return False
    return True


def find_triangle(g: Graph, within: VertexSet | None = None) -> VertexSet | None:
    """Lexicographically least triangle, as a vertex set."""
    dom = g.vertices if within is None else within
    for u in bits(dom):
        above = dom & ~((1 << (u + 1)) - 1)
        for v in bits(g.adj[u] & above):
            common = g.adj[u] & g.adj[v] & above & ~((1 << (v + 1)) - 1)
            if common:
                return (1 << u) | (1 << v) | (common & -common)
    return None


def _two_color(g: Graph, within: VertexSet) -> tuple[Bipartition | None, OddCycle | None]:
    """BFS two-coloring; on failure return an odd cycle through the conflict edge."""
    side: dict[int, int] = {}
    parent: dict[int, int] = {}
    depth: dict[int, int] = {}
    for root in bits(within):
        if root in side:
            continue
        side[root], parent[root], depth[root] = 0, -1, 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in bits(g.adj[u] & within):
                if v not in side:
                    side[v], parent[v], depth[v] = 1 - side[u], u, depth[u] + 1
                    queue.append(v)
                elif side[v] == side[u]:
                    return None, _cycle_through(u, v, parent, depth)
    left = sum(1 << v for v, c in side.items() if c == 0)
    return Bipartition(left, within & ~left), None


def _cycle_through(u: int, v: int, parent: dict[int, int], depth: dict[int, int]) -> OddCycle:
    up, vp = [u], [v]
    a, b = u, v
    while a != b:
        if depth[a] >= depth[b]:
            a = parent[a]
            up.append(a)
        else:
            b = parent[b]
            vp.append(b)
    # up ends at the common ancestor; vp ends there too
    walk = up + vp[-2::-1]
    return OddCycle(tuple(walk), kind="cycle")


def is_bipartite(g: Graph, within: VertexSet | None = None) -> Bipartition | None:
    """Two-coloring certificate, or None when an odd cycle exists."""
    part, _ = _two_color(g, g.vertices if within is None else within)
    return part


def find_odd_cycle(g: Graph, within: VertexSet | None = None) -> OddCycle | None:
    """Odd closed walk without repeated vertices (not necessarily induced)."""
    _, cycle = _two_color(g, g.vertices if within is None else within)
    return cycle
