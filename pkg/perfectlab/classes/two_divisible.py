"""2-divisible: every induced subgraph H with an edge splits into A, B with
omega(A) < omega(H) and omega(B) < omega(H).

Edgeless H are skipped: for them the condition can never hold.
"""

from ..bitset import VertexSet, subsets_by_size
from ..certificates import Exhausted, Partition2, PropertyReport, RefutingSubgraph
from ..config import TWO_DIVISIBLE_CAP
from ..graph import Graph
from ..invariants import SubsetCache
from .search import check_size, two_way_split

NAME = "2-divisible"


class TwoDivisibleChecker:
    cap = TWO_DIVISIBLE_CAP

    def check(self, g: Graph, cache: SubsetCache | None = None, direct: bool = False) -> PropertyReport:
        check_size(NAME, g, self.cap)
        cache = cache or SubsetCache(g)
        cache.check_owner(g)
        counter = [0]
        top: Partition2 | None = None
        for h in subsets_by_size(g.vertices, min_size=2):
            if cache.omega(h) < 2:
                continue
            part = split(cache, h, counter)
            if part is None:
                return PropertyReport(
                    NAME, False, RefutingSubgraph(h, cache.omega(h)), nodes_searched=counter[0]
                )
            top = part
        if top is None:
            return PropertyReport(NAME, True, Exhausted("no induced subgraph with an edge"),
                                  nodes_searched=counter[0])
        return PropertyReport(NAME, True, top, nodes_searched=counter[0])


def split(cache: SubsetCache, h: VertexSet, counter: list[int]) -> Partition2 | None:
    """Least partition of H with both sides of clique number below omega(H)."""
    g = cache.graph
    target = cache.omega(h)

    def below(side: VertexSet, v: int) -> bool:
        return cache.omega(side & g.adj[v]) + 1 < target

    return two_way_split(h, below, below, counter, symmetric=True)
