"""Perfectly divisible: every induced subgraph H splits into A, B with H[A]
perfect and omega(B) < omega(H)."""

from ..bitset import VertexSet, subsets_by_size
from ..certificates import Partition2, PropertyReport, RefutingSubgraph
from ..config import PERFECTLY_DIVISIBLE_CAP
from ..graph import Graph
from ..invariants import SubsetCache
from ..perfection import is_perfect_subset
from .search import check_size, two_way_split

NAME = "perfectly-divisible"


class PerfectlyDivisibleChecker:
    cap = PERFECTLY_DIVISIBLE_CAP

    def check(self, g: Graph, cache: SubsetCache | None = None, direct: bool = False) -> PropertyReport:
        check_size(NAME, g, self.cap)
        cache = cache or SubsetCache(g)
        cache.check_owner(g)
        counter = [0]
        top = Partition2(0, 0)
        for h in subsets_by_size(g.vertices, min_size=1):
            part = divide(cache, h, counter)
            if part is None:
                return PropertyReport(
                    NAME, False, RefutingSubgraph(h, cache.omega(h)), nodes_searched=counter[0]
                )
            top = part
        return PropertyReport(NAME, True, top, nodes_searched=counter[0])


def divide(cache: SubsetCache, h: VertexSet, counter: list[int]) -> Partition2 | None:
    """Least partition of H into a perfect side A and a side B with omega(B) < omega(H)."""
    g = cache.graph
    target = cache.omega(h)

    def a_perfect(a: VertexSet, v: int) -> bool:
        return is_perfect_subset(cache, a | (1 << v))

    def b_below(b: VertexSet, v: int) -> bool:
        return cache.omega(b & g.adj[v]) + 1 < target

    return two_way_split(h, a_perfect, b_below, counter)
