"""Stable-perfect: removing some stable set S (possibly empty) leaves a perfect graph."""

from ..bitset import VertexSet
from ..certificates import Exhausted, PropertyReport, StableSet
from ..config import HEREDITARY_MEMO_CAP, STABLE_PERFECT_CAP
from ..graph import Graph, complement, is_bipartite, is_triangle_free
from ..invariants import SubsetCache, is_k_colorable
from ..perfection import find_odd_antihole, find_odd_hole, is_berge, is_perfect_subset
from .search import check_size, independent_sets

NAME = "stable-perfect"


class StablePerfectChecker:
    cap = STABLE_PERFECT_CAP

    def check(self, g: Graph, cache: SubsetCache | None = None, direct: bool = False) -> PropertyReport:
        check_size(NAME, g, self.cap)
        triangle_free = is_triangle_free(g)
        route = "triangle-free" if triangle_free and not direct else "search"
        if route == "triangle-free" and is_k_colorable(g, 3) is None:
            return PropertyReport(
                NAME, False, Exhausted("triangle-free and not 3-colorable"), extra={"route": route}
            )
        cache = cache or SubsetCache(g)
        cache.check_owner(g)
        comp = complement(g)

        def remainder_perfect(rest: VertexSet) -> bool:
            if triangle_free:
                return is_bipartite(g, rest) is not None
            if g.n <= HEREDITARY_MEMO_CAP:
                return is_perfect_subset(cache, rest)
            return is_berge(g, rest, comp)

        obstruction = find_odd_hole(g) or find_odd_antihole(g)
        if obstruction is None:
            return PropertyReport(NAME, True, StableSet(0), extra={"route": route})
        # S must meet this obstruction or it survives in G - S
        hit = sum(1 << v for v in obstruction.vertices)

        tried = 0
        for s in independent_sets(g, g.vertices):
            if not s & hit:
                continue
            tried += 1
            if remainder_perfect(g.vertices & ~s):
                return PropertyReport(NAME, True, StableSet(s), nodes_searched=tried, extra={"route": route})
        return PropertyReport(
            NAME, False, Exhausted("no stable set leaves a perfect graph"),
            nodes_searched=tried, extra={"route": route},
        )
