"""Nice: chi(H) - omega(H) is 0 or 1 for every induced subgraph H."""

from ..bitset import subsets_by_size
from ..certificates import ImperfectionWitness, PropertyReport
from ..config import NICE_CAP
from ..graph import Graph
from ..invariants import SubsetCache, optimal_coloring
from .search import check_size

NAME = "nice"


class NiceChecker:
    cap = NICE_CAP

    def check(self, g: Graph, cache: SubsetCache | None = None, direct: bool = False) -> PropertyReport:
        check_size(NAME, g, self.cap)
        cache = cache or SubsetCache(g)
        cache.check_owner(g)
        swept = 0
        for s in subsets_by_size(g.vertices, min_size=1):
            swept += 1
            omega = cache.omega(s)
            chi = cache.chi(s)
            if chi - omega > 1:
                return PropertyReport(NAME, False, ImperfectionWitness(s, chi, omega), nodes_searched=swept)
        coloring = optimal_coloring(g)
        return PropertyReport(
            NAME, True, coloring, nodes_searched=swept, extra={"colors": coloring.num_colors}
        )
