"""2-perfect: V(G) splits into A, B with G[A] and G[B] both perfect."""

from ..bitset import VertexSet, popcount
from ..certificates import Exhausted, PropertyReport
from ..config import TWO_PERFECT_CAP
from ..graph import Graph, complement, is_triangle_free
from ..invariants import SubsetCache, is_k_colorable
from ..perfection import has_odd_hole
from .constructions import two_perfect_partition_from_coloring
from .search import check_size, two_way_split

NAME = "2-perfect"


class TwoPerfectChecker:
    cap = TWO_PERFECT_CAP

    def check(self, g: Graph, cache: SubsetCache | None = None, direct: bool = False) -> PropertyReport:
        check_size(NAME, g, self.cap)
        if not direct and is_triangle_free(g):
            return self._triangle_free(g)
        return self._search(g)

    def _triangle_free(self, g: Graph) -> PropertyReport:
        # triangle-free sides are perfect iff bipartite, so this is 4-colorability
        coloring = is_k_colorable(g, 4)
        if coloring is None:
            return PropertyReport(
                NAME, False, Exhausted("triangle-free and not 4-colorable"),
                extra={"route": "triangle-free"},
            )
        return PropertyReport(
            NAME, True, two_perfect_partition_from_coloring(coloring),
            extra={"route": "triangle-free"},
        )

    def _search(self, g: Graph) -> PropertyReport:
        comp = complement(g)
        counter = [0]

        def stays_perfect(side: VertexSet, v: int) -> bool:
            grown = side | (1 << v)
            if popcount(grown) < 5:
                return True
            # side was perfect, so any new odd hole or antihole passes through v
            return not has_odd_hole(g, grown, through=v) and not has_odd_hole(comp, grown, through=v)

        part = two_way_split(g.vertices, stays_perfect, stays_perfect, counter, symmetric=True)
        if part is None:
            return PropertyReport(
                NAME, False, Exhausted("no partition into two perfect sides"),
                nodes_searched=counter[0], extra={"route": "search"},
            )
        return PropertyReport(NAME, True, part, nodes_searched=counter[0], extra={"route": "search"})
