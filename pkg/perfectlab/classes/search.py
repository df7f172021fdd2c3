"""Shared search helpers for the class checkers."""

from typing import Callable, Iterator

from ..bitset import VertexSet, bits
from ..certificates import Partition2
from ..errors import SizeLimitError
from ..graph import Graph

# fits(side_mask, v) -> True when adding v to the side keeps its condition
SideTest = Callable[[VertexSet, int], bool]


def check_size(check: str, g: Graph, cap: int) -> None:
    if g.n > cap:
        raise SizeLimitError(check, g.n, cap)


def two_way_split(
    h: VertexSet,
    fits_a: SideTest,
    fits_b: SideTest,
    counter: list[int],
    symmetric: bool = False,
) -> Partition2 | None:
    """Depth-first split of h into (A, B), vertices placed in ascending order,
    A tried before B.

    Both side conditions must be hereditary so a failing prefix can be cut.
    The first partition found has the lexicographically least side-label
    vector (A=0, B=1). With `symmetric`, the lowest vertex only goes to A.
    """
    order = list(bits(h))

    def place(i: int, a: VertexSet, b: VertexSet) -> Partition2 | None:
        if i == len(order):
            return Partition2(a, b)
        counter[0] += 1
        v = order[i]
        bit = 1 << v
        if fits_a(a, v):
            found = place(i + 1, a | bit, b)
            if found is not None:
                return found
        if (i > 0 or not symmetric) and fits_b(b, v):
            return place(i + 1, a, b | bit)
        return None

    return place(0, 0, 0)


def independent_sets(g: Graph, within: VertexSet) -> Iterator[VertexSet]:
    """Independent sets of G[within] by increasing size, then lexicographically;
    the empty set first."""
    size = 0
    while True:
        found = False
        for s in _independent_of_size(g, within, size):
            found = True
            yield s
        if not found:
            return
        size += 1


def _independent_of_size(g: Graph, cand: VertexSet, k: int) -> Iterator[VertexSet]:
    if k == 0:
        yield 0
        return
    for v in bits(cand):
        rest = cand & ~g.adj[v] & ~((1 << (v + 1)) - 1)
        for tail in _independent_of_size(g, rest, k - 1):
            yield (1 << v) | tail
