"""Certificates built from colorings and back, for triangle-free graphs.

- 4 colors -> 2-perfect partition: classes {0,1} | {2,3}, each side bipartite.
- 3 colors -> perfectly divisible partition: (S1 | S2, S3), S3 stable.
- divisible partition with omega(G) <= 2 -> stable set: B has omega < 2, so
  it is stable, and G - B = G[A] is perfect.
- stable set with G - S perfect and triangle-free -> 3-coloring: S plus the
  two sides of the bipartite remainder.
"""

from ..bitset import VertexSet
from ..certificates import Coloring, Partition2, StableSet
from ..errors import InvalidArgumentError
from ..graph import Graph, is_bipartite


def _padded(coloring: Coloring, k: int) -> tuple[VertexSet, ...]:
    if len(coloring.classes) > k:
        raise InvalidArgumentError(f"expected at most {k} colors, got {len(coloring.classes)}")
    return tuple(coloring.classes) + (0,) * (k - len(coloring.classes))


def two_perfect_partition_from_coloring(coloring: Coloring) -> Partition2:
    c = _padded(coloring, 4)
    return Partition2(c[0] | c[1], c[2] | c[3])


def divisible_partition_from_coloring(coloring: Coloring) -> Partition2:
    c = _padded(coloring, 3)
    return Partition2(c[0] | c[1], c[2])


def stable_set_from_partition(g: Graph, partition: Partition2) -> StableSet:
    for v in range(g.n):
        if partition.b >> v & 1 and g.adj[v] & partition.b:
            raise InvalidArgumentError("side B is not stable; the graph is not triangle-free")
    return StableSet(partition.b)


def coloring_from_stable_set(g: Graph, stable: StableSet) -> Coloring:
    rest = g.vertices & ~stable.vertices
    part = is_bipartite(g, rest)
    if part is None:
        raise InvalidArgumentError("removing the stable set leaves a non-bipartite graph")
    return Coloring((part.left, part.right, stable.vertices))
