"""Bitmask helpers. A VertexSet is a plain int: bit v set means vertex v is present."""

from itertools import combinations
from typing import Iterable, Iterator

VertexSet = int


def popcount(s: VertexSet) -> int:
    return s.bit_count()


def bits(s: VertexSet) -> Iterator[int]:
    """Yield the vertices of s in ascending order."""
    while s:
        low = s & -s
        yield low.bit_length() - 1
        s ^= low


def lowest(s: VertexSet) -> int:
    """Smallest vertex of a non-empty set."""
    return (s & -s).bit_length() - 1


def to_mask(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def to_list(s: VertexSet) -> list[int]:
    return list(bits(s))


def full_mask(n: int) -> VertexSet:
    return (1 << n) - 1


def subsets_by_size(s: VertexSet, min_size: int = 0, max_size: int | None = None) -> Iterator[VertexSet]:
    """Subsets of s by increasing size, lexicographic (ascending vertex lists) within a size.

    This is the "least subset" order used by every sweep that reports a witness.
    """
    members = to_list(s)
    top = len(members) if max_size is None else min(max_size, len(members))
    for k in range(min_size, top + 1):
        for combo in combinations(members, k):
            yield to_mask(combo)
