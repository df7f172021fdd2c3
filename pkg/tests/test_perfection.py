"""Tests for perfection.py: odd holes and the two perfection routes."""

import networkx as nx
import pytest

from perfectlab.bitset import subsets_by_size, to_mask
from perfectlab.certificates import Bipartition, Exhausted, ImperfectionWitness, OddCycle, validate
from perfectlab.errors import SizeLimitError
from perfectlab.graph import Graph, complement, from_edge_list, induced_subgraph
from perfectlab.invariants import SubsetCache
from perfectlab.named import complete, cycle, empty, from_networkx, grotzsch, petersen
from perfectlab.perfection import (
    find_odd_antihole,
    find_odd_hole,
    has_odd_hole,
    is_berge,
    is_perfect,
    is_perfect_by_definition,
    is_perfect_by_spgt,
    is_perfect_subset,
)


def _atlas(max_nodes: int) -> list[Graph]:
    return [from_networkx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() <= max_nodes]


# --- odd holes ---

def test_find_odd_hole_c5():
    assert find_odd_hole(cycle(5)) == OddCycle((0, 1, 2, 3, 4), kind="hole")


def test_find_odd_hole_none():
    assert find_odd_hole(cycle(6)) is None
    assert find_odd_hole(complete(5)) is None
    assert find_odd_hole(cycle(4)) is None


def test_find_odd_hole_petersen_outer_cycle():
    assert find_odd_hole(petersen()) == OddCycle((0, 1, 2, 3, 4), kind="hole")


def test_find_odd_hole_prefers_shortest():
    # C7 on 0..6 plus a C5 on 6..10 sharing vertex 6
    edges = [(i, (i + 1) % 7) for i in range(7)]
    edges += [(6, 7), (7, 8), (8, 9), (9, 10), (10, 6)]
    hole = find_odd_hole(from_edge_list(11, edges))
    assert sorted(hole.vertices) == [6, 7, 8, 9, 10]


def test_find_odd_hole_c7():
    hole = find_odd_hole(cycle(7))
    assert hole.vertices == (0, 1, 2, 3, 4, 5, 6)


@pytest.mark.parametrize("length", [5, 7, 9])
def test_odd_hole_found_at_exact_length(length):
    # the path must reach length - 1 vertices before the closing edge
    g = cycle(length)
    hole = find_odd_hole(g)
    assert hole is not None
    assert len(hole.vertices) == length
    assert has_odd_hole(g)
    assert has_odd_hole(g, through=length - 1)


@pytest.mark.parametrize("g", [cycle(5), cycle(7), complement(cycle(7)), petersen()],
                         ids=["c5", "c7", "co-c7", "petersen"])
def test_imperfect_graphs_rejected_by_spgt(g):
    assert not is_perfect_by_spgt(g)
    assert find_odd_hole(g) is not None or find_odd_antihole(g) is not None
    assert not is_perfect(g).holds


def test_find_odd_hole_within():
    g = petersen()
    assert find_odd_hole(g, within=to_mask(range(4))) is None


def test_has_odd_hole_through():
    g = from_edge_list(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0)])
    assert has_odd_hole(g, through=0)
    assert not has_odd_hole(g, through=5)


def test_find_odd_antihole_c7_complement():
    g = complement(cycle(7))
    assert find_odd_hole(g) is None
    antihole = find_odd_antihole(g)
    assert antihole == OddCycle((0, 1, 2, 3, 4, 5, 6), kind="antihole")
    assert validate(g, is_perfect(g)) == []


def test_odd_holes_validate():
    for g in (cycle(5), cycle(9), petersen(), grotzsch()):
        report = is_perfect(g)
        assert isinstance(report.certificate, OddCycle)
        assert validate(g, report) == []


# --- perfection ---

def test_is_perfect_bipartite_certificate():
    report = is_perfect(cycle(6))
    assert report.holds
    assert isinstance(report.certificate, Bipartition)
    assert report.extra["route"] == "triangle-free"


def test_is_perfect_c7_and_grotzsch():
    assert not is_perfect(cycle(7)).holds
    assert not is_perfect(grotzsch()).holds


def test_is_perfect_complete():
    report = is_perfect(complete(4), verify=True)
    assert report.holds
    assert isinstance(report.certificate, Exhausted)
    assert report.extra["route"] == "odd-hole"


def test_is_perfect_spgt():
    assert is_perfect_by_spgt(cycle(6))
    assert is_perfect_by_spgt(complement(cycle(6)))
    assert not is_perfect_by_spgt(cycle(5))


def test_definition_route_c5():
    assert is_perfect_by_definition(cycle(5)) == ImperfectionWitness(0b11111, 3, 2)


def test_definition_route_c7_complement():
    witness = is_perfect_by_definition(complement(cycle(7)))
    assert witness == ImperfectionWitness(0b1111111, 4, 3)


def test_definition_route_perfect():
    assert is_perfect_by_definition(complete(4)) is None
    assert is_perfect_by_definition(cycle(6)) is None


def test_definition_route_cap():
    with pytest.raises(SizeLimitError):
        is_perfect_by_definition(empty(17))


def test_routes_agree_small_atlas():
    for g in _atlas(6):
        by_definition = is_perfect_by_definition(g) is None
        assert is_perfect_by_spgt(g) == by_definition, str(g)
        assert is_perfect(g).holds == by_definition, str(g)


@pytest.mark.slow
def test_routes_agree_atlas_7():
    for g in _atlas(7):
        assert is_perfect(g, verify=True).holds == is_perfect_by_spgt(g)


def test_self_duality_atlas():
    for g in _atlas(7):
        assert is_perfect_by_spgt(g) == is_perfect_by_spgt(complement(g)), str(g)


def test_perfection_is_hereditary():
    for g in _atlas(6):
        if not is_perfect(g).holds:
            continue
        for s in subsets_by_size(g.vertices, min_size=1):
            assert is_perfect(induced_subgraph(g, s)).holds


# --- memoized subset perfection ---

def test_is_perfect_subset_matches_berge():
    for g in (petersen(), complement(cycle(7))):
        cache = SubsetCache(g)
        for s in subsets_by_size(g.vertices, min_size=4):
            assert is_perfect_subset(cache, s) == is_berge(g, s), (str(g), s)
