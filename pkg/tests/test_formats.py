"""Unit tests for formats.py; graph6 output is cross-checked against networkx."""

import networkx as nx
import pytest

from perfectlab.errors import GraphParseError, SizeLimitError
from perfectlab.formats import (
    load_graphs,
    parse_edge_list,
    parse_graph6,
    read_graph6_lines,
    write_edge_list,
    write_graph6,
)
from perfectlab.named import complete, cycle, from_networkx, grotzsch, petersen, to_networkx


# --- graph6 ---

def test_graph6_c5():
    assert write_graph6(cycle(5)) == "Dhc"
    assert parse_graph6("Dhc") == cycle(5)


def test_graph6_trivial_graphs():
    assert parse_graph6("?").n == 0
    assert parse_graph6("@").n == 1
    assert write_graph6(complete(1)) == "@"


def test_graph6_header_accepted():
    assert parse_graph6(">>graph6<<Dhc") == cycle(5)
    assert write_graph6(cycle(5), header=True) == ">>graph6<<Dhc"


def test_graph6_matches_networkx_bytes():
    for g in (petersen(), grotzsch(), complete(7), cycle(9)):
        expected = nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()
        assert write_graph6(g) == expected


def test_graph6_parse_matches_networkx():
    text = nx.to_graph6_bytes(nx.petersen_graph(), header=False).decode("ascii").strip()
    parsed = parse_graph6(text)
    assert parsed == from_networkx(nx.from_graph6_bytes(text.encode("ascii")))


def test_graph6_invalid_character():
    with pytest.raises(GraphParseError):
        parse_graph6("Dh!")


def test_graph6_trailing_bytes():
    with pytest.raises(GraphParseError):
        parse_graph6("Dhcc")


def test_graph6_nonzero_padding():
    with pytest.raises(GraphParseError):
        parse_graph6("Dhd")


def test_graph6_non_canonical_length():
    with pytest.raises(GraphParseError):
        parse_graph6("~??D")


def test_graph6_over_cap():
    with pytest.raises(SizeLimitError):
        parse_graph6("_")


def test_graph6_lines_report_line_numbers():
    lines = read_graph6_lines("Dhc\n\nDh!\n")
    assert next(lines) == cycle(5)
    with pytest.raises(GraphParseError, match="line 3"):
        next(lines)


# --- edge list ---

def test_parse_edge_list():
    g = parse_edge_list("# path\n3 2\n0 1\n\n1 2\n")
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_edge_list_write_then_parse():
    g = petersen()
    assert parse_edge_list(write_edge_list(g)) == g


def test_edge_list_missing_edges():
    with pytest.raises(GraphParseError, match="line 2"):
        parse_edge_list("3 2\n0 1\n")


def test_edge_list_bad_token():
    with pytest.raises(GraphParseError, match="line 2"):
        parse_edge_list("3 1\n0 x\n")


def test_edge_list_self_loop():
    with pytest.raises(GraphParseError, match="line 2"):
        parse_edge_list("3 1\n1 1\n")


def test_edge_list_out_of_range():
    with pytest.raises(GraphParseError, match="line 3"):
        parse_edge_list("3 2\n0 1\n0 5\n")


def test_edge_list_bad_header():
    with pytest.raises(GraphParseError, match="line 1"):
        parse_edge_list("three\n")


def test_edge_list_too_many_edges():
    with pytest.raises(GraphParseError, match="line 3"):
        parse_edge_list("3 1\n0 1\n1 2\n")


# --- files ---

def test_load_graphs_graph6(tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text("Dhc\n@\n")
    graphs = load_graphs(path)
    assert [g.n for g in graphs] == [5, 1]


def test_load_graphs_edgelist(tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text(write_edge_list(cycle(5)))
    assert load_graphs(path, "edgelist") == [cycle(5)]
