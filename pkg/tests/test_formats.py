import pytest

from isk4lab.enumeration import enumerate_graphs
from isk4lab.formats import FormatError, decode_graph6, encode_graph6, format_edgelist, parse_edgelist
from isk4lab.graph import Graph, path, petersen

import networkx as nx

from oracles import to_nx


def test_graph6_small():
    assert decode_graph6("@") == Graph(1)
    assert encode_graph6(Graph(5)) == "D??"
    assert decode_graph6(">>graph6<<D??") == Graph(5)


def test_graph6_errors():
    with pytest.raises(FormatError):
        decode_graph6("D???")
    with pytest.raises(FormatError):
        decode_graph6("A ")
    with pytest.raises(FormatError):
        decode_graph6("B@")  # padding bit set
    with pytest.raises(FormatError):
        decode_graph6("")
    with pytest.raises(FormatError):
        encode_graph6(Graph(63))


def test_graph6_matches_networkx():
    for g in [petersen(), path(7), *enumerate_graphs(5)]:
        ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert encode_graph6(g) == ref
        assert decode_graph6(ref) == g


def test_edgelist_examples():
    assert parse_edgelist("n 3\n0 1\n1 2") == path(3)
    with pytest.raises(FormatError):
        parse_edgelist("0 0")
    with pytest.raises(FormatError):
        parse_edgelist("0 1\n0 1")
    with pytest.raises(FormatError):
        parse_edgelist("n 2\n0 2")
    assert parse_edgelist("# comment\n\n0 1\n") == path(2)


def test_edgelist_round_trip():
    g = petersen()
    assert parse_edgelist(format_edgelist(g)) == g
    assert parse_edgelist(format_edgelist(Graph(4))) == Graph(4)
