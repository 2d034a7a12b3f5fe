"""Codec tests: hand-decoded fixtures first, then networkx as cross-oracle."""

import networkx as nx
import pytest
from hypothesis import given

from domratio import Graph, MalformedGraph6, TooLarge, encode, parse, read_lines, write_lines

import helpers
from conftest import arbitrary_graphs


# Fixtures decoded by hand from the 6-bit definition:
#   "@"  -> n=1, no body
#   "A_" -> n=2, body 0b100000: the single edge
#   "A?" -> n=2, body zero: two isolated vertices
#   "C~" -> n=4, body 0b111111: K4
def test_hand_decoded_values():
    assert parse("@") == Graph(1, (0,))
    assert parse("A_") == Graph.from_edges(2, [(0, 1)])
    assert parse("A?") == Graph(2, (0, 0))
    assert parse("C~") == helpers.make_complete(4)
    assert encode(helpers.make_complete(4)) == "C~"
    assert encode(Graph.from_edges(2, [(0, 1)])) == "A_"
    assert encode(Graph(1, (0,))) == "@"


def test_petersen_standard_line():
    g = parse("IsP@PGXD_")
    assert g.n == 10
    assert helpers.isomorphic(g, helpers.make_petersen())


def test_header_prefix_accepted():
    assert parse(">>graph6<<C~") == helpers.make_complete(4)


def test_long_form_roundtrip():
    g = Graph.from_edges(63, [(0, 62), (5, 40)])
    line = encode(g)
    assert line.startswith("~")
    assert parse(line) == g


def test_malformed_inputs():
    with pytest.raises(MalformedGraph6):
        parse("")
    with pytest.raises(MalformedGraph6):
        parse("C~~")  # trailing bytes
    with pytest.raises(MalformedGraph6):
        parse("C")  # truncated body
    with pytest.raises(MalformedGraph6):
        parse("A!")  # byte below the alphabet
    with pytest.raises(MalformedGraph6):
        parse("?")  # zero vertices
    assert parse("Bw") == helpers.make_complete(3)  # all three cells set, clean padding
    with pytest.raises(MalformedGraph6):
        parse("B@")  # nonzero padding bits for n=3


def test_too_large_rejected():
    # long-form header encoding 100000 vertices
    n = 100000
    head = "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    with pytest.raises(TooLarge):
        parse(head)


def test_read_lines_reports_line_numbers():
    text = "C~\nA_\n"
    gs = read_lines(text)
    assert [g.n for g in gs] == [4, 2]
    with pytest.raises(MalformedGraph6) as err:
        read_lines("C~\nA!\n")
    assert "line 2" in str(err.value)


def test_write_lines_roundtrip():
    gs = [helpers.make_complete(4), helpers.make_petersen()]
    assert read_lines(write_lines(gs)) == gs


@given(arbitrary_graphs(max_n=12))
def test_roundtrip(g):
    assert parse(encode(g)) == g


@given(arbitrary_graphs(max_n=10))
def test_encode_agrees_with_networkx(g):
    ours = encode(g)
    theirs = nx.to_graph6_bytes(helpers.to_networkx(g), header=False).decode().strip()
    assert ours == theirs


@given(arbitrary_graphs(max_n=10))
def test_parse_agrees_with_networkx(g):
    line = nx.to_graph6_bytes(helpers.to_networkx(g), header=False).decode().strip()
    assert parse(line) == g
