import pytest
from conftest import small_graphs
from hypothesis import given, settings
from hypothesis import strategies as st

from grundyb.coloring import Coloring
from grundyb.errors import IncompleteColoring, ParseError
from grundyb.families import FamilySpec, gmn
from grundyb.io import export_dot, parse_coloring, parse_graph, parse_graph_file, serialize_coloring, serialize_graph


@settings(max_examples=100, deadline=None)
@given(small_graphs(max_n=9))
def test_graph_round_trip(G):
    assert parse_graph(serialize_graph(G)) == G


def test_provenance_round_trip():
    spec = FamilySpec("Gmn", {"m": 3, "n": 2})
    text = serialize_graph(gmn(3, 2), spec)
    assert text.startswith("# family: Gmn m=3 n=2\n6 ")
    G, back = parse_graph_file(text)
    assert back == spec and G == gmn(3, 2)


def test_parser_accepts_comments_and_reversed_pairs():
    G = parse_graph("# a comment\n3 2\n\n2 0\n# mid\n1 2\n")
    assert G.edges() == [(0, 2), (1, 2)]


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("3\n", 1),
    ("3 2\n0 1\n", 2),
    ("3 1\n0 1\n1 2\n", 3),
    ("3 2\n0 1\n1 0\n", 3),
    ("3 1\n0 5\n", 2),
    ("3 1\n1 1\n", 2),
    ("3 1\n0 x\n", 2),
    ("# family: \n1 0\n", 1),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=10))
def test_coloring_round_trip(raw):
    if set(raw) != set(range(1, max(raw) + 1)):
        return
    C = Coloring(tuple(raw))
    assert parse_coloring(serialize_coloring(C), len(raw)) == C


def test_coloring_parse_errors():
    with pytest.raises(ParseError):
        parse_coloring("1 2\n", 3)
    with pytest.raises(ParseError):
        parse_coloring("1 3\n")
    with pytest.raises(ParseError):
        parse_coloring("1 2\n1 2\n")
    with pytest.raises(ParseError):
        parse_coloring("a b\n")


def test_dot_export():
    G = gmn(2, 2)
    plain = export_dot(G)
    assert plain.startswith("graph G {") and plain.count(" -- ") == G.edge_count
    colored = export_dot(G, Coloring((1, 1, 2, 2)), name="H")
    assert 'label="3:2"' in colored and "fillcolor" in colored and colored.startswith("graph H {")
    with pytest.raises(IncompleteColoring):
        export_dot(G, Coloring((1, 2)))
