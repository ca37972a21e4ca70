"""Tests for coloring files and graph file reading."""

import pytest

from rainbowsat.exceptions import ParseError
from rainbowsat.graph.coloring_io import format_coloring, parse_coloring, read_colored_graph, read_graph
from rainbowsat.graph.graph6 import encode_graph6
from rainbowsat.models.coloring import EdgeColoring
from rainbowsat.models.graph import SimpleGraph


def test_format_coloring_sorted_with_header():
    """Test lines come out sorted with the header as comments."""
    coloring = EdgeColoring.from_mapping({(2, 1): 4, (0, 1): 0})
    text = format_coloring(coloring, header="labels\nsecond")
    assert text == "# labels\n# second\n0 1 0\n1 2 4\n"


def test_parse_coloring_skips_comments():
    """Test comments and blank lines are ignored and endpoints are normalized."""
    coloring = parse_coloring("# header\n\n1 0 3  # trailing\n1 2 3\n")
    assert coloring.color_of((0, 1)) == 3
    assert coloring.class_count == 1


def test_parse_coloring_against_graph():
    """Test a complete coloring of the graph parses."""
    g = SimpleGraph.path(3)
    coloring = parse_coloring("0 1 0\n1 2 1\n", graph=g)
    assert coloring.edges == g.edges()


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("0 1\n", 1, "expected"),
        ("0 1 x\n", 1, "non-integer"),
        ("0 1 -1\n", 1, "negative"),
        ("0 1 0\n1 1 0\n", 2, ""),
        ("0 1 0\n# c\n1 0 2\n", 3, "twice"),
        ("0 1 0\n0 2 1\n", 2, "not an edge"),
    ],
)
def test_parse_coloring_errors(text, line, fragment):
    """Test malformed lines report their line number."""
    with pytest.raises(ParseError) as exc_info:
        parse_coloring(text, graph=SimpleGraph.path(3))
    assert exc_info.value.line == line
    assert fragment in str(exc_info.value)


def test_parse_coloring_missing_edge():
    """Test an uncolored edge is reported."""
    with pytest.raises(ParseError, match="has no color"):
        parse_coloring("0 1 0\n", graph=SimpleGraph.path(3))


def test_read_graph_skips_blank_lines(tmp_path):
    """Test the first non-blank record is read."""
    path = tmp_path / "g.g6"
    path.write_bytes(b"\n" + encode_graph6(SimpleGraph.cycle(5)) + b"\n")
    assert read_graph(path) == SimpleGraph.cycle(5)


def test_read_graph_empty_file(tmp_path):
    """Test an empty graph file is a parse error."""
    path = tmp_path / "empty.g6"
    path.write_bytes(b"")
    with pytest.raises(ParseError):
        read_graph(path)


def test_read_colored_graph(tmp_path):
    """Test reading with and without a coloring file."""
    graph_path = tmp_path / "c4.g6"
    graph_path.write_bytes(encode_graph6(SimpleGraph.cycle(4)))
    rainbow = read_colored_graph(graph_path, None)
    assert rainbow.coloring.is_rainbow

    coloring_path = tmp_path / "c4.col"
    coloring_path.write_text(format_coloring(EdgeColoring.monochromatic(SimpleGraph.cycle(4))))
    colored = read_colored_graph(graph_path, coloring_path)
    assert colored.coloring.class_count == 1
