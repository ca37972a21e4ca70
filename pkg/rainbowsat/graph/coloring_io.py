"""Plain text edge coloring files.

One ``u v c`` line per edge, sorted by ``(u, v)``. Blank lines and ``#``
comments are ignored when reading.
"""

from pathlib import Path

from ..exceptions import ParseError
from ..models.coloring import ColoredGraph, EdgeColoring
from ..models.graph import Edge, SimpleGraph
from .graph6 import decode_graph6


def format_coloring(coloring: EdgeColoring, header: str | None = None) -> str:
    lines = [f"# {line}" for line in header.splitlines()] if header else []
    lines.extend(f"{edge.u} {edge.v} {color}" for edge, color in coloring.items())
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, graph: SimpleGraph | None = None) -> EdgeColoring:
    """Parse a coloring document.

    Args:
        text: Document contents
        graph: When given, every line must name an edge of this graph and
            every edge must be colored

    Raises:
        ParseError: With the 1-based line number of the first bad line.
    """
    assignment: dict[Edge, int] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ParseError(f"expected 'u v c', got {line!r}", line=number)
        try:
            a, b, color = (int(field) for field in fields)
        except ValueError:
            raise ParseError(f"non-integer field in {line!r}", line=number) from None
        if color < 0:
            raise ParseError(f"color {color} is negative", line=number)
        try:
            edge = Edge.of(a, b)
        except ValueError as e:
            raise ParseError(str(e), line=number) from None
        if edge in assignment:
            raise ParseError(f"edge {edge.u} {edge.v} is listed twice", line=number)
        if graph is not None and (edge.v >= graph.n or not graph.has_edge(edge.u, edge.v)):
            raise ParseError(f"{edge.u} {edge.v} is not an edge of the graph", line=number)
        assignment[edge] = color

    if graph is not None:
        missing = [edge for edge in graph.edges() if edge not in assignment]
        if missing:
            raise ParseError(f"edge {missing[0].u} {missing[0].v} has no color ({len(missing)} edges uncolored)")
    return EdgeColoring.from_mapping(assignment)


def read_graph(path: Path) -> SimpleGraph:
    """Read the first graph6 record of a file."""
    for line in path.read_bytes().splitlines():
        if line.strip():
            return decode_graph6(line)
    raise ParseError(f"{path} holds no graph6 record", offset=0)


def read_colored_graph(graph_path: Path, coloring_path: Path | None) -> ColoredGraph:
    """Read a graph6 file and either its coloring file or, without one, the rainbow coloring."""
    graph = read_graph(graph_path)
    if coloring_path is None:
        return ColoredGraph.rainbow(graph)
    coloring = parse_coloring(coloring_path.read_text(), graph=graph)
    return ColoredGraph(graph=graph, coloring=coloring)
