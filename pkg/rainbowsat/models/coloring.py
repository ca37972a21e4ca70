"""Edge colorings and edge-colored graphs."""

from bisect import bisect_left
from collections.abc import Iterator, Mapping

from pydantic import BaseModel, ConfigDict, Field, model_validator

from .graph import Edge, SimpleGraph


class EdgeColoring(BaseModel):
    """A total map from edges to non-negative color ids.

    The map is stored as two parallel tuples with ``edges`` sorted, which keeps
    the JSON form plain and the model hashable. Colors need not be contiguous.

    Example:
        >>> coloring = EdgeColoring.from_mapping({(0, 1): 5, (1, 2): 5})
        >>> coloring.color_of((1, 2))
        5
        >>> coloring.is_rainbow
        False
    """

    model_config = ConfigDict(frozen=True)

    edges: tuple[Edge, ...] = Field(default=(), description="Colored edges in sorted order")
    colors: tuple[int, ...] = Field(default=(), description="Color of the edge at the same position")

    @model_validator(mode="after")
    def validate_assignment(self) -> "EdgeColoring":
        if len(self.edges) != len(self.colors):
            raise ValueError(f"{len(self.edges)} edges but {len(self.colors)} colors")
        for edge in self.edges:
            if edge.u >= edge.v or edge.u < 0:
                raise ValueError(f"edge {tuple(edge)} must be written with 0 <= u < v")
        for before, after in zip(self.edges, self.edges[1:]):
            if before >= after:
                raise ValueError(f"edges must be strictly sorted, {tuple(before)} precedes {tuple(after)}")
        if any(color < 0 for color in self.colors):
            raise ValueError("colors must be non-negative integers")
        return self

    @classmethod
    def from_mapping(cls, assignment: Mapping[tuple[int, int], int]) -> "EdgeColoring":
        """Build a coloring from an ``{(u, v): color}`` mapping in any endpoint order."""
        normalized: dict[Edge, int] = {}
        for (a, b), color in assignment.items():
            edge = Edge.of(a, b)
            if edge in normalized:
                raise ValueError(f"edge {tuple(edge)} is colored twice")
            normalized[edge] = color
        ordered = sorted(normalized)
        return cls(edges=tuple(ordered), colors=tuple(normalized[e] for e in ordered))

    @classmethod
    def monochromatic(cls, g: SimpleGraph, color: int = 0) -> "EdgeColoring":
        edges = g.edges()
        return cls(edges=edges, colors=(color,) * len(edges))

    @property
    def assignment(self) -> dict[Edge, int]:
        return dict(zip(self.edges, self.colors))

    @property
    def is_rainbow(self) -> bool:
        return len(set(self.colors)) == len(self.colors)

    @property
    def class_count(self) -> int:
        return len(set(self.colors))

    def color_of(self, edge: tuple[int, int]) -> int:
        """Return the color of ``edge``.

        Raises:
            KeyError: If the edge is not colored.
        """
        key = Edge.of(*edge)
        index = bisect_left(self.edges, key)
        if index == len(self.edges) or self.edges[index] != key:
            raise KeyError(f"edge {tuple(key)} is not colored")
        return self.colors[index]

    def classes(self) -> dict[int, tuple[Edge, ...]]:
        """Return the color classes keyed by color id, in increasing color order."""
        grouped: dict[int, list[Edge]] = {}
        for edge, color in zip(self.edges, self.colors):
            grouped.setdefault(color, []).append(edge)
        return {color: tuple(grouped[color]) for color in sorted(grouped)}

    def normalized(self) -> "EdgeColoring":
        """Relabel colors to ``0..k-1`` in order of first appearance along the sorted edges."""
        relabel: dict[int, int] = {}
        for color in self.colors:
            relabel.setdefault(color, len(relabel))
        return EdgeColoring(edges=self.edges, colors=tuple(relabel[c] for c in self.colors))

    def items(self) -> Iterator[tuple[Edge, int]]:
        return iter(zip(self.edges, self.colors))

    def __len__(self) -> int:
        return len(self.edges)

    def __str__(self) -> str:
        return f"EdgeColoring of {len(self.edges)} edges with {self.class_count} colors"


class ColoredGraph(BaseModel):
    """A simple graph paired with a coloring of exactly its edge set."""

    model_config = ConfigDict(frozen=True)

    graph: SimpleGraph
    coloring: EdgeColoring

    @model_validator(mode="after")
    def validate_domain(self) -> "ColoredGraph":
        expected = self.graph.edges()
        if self.coloring.edges != expected:
            missing = sorted(set(expected) - set(self.coloring.edges))
            extra = sorted(set(self.coloring.edges) - set(expected))
            if missing:
                raise ValueError(f"edge {tuple(missing[0])} of the graph has no color")
            if extra:
                raise ValueError(f"colored pair {tuple(extra[0])} is not an edge of the graph")
            raise ValueError("coloring domain differs from the edge set")
        return self

    @classmethod
    def rainbow(cls, g: SimpleGraph) -> "ColoredGraph":
        """Pair ``g`` with the rainbow coloring ``0..e-1`` in edge-sort order."""
        edges = g.edges()
        return cls(graph=g, coloring=EdgeColoring(edges=edges, colors=tuple(range(len(edges)))))

    @property
    def n(self) -> int:
        return self.graph.n

    def __str__(self) -> str:
        g = self.graph
        return f"ColoredGraph with {g.n} vertices, {g.edge_count} edges, {self.coloring.class_count} colors"
