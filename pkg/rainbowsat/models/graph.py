"""Simple graph, edge and path models.

Graphs are stored as one bit row per vertex: bit ``u`` of ``adj[v]`` is set iff
``uv`` is an edge. Models are frozen so they can be shared across threads and
worker processes without copying.
"""

from collections.abc import Iterable, Iterator
from typing import TYPE_CHECKING, NamedTuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

if TYPE_CHECKING:
    import networkx as nx

MAX_VERTICES = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Edge(NamedTuple):
    """An undirected edge stored with ``u < v``."""

    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        """Build an edge from two endpoints in any order.

        Raises:
            ValueError: If the endpoints coincide or are negative.
        """
        if a == b:
            raise ValueError(f"edge endpoints must differ, got {a} twice")
        if a < 0 or b < 0:
            raise ValueError(f"edge endpoints must be non-negative, got ({a}, {b})")
        return cls(a, b) if a < b else cls(b, a)

    def __str__(self) -> str:
        return f"{self.u}-{self.v}"


class SimpleGraph(BaseModel):
    """Undirected simple graph on vertices ``0..n-1``.

    Attributes:
        n: Vertex count, between 1 and 64
        adj: One neighbourhood bit row per vertex

    Example:
        >>> g = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
        >>> g.edge_count
        2
        >>> g.neighbors(1)
        (0, 2)
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, le=MAX_VERTICES, description="Number of vertices")
    adj: tuple[int, ...] = Field(..., description="Neighbourhood bit row of every vertex")

    @model_validator(mode="after")
    def validate_rows(self) -> "SimpleGraph":
        if len(self.adj) != self.n:
            raise ValueError(f"expected {self.n} adjacency rows, got {len(self.adj)}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise ValueError(f"row {v} refers to a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"vertex {v} is adjacent to itself")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric between {u} and {v}")
        return self

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        """Build a graph from an edge list.

        Args:
            n: Number of vertices
            edges: Pairs of distinct vertices below ``n``; duplicates are merged

        Returns:
            The graph with exactly those edges.
        """
        rows = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) leaves the vertex range 0..{n - 1}")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(n=n, adj=tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n=n, adj=(0,) * n)

    @classmethod
    def complete(cls, n: int) -> "SimpleGraph":
        full = (1 << n) - 1
        return cls(n=n, adj=tuple(full & ~(1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, ((v, v + 1) for v in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "SimpleGraph":
        return cls.from_edges(n, ((v, (v + 1) % n) for v in range(n)))

    @classmethod
    def from_networkx(cls, graph: "nx.Graph") -> "SimpleGraph":
        """Convert a networkx graph, relabelling nodes to ``0..n-1`` in sorted order."""
        order = {node: index for index, node in enumerate(sorted(graph.nodes))}
        return cls.from_edges(len(order), ((order[a], order[b]) for a, b in graph.edges))

    def to_networkx(self) -> "nx.Graph":
        import networkx as nx

        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def edges(self) -> tuple[Edge, ...]:
        """Return every edge once, sorted by ``(u, v)``."""
        return tuple(Edge(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1)))

    def nonedges(self) -> tuple[Edge, ...]:
        """Return every non-adjacent pair once, sorted by ``(u, v)``."""
        full = self.vertex_mask
        return tuple(
            Edge(u, v)
            for u in range(self.n)
            for v in iter_bits(~self.adj[u] & full & ~((1 << (u + 1)) - 1))
        )

    def with_edge(self, u: int, v: int) -> "SimpleGraph":
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return SimpleGraph(n=self.n, adj=tuple(rows))

    def relabeled(self, order: Iterable[int]) -> "SimpleGraph":
        """Return the graph whose vertex ``i`` is vertex ``order[i]`` of this graph."""
        order = list(order)
        position = {old: new for new, old in enumerate(order)}
        return SimpleGraph.from_edges(self.n, ((position[e.u], position[e.v]) for e in self.edges()))

    def __str__(self) -> str:
        return f"SimpleGraph with {self.n} vertices and {self.edge_count} edges"


class PathWitness(BaseModel):
    """A path given as its vertex sequence.

    A P_t has t vertices and t - 1 edges. Whether the sequence really is a path
    depends on the graph it is read in, see ``first_defect``.
    """

    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...] = Field(..., min_length=1, description="Vertex sequence of the path")

    @property
    def edges(self) -> tuple[Edge, ...]:
        return tuple(Edge.of(a, b) for a, b in zip(self.vertices, self.vertices[1:]) if a != b)

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def first_defect(self, g: SimpleGraph) -> tuple[int, str] | None:
        """Locate the first step at which this sequence stops being a path of ``g``.

        Returns:
            ``(step, reason)`` with ``step`` the index into ``vertices``, or None if valid.
        """
        seen: set[int] = set()
        for step, v in enumerate(self.vertices):
            if not 0 <= v < g.n:
                return step, f"vertex {v} is not in the graph"
            if v in seen:
                return step, f"vertex {v} is repeated"
            if step and not g.has_edge(self.vertices[step - 1], v):
                return step, f"{self.vertices[step - 1]}-{v} is not an edge"
            seen.add(v)
        return None

    def reversed(self) -> "PathWitness":
        return PathWitness(vertices=self.vertices[::-1])

    def __len__(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        return "-".join(str(v) for v in self.vertices)


class CycleWitness(BaseModel):
    """A cycle given by its vertex sequence; the closing edge is implied.

    Attributes:
        vertices: Cycle vertices starting at the smallest one
        colors: Color of every cycle edge, the closing edge last
    """

    model_config = ConfigDict(frozen=True)

    vertices: tuple[int, ...] = Field(..., min_length=3)
    colors: tuple[int, ...] = Field(default=(), description="Edge colors along the cycle")

    @property
    def edges(self) -> tuple[Edge, ...]:
        closed = self.vertices + self.vertices[:1]
        return tuple(Edge.of(a, b) for a, b in zip(closed, closed[1:]))

    def __len__(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        return "-".join(str(v) for v in self.vertices + self.vertices[:1])
