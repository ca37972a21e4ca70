"""Basic graph queries and bounded path enumeration.

The enumeration engine works directly on bit rows. ``iter_colored_paths`` is the
shared depth-first search used by the verifier, the search module and the public
``enumerate_paths``: it walks vertices in increasing order, keeps the visited
set as a bit mask and prunes with the BFS distance to the target, so every
path is produced once and in lexicographic order of its vertex sequence.
"""

import logging
from collections.abc import Iterable, Iterator, Sequence

from ..exceptions import RejectedInputError
from ..models.graph import PathWitness, SimpleGraph, iter_bits

logger = logging.getLogger(__name__)

UNREACHABLE = 1 << 30


def is_connected(g: SimpleGraph) -> bool:
    """Return True iff every vertex is reachable from vertex 0."""
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= g.adj[v]
        frontier = reach & ~seen
        seen |= frontier
    return seen == g.vertex_mask


def min_degree(g: SimpleGraph) -> int:
    return min(g.degrees())


def distances_to(adj: Sequence[int], target: int, blocked: int = 0) -> list[int]:
    """Breadth-first distances to ``target`` avoiding the ``blocked`` vertex mask.

    Unreachable vertices get ``UNREACHABLE``.
    """
    dist = [UNREACHABLE] * len(adj)
    dist[target] = 0
    seen = blocked | (1 << target)
    frontier = 1 << target
    depth = 0
    while frontier:
        depth += 1
        reach = 0
        for v in iter_bits(frontier):
            reach |= adj[v]
        frontier = reach & ~seen
        seen |= frontier
        for v in iter_bits(frontier):
            dist[v] = depth
    return dist


def iter_colored_paths(
    adj: Sequence[int],
    u: int,
    v: int,
    t: int,
    bits: Sequence[Sequence[int]] | None = None,
    blocked: int = 0,
) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield every path with ``t`` vertices from ``u`` to ``v``.

    Args:
        adj: Bit rows of the graph, already stripped of any avoided edges
        u: First vertex
        v: Last vertex
        t: Number of vertices on the path, at least 2
        bits: Optional ``n x n`` table mapping an edge to a one-bit label. When
            given, only paths whose edge labels are pairwise distinct are
            produced, and the OR of the labels is yielded with each path.
        blocked: Mask of vertices the path may not visit

    Yields:
        ``(vertices, label_mask)`` pairs; ``label_mask`` is 0 when ``bits`` is None.
    """
    if t == 2:
        if adj[u] >> v & 1:
            yield (u, v), bits[u][v] if bits is not None else 0
        return
    dist = distances_to(adj, v, blocked | (1 << u))
    path = [u]
    used = [0]
    visited = blocked | (1 << u) | (1 << v)
    stack = [adj[u] & ~visited]
    while stack:
        mask = stack[-1]
        if not mask:
            stack.pop()
            used.pop()
            visited &= ~(1 << path.pop())
            continue
        low = mask & -mask
        stack[-1] = mask ^ low
        w = low.bit_length() - 1
        depth = len(path)
        if dist[w] > t - depth - 1:
            continue
        label = 0
        if bits is not None:
            label = bits[path[-1]][w]
            if used[-1] & label:
                continue
        if depth == t - 2:
            # w is the penultimate vertex and dist[w] == 1 guarantees wv is an edge
            if bits is None:
                yield (*path, w, v), 0
            else:
                closing = bits[w][v]
                mask_so_far = used[-1] | label
                if not mask_so_far & closing:
                    yield (*path, w, v), mask_so_far | closing
            continue
        path.append(w)
        used.append(used[-1] | label)
        visited |= low
        stack.append(adj[w] & ~visited)


def enumerate_paths(
    g: SimpleGraph,
    u: int,
    v: int,
    t: int,
    avoid_edges: Iterable[tuple[int, int]] = (),
    avoid_vertices: Iterable[int] = (),
) -> Iterator[PathWitness]:
    """Yield every P_t of ``g`` from ``u`` to ``v`` avoiding the given edges and vertices.

    Paths are produced once each, in lexicographic order of their vertex sequence.

    Args:
        g: Graph to search
        u: First endpoint
        v: Last endpoint
        t: Number of vertices on each path
        avoid_edges: Edges no path may use
        avoid_vertices: Vertices no path may visit

    Raises:
        RejectedInputError: If the arguments are outside the operation's domain.

    Example:
        >>> [str(p) for p in enumerate_paths(SimpleGraph.complete(4), 0, 1, 4)]
        ['0-2-3-1', '0-3-2-1']
    """
    avoid_vertices = set(avoid_vertices)
    avoid_edges = list(avoid_edges)
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise RejectedInputError(f"endpoints ({u}, {v}) are not vertices of a graph on {g.n} vertices")
    if u == v:
        raise RejectedInputError(f"path endpoints must differ, got {u} twice")
    if not 2 <= t <= g.n:
        raise RejectedInputError(f"path length t={t} must satisfy 2 <= t <= n={g.n}")
    if u in avoid_vertices or v in avoid_vertices:
        raise RejectedInputError("path endpoints may not be avoided vertices")
    outside = [w for w in (*avoid_vertices, *(w for edge in avoid_edges for w in edge)) if not 0 <= w < g.n]
    if outside:
        raise RejectedInputError(f"avoided vertex {outside[0]} is not a vertex of a graph on {g.n} vertices")

    rows = list(g.adj)
    for a, b in avoid_edges:
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)
    blocked = 0
    for w in avoid_vertices:
        blocked |= 1 << w

    for vertices, _ in iter_colored_paths(rows, u, v, t, blocked=blocked):
        yield PathWitness(vertices=vertices)
