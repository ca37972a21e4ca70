"""Isomorph-free generation of candidate graphs.

Graphs are grown one edge at a time. Every level keeps one canonical
representative per isomorphism class, so each class on ``m`` edges is reached
from some class on ``m - 1`` edges and emitted exactly once.
"""

import logging
from collections.abc import Iterator

from ..exceptions import RejectedInputError
from ..graph.paths import is_connected, min_degree
from ..models.graph import SimpleGraph, iter_bits
from .canonical import canonical_form

logger = logging.getLogger(__name__)


def _components(g: SimpleGraph) -> int:
    seen = 0
    count = 0
    for start in range(g.n):
        if seen >> start & 1:
            continue
        count += 1
        frontier = 1 << start
        seen |= frontier
        while frontier:
            reached = 0
            for v in iter_bits(frontier):
                reached |= g.adj[v]
            frontier = reached & ~seen
            seen |= frontier
    return count


def can_reach_target(g: SimpleGraph, remaining: int) -> bool:
    """Whether ``remaining`` more edges could make ``g`` connected with minimum degree 2.

    Each added edge lowers the total degree deficit by at most two and merges
    at most two components.
    """
    deficit = sum(max(0, 2 - d) for d in g.degrees())
    return deficit <= 2 * remaining and _components(g) - 1 <= remaining


def enumerate_graphs(n: int, m: int) -> Iterator[SimpleGraph]:
    """Yield one canonical graph per class of connected graphs on ``n`` vertices and ``m`` edges with min degree 2.

    Classes come out in decreasing order of canonical code.

    Raises:
        RejectedInputError: If ``m`` exceeds ``n(n-1)/2``.
    """
    if n < 1:
        raise RejectedInputError(f"n={n} must be positive")
    if m < 0 or m > n * (n - 1) // 2:
        raise RejectedInputError(f"m={m} is outside 0..{n * (n - 1) // 2} for n={n}")

    level: dict[int, SimpleGraph] = {0: SimpleGraph.empty(n)}
    for size in range(1, m + 1):
        remaining = m - size
        grown: dict[int, SimpleGraph] = {}
        for code in sorted(level, reverse=True):
            g = level[code]
            for nonedge in g.nonedges():
                h = g.with_edge(nonedge.u, nonedge.v)
                if not can_reach_target(h, remaining):
                    continue
                key, order = canonical_form(h)
                if key not in grown:
                    grown[key] = h.relabeled(order)
        level = grown
        logger.debug(f"n={n}: {len(level)} classes on {size} edges")

    for code in sorted(level, reverse=True):
        g = level[code]
        if is_connected(g) and min_degree(g) >= 2:
            yield g
