"""Cycle search in colored and uncolored graphs."""

import logging
from collections.abc import Sequence

from ..exceptions import RejectedInputError
from ..graph.paths import iter_colored_paths
from ..models.coloring import ColoredGraph
from ..models.graph import CycleWitness, SimpleGraph, iter_bits

logger = logging.getLogger(__name__)


class ColorTable:
    """Bit labels for the color classes of a colored graph.

    Class ``i`` is the ``i``-th smallest color id, so the lowest set bit of a
    class mask is always the smallest color it contains.
    """

    def __init__(self, cg: ColoredGraph):
        n = cg.graph.n
        self.colors: tuple[int, ...] = tuple(sorted(set(cg.coloring.colors)))
        index = {color: i for i, color in enumerate(self.colors)}
        self.bits: list[list[int]] = [[0] * n for _ in range(n)]
        for edge, color in cg.coloring.items():
            label = 1 << index[color]
            self.bits[edge.u][edge.v] = label
            self.bits[edge.v][edge.u] = label

    @property
    def all_classes(self) -> int:
        return (1 << len(self.colors)) - 1

    def color_of_bit(self, mask: int) -> int:
        """Return the smallest color in a non-empty class mask."""
        return self.colors[(mask & -mask).bit_length() - 1]


def search_cycle(adj: Sequence[int], r: int, bits: Sequence[Sequence[int]] | None = None) -> tuple[int, ...] | None:
    """Return the first C_r, rainbow under ``bits`` when given, as a vertex tuple.

    Cycles are rooted at their smallest vertex ``s``; candidates are ordered by
    ``s``, then by the pair ``a < b`` of neighbours of ``s`` closing the cycle,
    then lexicographically by the path from ``a`` to ``b``.
    """
    n = len(adj)
    if r > n:
        return None
    for s in range(n):
        below = (1 << (s + 1)) - 1
        ends = list(iter_bits(adj[s] & ~below))
        for i, a in enumerate(ends):
            for b in ends[i + 1 :]:
                closing = 0
                if bits is not None:
                    if bits[s][a] == bits[s][b]:
                        continue
                    closing = bits[s][a] | bits[s][b]
                for path, used in iter_colored_paths(adj, a, b, r - 1, bits, blocked=below):
                    if not used & closing:
                        return (s, *path)
    return None


def find_rainbow_cycle(cg: ColoredGraph, r: int) -> CycleWitness | None:
    """Return a C_r whose edges have pairwise distinct colors, or None.

    The witness is the first one in root/path order, see ``search_cycle``.

    Raises:
        RejectedInputError: If ``r < 3``.
    """
    if r < 3:
        raise RejectedInputError(f"cycle length r={r} must be at least 3")
    table = ColorTable(cg)
    vertices = search_cycle(cg.graph.adj, r, table.bits)
    if vertices is None:
        return None
    closed = vertices + vertices[:1]
    colors = tuple(cg.coloring.color_of((a, b)) for a, b in zip(closed, closed[1:]))
    logger.debug(f"Found rainbow C_{r} {vertices}")
    return CycleWitness(vertices=vertices, colors=colors)


def find_cycle(g: SimpleGraph, r: int) -> CycleWitness | None:
    """Return the first C_r of ``g`` regardless of colors, or None."""
    if r < 3:
        raise RejectedInputError(f"cycle length r={r} must be at least 3")
    vertices = search_cycle(g.adj, r)
    return None if vertices is None else CycleWitness(vertices=vertices)
