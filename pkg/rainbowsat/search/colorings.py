"""Edge colorings up to renaming of colors, as set partitions of the edge set."""

import logging
from collections.abc import Iterator
from functools import cache

from ..exceptions import BudgetExceededError
from ..models.coloring import EdgeColoring
from ..models.graph import SimpleGraph
from ..settings import settings

logger = logging.getLogger(__name__)


@cache
def bell_number(k: int) -> int:
    """Number of set partitions of a ``k``-element set, from the Bell triangle.

    Example:
        >>> [bell_number(k) for k in range(6)]
        [1, 1, 2, 5, 15, 52]
    """
    row = [1]
    for _ in range(k):
        nxt = [row[-1]]
        for value in row:
            nxt.append(nxt[-1] + value)
        row = nxt
    return row[0]


def iter_restricted_growth(k: int) -> Iterator[tuple[int, ...]]:
    """Yield the restricted growth strings of length ``k`` in lexicographic order.

    Position ``i`` holds at most one more than the largest value before it, and
    the first position is always 0.
    """
    if k == 0:
        yield ()
        return
    word = [0] * k

    def extend(position: int, top: int) -> Iterator[tuple[int, ...]]:
        if position == k:
            yield tuple(word)
            return
        for value in range(top + 2):
            word[position] = value
            yield from extend(position + 1, max(top, value))

    yield from extend(1, 0)


def check_coloring_budget(edge_count: int, max_edges: int | None = None) -> None:
    """Raise BudgetExceededError when ``edge_count`` edges have too many partitions to enumerate."""
    limit = settings.max_coloring_edges if max_edges is None else max_edges
    if edge_count > limit:
        required = bell_number(edge_count)
        raise BudgetExceededError(
            f"{edge_count} edges have {required} colorings, above the guard of {limit} edges",
            required=required,
        )


def enumerate_colorings(g: SimpleGraph, max_edges: int | None = None) -> Iterator[EdgeColoring]:
    """Yield one coloring of ``g`` per set partition of its edges.

    Saturation does not depend on color names, so these cover every coloring.

    Raises:
        BudgetExceededError: If ``g`` has more edges than the guard allows.
    """
    edges = g.edges()
    check_coloring_budget(len(edges), max_edges)
    logger.debug(f"Enumerating {bell_number(len(edges))} colorings of {len(edges)} edges")
    for word in iter_restricted_growth(len(edges)):
        yield EdgeColoring(edges=edges, colors=word)
