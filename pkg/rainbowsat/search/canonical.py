"""Canonical labeling of small graphs by refinement and individualization.

The canonical code of a graph is the largest upper-triangle adjacency string
reachable from its equitable vertex partition by individualizing one vertex at
a time. Two graphs are isomorphic iff their codes are equal. The code is an
internal contract of the search and is only stable within a major version.
"""

from collections.abc import Sequence

from ..models.graph import SimpleGraph

Cells = list[list[int]]


def _refine(adj: Sequence[int], cells: Cells) -> Cells:
    """Split cells by neighbour counts into every cell until the partition is equitable."""
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        refined: Cells = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                signature = tuple((adj[v] & mask).bit_count() for mask in masks)
                groups.setdefault(signature, []).append(v)
            refined.extend(groups[signature] for signature in sorted(groups))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _twins(adj: Sequence[int], cell: list[int]) -> bool:
    """True when every transposition inside ``cell`` is an automorphism."""
    for i, v in enumerate(cell):
        for w in cell[i + 1 :]:
            outside = ~((1 << v) | (1 << w))
            if adj[v] & outside != adj[w] & outside:
                return False
    return True


def _code(adj: Sequence[int], order: Sequence[int]) -> int:
    n = len(order)
    code = 0
    for i in range(n):
        row = adj[order[i]]
        for j in range(i + 1, n):
            code = code << 1 | (row >> order[j] & 1)
    return code


def canonical_form(g: SimpleGraph) -> tuple[int, tuple[int, ...]]:
    """Return ``(code, order)`` where ``g.relabeled(order)`` is the canonical graph.

    Example:
        >>> a = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
        >>> b = SimpleGraph.from_edges(3, [(0, 2), (2, 1)])
        >>> canonical_form(a)[0] == canonical_form(b)[0]
        True
    """
    adj = g.adj
    best: tuple[int, tuple[int, ...]] | None = None
    stack: list[Cells] = [_refine(adj, [list(range(g.n))])]
    while stack:
        cells = stack.pop()
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            order = tuple(cell[0] for cell in cells)
            code = _code(adj, order)
            if best is None or code > best[0]:
                best = (code, order)
            continue
        cell = cells[target]
        choices = cell[:1] if _twins(adj, cell) else cell
        for v in reversed(choices):
            split = cells[:target] + [[v], [w for w in cell if w != v]] + cells[target + 1 :]
            stack.append(_refine(adj, split))
    assert best is not None
    return best


def canonical_code(g: SimpleGraph) -> int:
    return canonical_form(g)[0]


def canonical_graph(g: SimpleGraph) -> SimpleGraph:
    return g.relabeled(canonical_form(g)[1])
