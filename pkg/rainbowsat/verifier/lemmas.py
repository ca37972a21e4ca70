"""Brute-force path lemmas in complete graphs."""

import logging

from ..exceptions import RejectedInputError
from ..graph.paths import iter_colored_paths
from ..models.graph import SimpleGraph
from ..models.report import LemmaReport

logger = logging.getLogger(__name__)

MIN_ORDER = 5
MAX_ORDER = 9


def _blocking_edge(adj, bits, u: int, v: int, t: int, blocked: int = 0) -> int | None:
    """Return the mask of edges used by every P_t from u to v, or None when there is no such path."""
    common: int | None = None
    for _, used in iter_colored_paths(adj, u, v, t, bits, blocked=blocked):
        common = used if common is None else common & used
        if not common:
            break
    return common


def complete_graph_path_lemma(t: int) -> LemmaReport:
    """Check the edge-avoiding path lemma in K_t by exhaustive enumeration.

    For all ``u != v`` and every edge ``e`` there must be a P_t and a P_{t-1}
    from ``u`` to ``v`` avoiding ``e``; for ``t >= 6`` additionally, for every
    ``w`` outside ``{u, v}``, a P_{t-1} avoiding both ``e`` and ``w``.

    Raises:
        RejectedInputError: If ``t`` is outside 5..9.
    """
    if not MIN_ORDER <= t <= MAX_ORDER:
        raise RejectedInputError(f"t={t} is outside the brute-force range {MIN_ORDER}..{MAX_ORDER}")

    g = SimpleGraph.complete(t)
    edges = g.edges()
    bits = [[0] * t for _ in range(t)]
    for index, edge in enumerate(edges):
        bits[edge.u][edge.v] = bits[edge.v][edge.u] = 1 << index

    def counterexample(u: int, v: int, length: int, common: int | None, w: int | None = None) -> LemmaReport:
        found: dict[str, int | list[int]] = {"u": u, "v": v, "length": length}
        if common:
            found["edge"] = list(edges[(common & -common).bit_length() - 1])
        if w is not None:
            found["w"] = w
        logger.info(f"Path lemma fails in K_{t}: {found}")
        return LemmaReport(t=t, holds=False, counterexample=found)

    triples = quadruples = 0
    for u in range(t):
        for v in range(u + 1, t):
            for length in (t, t - 1):
                common = _blocking_edge(g.adj, bits, u, v, length)
                if common is None or common:
                    return counterexample(u, v, length, common)
            triples += len(edges)
            if t < 6:
                continue
            for w in range(t):
                if w in (u, v):
                    continue
                common = _blocking_edge(g.adj, bits, u, v, t - 1, blocked=1 << w)
                if common is None or common:
                    return counterexample(u, v, t - 1, common, w)
                quadruples += len(edges)
    # each unordered pair stands for both orientations
    return LemmaReport(t=t, holds=True, checked_triples=2 * triples, checked_quadruples=2 * quadruples)
