"""Sufficient and necessary path conditions for rainbow saturation.

For rainbow colorings the necessary condition is also sufficient, which gives
``check_rainbow_iff``: a graph is C_r-rainbow saturated under its rainbow
coloring iff it has no C_r and every nonedge has, for every edge ``e``, a P_r
between its ends that avoids ``e``.
"""

import logging

from ..exceptions import RejectedInputError
from ..graph.paths import iter_colored_paths
from ..models.coloring import ColoredGraph
from ..models.graph import Edge, PathWitness, SimpleGraph
from ..models.report import NecessityReport, NonedgeEvidence, RainbowIffReport, SufficiencyReport
from .cycles import ColorTable, find_cycle, find_rainbow_cycle
from .saturation import check_vertex_range

logger = logging.getLogger(__name__)


def check_sufficiency_disjoint_paths(cg: ColoredGraph, r: int) -> SufficiencyReport:
    """Check that every nonedge has two edge-disjoint P_r's with a rainbow union.

    A true result implies saturation; the converse does not hold.

    Raises:
        RejectedInputError: If ``cg`` already contains a rainbow C_r; the copy is attached.
    """
    graph = cg.graph
    check_vertex_range(graph.n, r, graph.is_complete)
    copy = find_rainbow_cycle(cg, r)
    if copy is not None:
        raise RejectedInputError(f"coloring already contains a rainbow C_{r}: {copy}", rainbow_copy=copy)

    table = ColorTable(cg)
    witnesses: list[NonedgeEvidence] = []
    for nonedge in graph.nonedges():
        seen: list[tuple[tuple[int, ...], int]] = []
        pair: tuple[tuple[int, ...], tuple[int, ...]] | None = None
        for path, used in iter_colored_paths(graph.adj, nonedge.u, nonedge.v, r, table.bits):
            # disjoint color sets make the paths edge-disjoint with a rainbow union
            partner = next((earlier for earlier, mask in seen if not mask & used), None)
            if partner is not None:
                pair = (partner, path)
                break
            seen.append((path, used))
        if pair is None:
            logger.debug(f"No disjoint rainbow pair joins {nonedge.u} and {nonedge.v}")
            return SufficiencyReport(holds=False, r=r, witnesses=witnesses, failing_nonedge=nonedge)
        witnesses.append(
            NonedgeEvidence(nonedge=nonedge, paths=(PathWitness(vertices=pair[0]), PathWitness(vertices=pair[1])))
        )
    return SufficiencyReport(holds=True, r=r, witnesses=witnesses)


def check_necessity_avoidance(g: SimpleGraph, r: int) -> NecessityReport:
    """Check that every nonedge ``uv`` and edge ``e`` admit a P_r from ``u`` to ``v`` avoiding ``e``.

    The first violation in nonedge order is reported, paired with the smallest
    edge used by every P_r, or with None when no P_r exists.
    """
    check_vertex_range(g.n, r, g.is_complete)
    edges = g.edges()
    bits = [[0] * g.n for _ in range(g.n)]
    for index, edge in enumerate(edges):
        bits[edge.u][edge.v] = bits[edge.v][edge.u] = 1 << index
    everything = (1 << len(edges)) - 1

    for nonedge in g.nonedges():
        common: int | None = None
        for _, used in iter_colored_paths(g.adj, nonedge.u, nonedge.v, r, bits):
            common = everything & used if common is None else common & used
            if not common:
                break
        if common is None:
            return NecessityReport(holds=False, r=r, violation_nonedge=nonedge)
        if common:
            blocking = edges[(common & -common).bit_length() - 1]
            return NecessityReport(holds=False, r=r, violation_nonedge=nonedge, violation_edge=Edge(*blocking))
    return NecessityReport(holds=True, r=r)


def check_rainbow_iff(g: SimpleGraph, r: int) -> RainbowIffReport:
    """Decide C_r-rainbow saturation of the rainbow coloring of ``g`` from the graph alone."""
    check_vertex_range(g.n, r, g.is_complete)
    cycle = find_cycle(g, r)
    if cycle is not None:
        return RainbowIffReport(holds=False, r=r, cycle=cycle)
    necessity = check_necessity_avoidance(g, r)
    return RainbowIffReport(holds=necessity.holds, r=r, necessity=necessity)
