"""Replay of hand-written witness tables."""

from collections.abc import Sequence
from typing import Literal

from ..models.coloring import EdgeColoring
from ..models.graph import Edge, PathWitness, SimpleGraph
from ..models.report import WitnessFailure, WitnessOutcome

WitnessMode = Literal["disjoint_rainbow_pair", "edge_cover"]


def verify_witness_table(
    g: SimpleGraph,
    nonedge: tuple[int, int],
    paths: Sequence[PathWitness],
    mode: WitnessMode,
    r: int | None = None,
    coloring: EdgeColoring | None = None,
) -> WitnessOutcome:
    """Check one witness table entry for a nonedge.

    Args:
        g: Graph the table refers to
        nonedge: Pair the paths must join, in either orientation
        paths: Listed paths
        mode: ``disjoint_rainbow_pair`` for two edge-disjoint paths, ``edge_cover``
            for a set of paths that together avoid every edge of ``g``
        r: Required vertex count of every path; defaults to the first path's
        coloring: When given in pair mode, the union must also be rainbow under it

    Returns:
        The outcome; invalid paths produce a failure naming the path and step.
    """
    edge = Edge.of(*nonedge)

    def fail(reason: str, path_index: int | None = None, step: int | None = None) -> WitnessOutcome:
        return WitnessOutcome(
            nonedge=edge,
            mode=mode,
            passed=False,
            failure=WitnessFailure(path_index=path_index, step=step, reason=reason),
        )

    if edge.v >= g.n:
        return fail(f"{edge} is not a pair of vertices of the graph")
    if g.has_edge(edge.u, edge.v):
        return fail(f"{edge} is an edge, not a nonedge")
    if not paths:
        return fail("no paths listed")

    length = r if r is not None else len(paths[0])
    for index, path in enumerate(paths):
        if {path.vertices[0], path.vertices[-1]} != {edge.u, edge.v} or len(path) < 2:
            return fail(f"path {path} does not join {edge.u} and {edge.v}", index, 0)
        defect = path.first_defect(g)
        if defect is not None:
            return fail(defect[1], index, defect[0])
        if len(path) != length:
            return fail(f"path {path} has {len(path)} vertices, expected {length}", index, len(path) - 1)

    if mode == "disjoint_rainbow_pair":
        if len(paths) != 2:
            return fail(f"a disjoint pair needs exactly 2 paths, got {len(paths)}")
        shared = sorted(set(paths[0].edges) & set(paths[1].edges))
        if shared:
            return fail(f"both paths use edge {shared[0]}", 1)
        if coloring is not None:
            colors = [coloring.color_of(e) for p in paths for e in p.edges]
            if len(set(colors)) != len(colors):
                return fail("the union of the two paths repeats a color")
        return WitnessOutcome(nonedge=edge, mode=mode, passed=True)

    used_by_all = set(g.edges())
    for path in paths:
        used_by_all &= set(path.edges)
    if used_by_all:
        uncovered = min(used_by_all)
        outcome = fail(f"every listed path uses edge {uncovered}")
        return outcome.model_copy(update={"uncovered_edge": uncovered})
    return WitnessOutcome(nonedge=edge, mode=mode, passed=True)
