"""Exact rainbow saturation check for cycles.

Adding a nonedge ``uv`` with color ``i`` creates a rainbow C_r iff some P_r from
``u`` to ``v`` is rainbow and avoids color ``i``. All vacant colors behave alike,
so it is enough to test every existing color class plus one fresh color: the
nonedge is saturated iff rainbow P_r's exist and their color sets have an empty
intersection.
"""

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor

from ..exceptions import RejectedInputError
from ..graph.paths import iter_colored_paths
from ..models.coloring import ColoredGraph
from ..models.graph import CycleWitness, Edge, PathWitness
from ..models.report import FRESH, NonedgeEvidence, SaturationReport
from ..settings import settings
from .cycles import ColorTable, find_rainbow_cycle

logger = logging.getLogger(__name__)

NonedgeTask = tuple[Sequence[int], Sequence[Sequence[int]], int, int, int, int, bool]


def nonedge_intersection(task: NonedgeTask) -> tuple[int | None, list[tuple[int, ...]]]:
    """Intersect the color sets of the rainbow P_r's joining one nonedge.

    Returns:
        ``(common, paths)``. ``common`` is None when no rainbow P_r exists and
        otherwise the mask of classes used by every such path; enumeration stops
        as soon as it is empty. ``paths`` holds the paths that shrank the mask
        when evidence was requested.
    """
    adj, bits, all_classes, r, u, v, collect = task
    common: int | None = None
    kept: list[tuple[int, ...]] = []
    for path, used in iter_colored_paths(adj, u, v, r, bits):
        shrunk = all_classes & used if common is None else common & used
        if collect and shrunk != common:
            kept.append(path)
        common = shrunk
        if not common:
            break
    return common, kept


def check_vertex_range(cg_n: int, r: int, complete: bool) -> None:
    if r < 3:
        raise RejectedInputError(f"cycle length r={r} must be at least 3")
    if cg_n > settings.vertex_cap:
        raise RejectedInputError(f"graph has {cg_n} vertices, above the verifier cap of {settings.vertex_cap}")
    if cg_n < r and not complete:
        raise RejectedInputError(f"n={cg_n} < r={r}: saturation is only decided for n >= r")


def is_rainbow_saturated(
    cg: ColoredGraph,
    r: int,
    jobs: int | None = None,
    collect_evidence: bool = True,
) -> SaturationReport:
    """Decide whether ``cg`` is C_r-rainbow saturated.

    Args:
        cg: Colored graph to check
        r: Cycle length, at least 3
        jobs: Worker processes for the per-nonedge loop, defaults to ``settings.jobs``
        collect_evidence: Record the witness paths of every nonedge for saturated verdicts

    Returns:
        A report whose verdict and witnesses do not depend on ``jobs``.

    Raises:
        RejectedInputError: If ``r < 3``, or ``n < r`` on a non-complete graph.
    """
    graph = cg.graph
    check_vertex_range(graph.n, r, graph.is_complete)

    copy: CycleWitness | None = find_rainbow_cycle(cg, r)
    if copy is not None:
        return SaturationReport(verdict="contains_rainbow_copy", r=r, rainbow_copy=copy)

    nonedges = graph.nonedges()
    if not nonedges:
        return SaturationReport(
            verdict="saturated",
            r=r,
            per_nonedge_evidence=[] if collect_evidence else None,
            vacuous=True,
        )

    table = ColorTable(cg)
    adj = graph.adj
    tasks = [(adj, table.bits, table.all_classes, r, e.u, e.v, collect_evidence) for e in nonedges]
    jobs = jobs or settings.jobs

    evidence: list[NonedgeEvidence] = []
    if jobs > 1 and len(tasks) > 1:
        logger.debug(f"Checking {len(tasks)} nonedges with {jobs} workers")
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(nonedge_intersection, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))
    else:
        outcomes = []
        for task in tasks:
            outcomes.append(nonedge_intersection(task))
            if outcomes[-1][0] != 0:
                break

    for edge, (common, paths) in zip(nonedges, outcomes):
        if common is None:
            logger.debug(f"No rainbow P_{r} joins {edge.u} and {edge.v}")
            return SaturationReport(verdict="unsaturated", r=r, failing_nonedge=edge, failing_color=FRESH)
        if common:
            return SaturationReport(
                verdict="unsaturated",
                r=r,
                failing_nonedge=edge,
                failing_color=table.color_of_bit(common),
            )
        if collect_evidence:
            evidence.append(
                NonedgeEvidence(nonedge=Edge(edge.u, edge.v), paths=tuple(PathWitness(vertices=p) for p in paths))
            )

    return SaturationReport(verdict="saturated", r=r, per_nonedge_evidence=evidence if collect_evidence else None)
