"""Degree-2 vertex taxonomy and the suspension vertex audit."""

import logging

from ..models.graph import SimpleGraph, iter_bits
from ..models.structure import Degree2Classification, SuspensionAudit, SuspensionViolation

logger = logging.getLogger(__name__)

MIN_SUSPENSION_DEGREE = 5


def _triangle_partner(g: SimpleGraph, degrees: tuple[int, ...], u: int) -> int | None:
    v, w = iter_bits(g.adj[u])
    candidates = [
        partner
        for partner, third in ((v, w), (w, v))
        if degrees[partner] == 2 and g.adj[partner] == (1 << u) | (1 << third)
    ]
    if len(candidates) < 2:
        return candidates[0] if candidates else None
    # an isolated triangle: its largest vertex is the apex, the other two are partners
    apex = max(u, v, w)
    if u == apex:
        return None
    return v if w == apex else w


def classify_degree_two(g: SimpleGraph) -> Degree2Classification:
    """Split the degree-2 vertices of ``g`` into good and bad roots.

    Example:
        >>> bowtie = SimpleGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
        >>> classify_degree_two(bowtie).suspensions
        (0,)
    """
    degrees = g.degrees()
    good: list[int] = []
    bad: list[int] = []
    pairs: set[tuple[int, int]] = set()
    for u in range(g.n):
        if degrees[u] != 2:
            continue
        partner = _triangle_partner(g, degrees, u)
        if partner is None:
            good.append(u)
        else:
            bad.append(u)
            pairs.add((min(u, partner), max(u, partner)))

    # the suspension is the common third neighbour of a partner pair
    suspensions = tuple(sorted({next(iter_bits(g.adj[u] & ~(1 << v))) for u, v in pairs}))
    return Degree2Classification(
        good_roots=tuple(good),
        bad_roots=tuple(bad),
        suspensions=suspensions,
        bad_root_pairs=tuple(sorted(pairs)),
    )


def audit_suspensions(
    g: SimpleGraph,
    enforce: bool = True,
    classification: Degree2Classification | None = None,
) -> SuspensionAudit:
    """Check every suspension vertex: two bad roots, degree at least 5, no good root neighbours.

    Args:
        g: Graph to audit
        enforce: False for report-only mode on graphs not known to be saturated
        classification: Precomputed classification of ``g``
    """
    classification = classification or classify_degree_two(g)
    bad = set(classification.bad_roots)
    good = set(classification.good_roots)
    violations: list[SuspensionViolation] = []
    for w in classification.suspensions:
        neighbours = set(iter_bits(g.adj[w]))
        bad_count = len(neighbours & bad)
        if bad_count != 2:
            violations.append(
                SuspensionViolation(vertex=w, clause="bad_root_count", detail=f"{bad_count} bad roots in N({w})")
            )
        if g.degree(w) < MIN_SUSPENSION_DEGREE:
            violations.append(
                SuspensionViolation(
                    vertex=w, clause="degree", detail=f"d({w}) = {g.degree(w)} < {MIN_SUSPENSION_DEGREE}"
                )
            )
        good_here = sorted(neighbours & good)
        if good_here:
            violations.append(
                SuspensionViolation(
                    vertex=w, clause="good_root_neighbor", detail=f"good roots {good_here} in N({w})"
                )
            )
    if violations:
        logger.debug(f"Suspension audit found {len(violations)} violations")
    return SuspensionAudit(
        passed=not violations,
        enforced=enforce,
        suspensions=classification.suspensions,
        violations=violations,
    )
