"""Lower-bound audits on edge counts.

Bounds are rational in ``n``; since ``e(G)`` is an integer each one is checked
against its ceiling.
"""

from fractions import Fraction
from math import ceil

from ..models.graph import SimpleGraph
from ..models.structure import BoundCheck, Degree2Classification
from .degree_two import classify_degree_two


def _check(name: str, bound: Fraction, actual: int) -> BoundCheck:
    required = ceil(bound)
    return BoundCheck(name=name, required=required, actual=actual, passed=actual >= required)


def audit_bounds(
    g: SimpleGraph,
    r: int,
    rainbow_mode: bool,
    classification: Degree2Classification | None = None,
) -> list[BoundCheck]:
    """Evaluate every lower bound that applies to ``g`` as a C_r-rainbow saturated graph.

    Example:
        >>> [c.required for c in audit_bounds(SimpleGraph.cycle(10), 6, rainbow_mode=True)]
        [12, 14]
    """
    n, e = g.n, g.edge_count
    checks: list[BoundCheck] = []
    if r == 5 and n >= 5:
        checks.append(_check("C5 lower bound (3n-5)/2", Fraction(3 * n - 5, 2), e))
    if r >= 6 and n >= r:
        checks.append(_check("cycle lower bound 6n/5", Fraction(6 * n, 5), e))
    if rainbow_mode and r >= 6:
        checks.append(_check("rainbow lower bound 4n/3", Fraction(4 * n, 3), e))
    if r >= 5 and n >= r:
        classification = classification or classify_degree_two(g)
        if not classification.good_roots:
            checks.append(_check("no good roots bound 3n/2", Fraction(3 * n, 2), e))
    return checks
