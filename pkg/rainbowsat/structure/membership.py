"""Recognition of the Xi constructions that contain a triangle block."""

import logging
from collections.abc import Iterator
from itertools import permutations, product

from networkx.algorithms.isomorphism import GraphMatcher

from ..exceptions import RejectedInputError
from ..families.builders import build
from ..families.partitions import MIN_TOTAL, iter_partitions
from ..models.family import XiSpec
from ..models.graph import SimpleGraph
from ..models.structure import XiMembership

logger = logging.getLogger(__name__)

MAX_ORDER = 32

Blocks = tuple[tuple[int, int], ...]


def legal_xi_parameters(n: int) -> Iterator[tuple[tuple[int, int, int, int], tuple[int, int, int, int]]]:
    """Yield ``(a, partition)`` for every Xi_n with a triangle block, one per symmetry class.

    The four core vertices are interchangeable, so a parameter tuple is only
    determined up to permuting its ``(a_i, n_i)`` blocks. Classes come out in
    decreasing order of their sorted block list.
    """
    seen: set[Blocks] = set()
    for total in range((n - MIN_TOTAL) // 3 + 1):
        residual = n - 3 * total
        for a in product(range(total + 1), repeat=4):
            if sum(a) != total:
                continue
            for parts in iter_partitions(residual):
                if 3 not in parts:
                    continue
                for ordered in set(permutations(parts)):
                    key: Blocks = tuple(sorted(zip(a, ordered), reverse=True))
                    seen.add(key)
    for key in sorted(seen, reverse=True):
        yield (
            tuple(count for count, _ in key),  # type: ignore[misc]
            tuple(size for _, size in key),  # type: ignore[misc]
        )


def xi_membership(g: SimpleGraph) -> XiMembership | None:
    """Return Xi parameters and an isomorphism labeling for ``g``, or None.

    ``g`` is a member iff it is isomorphic to a legal Xi_n(a_1..a_4) in which
    some block is a triangle.

    Raises:
        RejectedInputError: If ``g`` has more than 32 vertices.
    """
    if g.n > MAX_ORDER:
        raise RejectedInputError(f"membership is decided for n <= {MAX_ORDER}, got {g.n}")
    if g.n < MIN_TOTAL or g.edge_count != 2 * g.n - 6:
        return None

    degrees = sorted(g.degrees())
    target = g.to_networkx()
    for a, partition in legal_xi_parameters(g.n):
        candidate = build(XiSpec(n=g.n, a=a, partition=partition)).graph
        if sorted(candidate.degrees()) != degrees:
            continue
        matcher = GraphMatcher(target, candidate.to_networkx())
        if matcher.is_isomorphic():
            logger.debug(f"Graph matches Xi_{g.n}{a} with partition {partition}")
            return XiMembership(
                a=a,
                partition=partition,
                labeling=tuple(matcher.mapping[v] for v in range(g.n)),
            )
    return None
