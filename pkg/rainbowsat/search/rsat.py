"""Exhaustive computation of the rainbow saturation number of a cycle.

Edge counts are tried upward from ``n``: a connected graph with minimum degree
2 has at least ``n`` edges, and both properties are necessary for saturation
once ``n >= r >= 4``. Every graph class at the current count is evaluated; the
search stops at the first count with a certificate and keeps all of them.
"""

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from math import comb
from pathlib import Path

from pydantic import BaseModel, Field, model_validator

from ..exceptions import BudgetExceededError, RainbowSatError
from ..graph.graph6 import decode_graph6, encode_graph6
from ..graph.paths import iter_colored_paths
from ..models.coloring import ColoredGraph, EdgeColoring
from ..models.graph import SimpleGraph, iter_bits
from ..settings import settings
from ..verifier.conditions import check_necessity_avoidance, check_rainbow_iff
from ..verifier.saturation import is_rainbow_saturated
from .checkpoint import Certificate, SearchCheckpoint, SearchMode, read_checkpoint, write_checkpoint
from .colorings import check_coloring_budget, iter_restricted_growth
from .generate import enumerate_graphs

logger = logging.getLogger(__name__)


class SearchTask(BaseModel):
    """Parameters of one rsat search.

    Attributes:
        min_edges: First edge count to try, never below ``n``
        max_edges: Last edge count to try, defaults to ``n(n-1)/2``
        resume: Checkpoint file, read when it exists and rewritten as the search advances
    """

    n: int
    r: int
    mode: SearchMode = "all_colorings"
    min_edges: int | None = None
    max_edges: int | None = None
    jobs: int = Field(default_factory=lambda: settings.jobs, ge=1)
    resume: Path | None = None

    @model_validator(mode="after")
    def validate_task(self) -> "SearchTask":
        if not 4 <= self.r <= self.n:
            raise ValueError(f"need 4 <= r <= n, got r={self.r}, n={self.n}")
        limit = settings.search_max_n_all_colorings if self.mode == "all_colorings" else settings.search_max_n_rainbow
        if self.n > limit:
            raise ValueError(f"{self.mode} searches are limited to n <= {limit}, got n={self.n}")
        if self.min_edges is not None and self.max_edges is not None and self.min_edges > self.max_edges:
            raise ValueError(f"min_edges={self.min_edges} exceeds max_edges={self.max_edges}")
        return self

    @property
    def edge_range(self) -> range:
        low = max(self.n, self.min_edges or 0)
        high = comb(self.n, 2) if self.max_edges is None else min(self.max_edges, comb(self.n, 2))
        return range(low, high + 1)


class SearchResult(BaseModel):
    """Outcome of an rsat search.

    ``value`` is None when no certificate exists up to ``searched_through``
    edges; that bound is then the only claim the result makes.
    """

    n: int
    r: int
    mode: SearchMode
    value: int | None = None
    searched_through: int | None = Field(None, description="Largest edge count fully searched")
    budget_exhausted: bool = False
    extremal: list[Certificate] = Field(default_factory=list)
    graphs_examined: int = 0
    colorings_examined: int = 0

    @model_validator(mode="after")
    def validate_value(self) -> "SearchResult":
        if self.value is not None:
            if not self.extremal:
                raise ValueError("a found value needs at least one certificate")
            if any(cert.edge_count != self.value for cert in self.extremal):
                raise ValueError("every certificate must have exactly value edges")
        return self

    @property
    def determined(self) -> bool:
        return self.value is not None

    def __str__(self) -> str:
        kind = "rsat" if self.mode == "all_colorings" else "rainbow rsat"
        if self.value is None:
            return f"{kind}({self.n}, C_{self.r}) undetermined above {self.searched_through} edges"
        return f"{kind}({self.n}, C_{self.r}) = {self.value} ({len(self.extremal)} extremal classes)"


ClassTask = tuple[SimpleGraph, int, str]
ClassOutcome = tuple[tuple[int, ...] | None, int]


def _index_bits(g: SimpleGraph) -> list[list[int]]:
    bits = [[0] * g.n for _ in range(g.n)]
    for index, edge in enumerate(g.edges()):
        bits[edge.u][edge.v] = bits[edge.v][edge.u] = 1 << index
    return bits


def _cycle_edge_sets(g: SimpleGraph, r: int, bits: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Edge index tuples of every C_r of ``g``, each cycle once."""
    cycles = []
    for s in range(g.n):
        below = (1 << (s + 1)) - 1
        ends = list(iter_bits(g.adj[s] & ~below))
        for i, a in enumerate(ends):
            for b in ends[i + 1 :]:
                closing = bits[s][a] | bits[s][b]
                for _, used in iter_colored_paths(g.adj, a, b, r - 1, bits, blocked=below):
                    cycles.append(tuple(iter_bits(used | closing)))
    return cycles


def _find_saturating_coloring(g: SimpleGraph, r: int) -> ClassOutcome:
    """Return the first restricted growth string that makes ``g`` C_r-rainbow saturated."""
    bits = _index_bits(g)
    cycles = _cycle_edge_sets(g, r, bits)
    nonedge_paths = [
        [tuple(iter_bits(used)) for _, used in iter_colored_paths(g.adj, e.u, e.v, r, bits)] for e in g.nonedges()
    ]
    examined = 0
    for word in iter_restricted_growth(g.edge_count):
        examined += 1
        if any(len({word[i] for i in cycle}) == r for cycle in cycles):
            continue
        for paths in nonedge_paths:
            # a nonedge is closed off iff the rainbow paths share no color
            common = -1
            rainbow = False
            for path in paths:
                mask = 0
                for i in path:
                    mask |= 1 << word[i]
                if mask.bit_count() == r - 1:
                    rainbow = True
                    common &= mask
                    if not common:
                        break
            if not rainbow or common:
                break
        else:
            return word, examined
    return None, examined


def evaluate_class(task: ClassTask) -> ClassOutcome:
    """Evaluate one graph class; top level so worker processes can run it."""
    g, r, mode = task
    if mode == "rainbow_only":
        holds = check_rainbow_iff(g, r).holds
        return (tuple(range(g.edge_count)) if holds else None), 1
    if not check_necessity_avoidance(g, r).holds:
        return None, 0
    return _find_saturating_coloring(g, r)


def _reverify(certificate: Certificate, r: int) -> None:
    g = decode_graph6(certificate.graph6)
    colored = ColoredGraph(graph=g, coloring=certificate.coloring)
    report = is_rainbow_saturated(colored, r, jobs=1, collect_evidence=False)
    if not report.is_saturated:
        raise RainbowSatError(f"certificate {certificate.graph6} failed re-verification: {report}")


def _load_progress(task: SearchTask) -> SearchCheckpoint | None:
    if task.resume is None or not task.resume.exists():
        return None
    checkpoint = read_checkpoint(task.resume)
    if not checkpoint.matches(task.n, task.r, task.mode):
        raise RainbowSatError(
            f"checkpoint {task.resume} belongs to n={checkpoint.n}, r={checkpoint.r}, {checkpoint.mode}"
        )
    logger.info(f"Resuming at m={checkpoint.m} after {checkpoint.done} classes")
    return checkpoint


def compute_rsat(task: SearchTask) -> SearchResult:
    """Find the least edge count of a C_r-rainbow saturated graph on ``task.n`` vertices.

    In ``all_colorings`` mode a graph counts when some coloring saturates it;
    in ``rainbow_only`` mode only its rainbow coloring is considered. The result
    and its certificates do not depend on ``task.jobs``.

    Raises:
        RainbowSatError: If a checkpoint belongs to another task or a certificate fails re-verification.
    """
    n, r = task.n, task.r
    progress = _load_progress(task)
    result = SearchResult(n=n, r=r, mode=task.mode)
    if progress is not None:
        result.graphs_examined = progress.graphs_examined
        result.colorings_examined = progress.colorings_examined

    chunk = 4 * task.jobs
    pool = ProcessPoolExecutor(max_workers=task.jobs) if task.jobs > 1 else None
    try:
        for m in task.edge_range:
            if progress is not None and m < progress.m:
                continue
            if task.mode == "all_colorings":
                try:
                    check_coloring_budget(m)
                except BudgetExceededError as e:
                    logger.warning(f"Stopping before m={m}: {e}")
                    result.budget_exhausted = True
                    return result

            graphs = list(enumerate_graphs(n, m))
            certificates: list[Certificate] = []
            start = 0
            if progress is not None and m == progress.m:
                start = progress.done
                certificates = list(progress.certificates)
                if start and encode_graph6(graphs[start - 1]).decode("ascii") != progress.last_graph6:
                    raise RainbowSatError(f"checkpoint does not match the graphs generated for m={m}")
            logger.debug(f"m={m}: {len(graphs)} candidate classes")

            for offset in range(start, len(graphs), chunk):
                batch = graphs[offset : offset + chunk]
                tasks = [(g, r, task.mode) for g in batch]
                outcomes = list(pool.map(evaluate_class, tasks)) if pool else [evaluate_class(t) for t in tasks]
                for g, (word, examined) in zip(batch, outcomes):
                    result.graphs_examined += 1
                    result.colorings_examined += examined
                    if word is not None:
                        certificate = Certificate(
                            graph6=encode_graph6(g).decode("ascii"),
                            coloring=EdgeColoring(edges=g.edges(), colors=word),
                        )
                        certificates.append(certificate)
                if task.resume is not None:
                    write_checkpoint(
                        task.resume,
                        SearchCheckpoint(
                            n=n,
                            r=r,
                            mode=task.mode,
                            m=m,
                            done=offset + len(batch),
                            last_graph6=encode_graph6(batch[-1]).decode("ascii"),
                            certificates=certificates,
                            graphs_examined=result.graphs_examined,
                            colorings_examined=result.colorings_examined,
                        ),
                    )

            if certificates:
                for certificate in certificates:
                    _reverify(certificate, r)
                logger.info(f"rsat({n}, C_{r}) = {m} with {len(certificates)} extremal classes")
                result.extremal = certificates
                result.value = m
                result.searched_through = m
                return result
            result.searched_through = m
            if task.resume is not None:
                write_checkpoint(
                    task.resume,
                    SearchCheckpoint(
                        n=n,
                        r=r,
                        mode=task.mode,
                        m=m + 1,
                        graphs_examined=result.graphs_examined,
                        colorings_examined=result.colorings_examined,
                    ),
                )
    finally:
        if pool is not None:
            pool.shutdown()
    return result
