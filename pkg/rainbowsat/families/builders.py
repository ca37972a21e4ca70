"""Builders for the cycle saturation constructions.

Vertices are numbered hubs/core first, then blocks in parameter order, so that
graph6 output and the bundled witness tables stay stable. Every construction is
rainbow colored except the even M_n, whose K_4 carries three doubled classes.
"""

import logging
from collections.abc import Callable, Sequence
from math import comb

from ..models.coloring import ColoredGraph, EdgeColoring
from ..models.family import (
    Construction,
    FamilySpec,
    FriendshipSpec,
    GammaRSpec,
    GammaSpec,
    KStarSpec,
    MSpec,
    OmegaSpec,
    SSpec,
    TSpec,
    TStyleSpec,
    WSpec,
    XiSpec,
)
from ..models.graph import SimpleGraph

logger = logging.getLogger(__name__)


class _Layout:
    """Accumulates labelled vertices and edges while a construction is assembled."""

    def __init__(self) -> None:
        self.labels: dict[str, int] = {}
        self.designated: dict[str, list[int]] = {}
        self.edges: list[tuple[int, int]] = []
        self.count = 0

    def add(self, label: str, *groups: str) -> int:
        vertex = self.count
        self.count += 1
        self.labels[label] = vertex
        for group in groups:
            self.designated.setdefault(group, []).append(vertex)
        return vertex

    def join(self, a: int, b: int) -> None:
        self.edges.append((a, b))

    def join_all(self, a: int, others: Sequence[int]) -> None:
        for b in others:
            self.join(a, b)

    def clique(self, vertices: Sequence[int]) -> None:
        for i, a in enumerate(vertices):
            for b in vertices[i + 1 :]:
                self.join(a, b)

    def graph(self) -> SimpleGraph:
        return SimpleGraph.from_edges(self.count, self.edges)

    def construction(self, spec: FamilySpec, coloring: EdgeColoring | None = None) -> Construction:
        graph = self.graph()
        colored = ColoredGraph(graph=graph, coloring=coloring or rainbow_color(graph))
        return Construction(
            spec=spec,
            colored=colored,
            designated={name: tuple(vertices) for name, vertices in self.designated.items()},
            labels=dict(self.labels),
            closed_form_edges=closed_form_edges(spec),
        )


def rainbow_color(g: SimpleGraph) -> EdgeColoring:
    """Color the edges of ``g`` with ``0..e-1`` in edge-sort order."""
    edges = g.edges()
    return EdgeColoring(edges=edges, colors=tuple(range(len(edges))))


def _block_prefix(index: int) -> str:
    return {0: "x", 1: "y"}.get(index, f"b{index + 1}_")


def _friendship_layout(block_sizes: Sequence[int]) -> _Layout:
    layout = _Layout()
    center = layout.add("u", "center")
    for index, size in enumerate(block_sizes):
        prefix = _block_prefix(index)
        block = [layout.add(f"{prefix}{j}") for j in range(1, size + 1)]
        layout.clique(block)
        layout.join_all(center, block)
    return layout


def _friendship_sizes(shape: str, q: int, p: int) -> list[int]:
    enlarged = {"plain": 0, "bar": 1, "tilde": 2}[shape]
    return [p] * enlarged + [p - 1] * (q - enlarged)


def build_friendship(spec: FriendshipSpec) -> Construction:
    return _friendship_layout(_friendship_sizes(spec.shape, spec.q, spec.p)).construction(spec)


def build_m(spec: MSpec) -> Construction:
    """M_n: F^3_{(n-1)/2} for odd n, K_1 joined to K_3 and (n-4)/2 copies of K_2 for even n."""
    if spec.n % 2:
        return _friendship_layout([2] * ((spec.n - 1) // 2)).construction(spec)

    layout = _friendship_layout([3] + [2] * ((spec.n - 4) // 2))
    graph = layout.graph()
    assignment = dict(rainbow_color(graph).items())
    u, x1, x2, x3 = (layout.labels[name] for name in ("u", "x1", "x2", "x3"))
    # each color of the K_4 sits on a perfect matching pair
    assignment[(x2, x3)] = assignment[(u, x1)]
    assignment[(x1, x3)] = assignment[(u, x2)]
    assignment[(x1, x2)] = assignment[(u, x3)]
    return layout.construction(spec, EdgeColoring.from_mapping(assignment))


def _add_w_block(layout: _Layout, hub: int, size: int, suffix: str = "") -> tuple[int, list[int]]:
    """Attach W_size to an existing first hub; returns the second hub and the B-vertices."""
    second = layout.add(f"u2{suffix}", "hubs")
    layout.join(hub, second)
    b_vertices = [layout.add(f"x{j}{suffix}", "B") for j in range(1, size - 1)]
    for x in b_vertices:
        layout.join(hub, x)
        layout.join(second, x)
    return second, b_vertices


def build_w(spec: WSpec) -> Construction:
    """W_n = K_2 joined to an independent set of n - 2 vertices."""
    layout = _Layout()
    hub = layout.add("u1", "hubs")
    _add_w_block(layout, hub, spec.n)
    return layout.construction(spec)


def _omega_layout(parts: Sequence[int], triangles: Sequence[int] = (0, 0, 0, 0)) -> _Layout:
    layout = _Layout()
    core = [layout.add(f"u1^{i}", "core") for i in range(1, 5)]
    layout.clique(core)
    for i, (size, count) in enumerate(zip(parts, triangles), start=1):
        _add_w_block(layout, core[i - 1], size, f"^{i}")
        for k in range(1, count + 1):
            triangle = [layout.add(f"t{k}.{j}^{i}", "triangles") for j in range(1, 4)]
            layout.clique(triangle)
            layout.join_all(core[i - 1], triangle)
    return layout


def build_omega(spec: OmegaSpec) -> Construction:
    return _omega_layout(spec.parts).construction(spec)


def build_xi(spec: XiSpec) -> Construction:
    return _omega_layout(spec.parts, spec.a).construction(spec)


def s_block_sizes(n: int) -> tuple[int, int, int]:
    """Return ``(a, b, t)`` so that S_n is K_1 joined to K_a, K_b and t triangles."""
    a, b = {1: (3, 3), 2: (4, 3), 0: (4, 4)}[n % 3]
    return a, b, (n - 7) // 3


def build_s(spec: SSpec) -> Construction:
    a, b, t = s_block_sizes(spec.n)
    return _friendship_layout([a, b] + [3] * t).construction(spec)


def _gamma_layout(n1: int, n2: int) -> _Layout:
    layout = _Layout()
    hubs = [layout.add(f"u{i}", "hubs") for i in range(1, 5)]
    layout.clique(hubs)
    for prefix, (first, second), size in (("x", hubs[:2], n1), ("y", hubs[2:], n2)):
        block = [layout.add(f"{prefix}{j}", f"B{1 if prefix == 'x' else 2}") for j in range(1, size - 1)]
        for vertex in block:
            layout.join(first, vertex)
            layout.join(second, vertex)
    return layout


def build_gamma(spec: GammaSpec) -> Construction:
    assert spec.n1 is not None and spec.n2 is not None
    return _gamma_layout(spec.n1, spec.n2).construction(spec)


def build_gamma_r(spec: GammaRSpec) -> Construction:
    """Gamma_{n-r+7} with a K_{r-7} joined to all four hubs."""
    m = spec.n - spec.r + 7
    layout = _gamma_layout(m - m // 2, m // 2)
    hubs = layout.designated["hubs"]
    clique = [layout.add(f"k{j}", "clique") for j in range(1, spec.r - 6)]
    layout.clique(clique)
    for vertex in clique:
        layout.join_all(vertex, hubs)
    return layout.construction(spec)


def _add_kstar(layout: _Layout, size: int) -> list[int]:
    base = [layout.add(f"w{i}", "base") for i in range(1, size + 1)]
    layout.clique(base)
    for i, w in enumerate(base, start=1):
        y = layout.add(f"y{i}", "pendant")
        z = layout.add(f"z{i}", "pendant")
        layout.clique([w, y, z])
    return base


def build_kstar(spec: KStarSpec) -> Construction:
    layout = _Layout()
    _add_kstar(layout, spec.r)
    return layout.construction(spec)


def _t_layout(n: int, r: int) -> _Layout:
    """K*_{r-4} together with W_{n-3r+12}, both hubs joined to the whole base."""
    layout = _Layout()
    u1 = layout.add("u1", "hubs")
    u2 = layout.add("u2", "hubs")
    layout.join(u1, u2)
    for j in range(1, n - 3 * r + 11):
        x = layout.add(f"x{j}", "B")
        layout.join(u1, x)
        layout.join(u2, x)
    for w in _add_kstar(layout, r - 4):
        layout.join(u1, w)
        layout.join(u2, w)
    return layout


def build_t(spec: TSpec) -> Construction:
    return _t_layout(spec.n, spec.r).construction(spec)


def build_t_style(spec: TStyleSpec) -> Construction:
    return _t_layout(spec.n, spec.r).construction(spec)


_BUILDERS: dict[type, Callable[..., Construction]] = {
    FriendshipSpec: build_friendship,
    MSpec: build_m,
    WSpec: build_w,
    OmegaSpec: build_omega,
    XiSpec: build_xi,
    SSpec: build_s,
    GammaSpec: build_gamma,
    GammaRSpec: build_gamma_r,
    KStarSpec: build_kstar,
    TSpec: build_t,
    TStyleSpec: build_t_style,
}


def build(spec: FamilySpec) -> Construction:
    """Build the family named by ``spec`` together with its coloring.

    Example:
        >>> build(WSpec(n=6)).edge_count
        9
    """
    construction = _BUILDERS[type(spec)](spec)
    logger.debug(f"Built {construction}")
    if not construction.matches_closed_form:
        logger.warning(
            f"{spec.family} build has {construction.edge_count} edges, closed form predicts "
            f"{construction.closed_form_edges}"
        )
    return construction


def closed_form_edges(spec: FamilySpec) -> int:
    """Edge count predicted by the construction's closed form."""
    match spec:
        case FriendshipSpec(shape=shape, q=q, p=p):
            return sum(comb(size + 1, 2) for size in _friendship_sizes(shape, q, p))
        case MSpec(n=n):
            return 3 * (n // 2)
        case WSpec(n=n):
            return 2 * n - 3
        case OmegaSpec(n=n) | XiSpec(n=n):
            return 2 * n - 6
        case SSpec(n=n):
            return 2 * n - 2 + 2 * ((n - 1) % 3)
        case GammaSpec(n=n):
            return 2 * n - 2
        case GammaRSpec(n=n, r=r):
            return 2 * n + (r * r - 11 * r) // 2 + 12
        case KStarSpec(r=r):
            return comb(r, 2) + 3 * r
        case TSpec(n=n, r=r) | TStyleSpec(n=n, r=r):
            return 2 * n + (r * r - 11 * r) // 2 + 11
    raise TypeError(f"unknown family spec {spec!r}")
