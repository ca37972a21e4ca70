"""Randomized agreement between the fast checks and the slow reference."""

import random

from rainbowsat.models.coloring import ColoredGraph, EdgeColoring
from rainbowsat.models.graph import SimpleGraph
from rainbowsat.verifier import check_rainbow_iff, is_rainbow_saturated
from tests.oracles import naive_is_saturated

INSTANCES = 1000


def _random_instance(rng: random.Random) -> tuple[ColoredGraph, int]:
    n = rng.randint(4, 7)
    density = rng.uniform(0.3, 0.9)
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < density]
    g = SimpleGraph.from_edges(n, edges)
    palette = len(edges) if rng.random() < 0.2 else rng.randint(1, 5)
    coloring = EdgeColoring.from_mapping({edge: rng.randrange(max(palette, 1)) for edge in g.edges()})
    return ColoredGraph(graph=g, coloring=coloring), rng.randint(3, n)


def test_saturation_agrees_with_reference(rng: random.Random):
    """Test is_rainbow_saturated against exhaustive edge insertion on small random instances."""
    for _ in range(INSTANCES):
        cg, r = _random_instance(rng)
        expected = naive_is_saturated(cg, r)
        assert is_rainbow_saturated(cg, r, jobs=1).is_saturated == expected, (cg.graph.edges(), cg.coloring, r)


def test_rainbow_iff_agrees_with_exact_check(rng: random.Random):
    """Test the graph-only decision against the exact check on rainbow colorings."""
    for _ in range(300):
        cg, r = _random_instance(rng)
        rainbow = ColoredGraph.rainbow(cg.graph)
        assert check_rainbow_iff(cg.graph, r).holds == is_rainbow_saturated(rainbow, r, jobs=1).is_saturated


def test_any_vacant_color_gives_the_same_verdict(rng: random.Random):
    """Test the reference answer does not depend on which unused color id is inserted."""
    for _ in range(200):
        cg, r = _random_instance(rng)
        top = max(cg.coloring.colors, default=-1)
        vacant = [c for c in range(top + 2) if c not in cg.coloring.colors]
        expected = naive_is_saturated(cg, r)
        assert naive_is_saturated(cg, r, fresh=top + 50) == expected
        assert naive_is_saturated(cg, r, fresh=vacant[0]) == expected


def test_relabelled_palette_gives_the_same_verdict(rng: random.Random):
    """Test renaming the colors injectively leaves the saturation verdict unchanged."""
    for _ in range(200):
        cg, r = _random_instance(rng)
        shifted = EdgeColoring(edges=cg.coloring.edges, colors=tuple(3 * c + 7 for c in cg.coloring.colors))
        relabelled = ColoredGraph(graph=cg.graph, coloring=shifted)
        expected = is_rainbow_saturated(cg, r, jobs=1).is_saturated
        assert is_rainbow_saturated(relabelled, r, jobs=1).is_saturated == expected
