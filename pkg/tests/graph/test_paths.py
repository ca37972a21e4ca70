"""Tests for path enumeration and basic graph queries."""

import random
from math import perm

import pytest

from rainbowsat.exceptions import RejectedInputError
from rainbowsat.graph.paths import distances_to, enumerate_paths, is_connected, iter_colored_paths, min_degree
from rainbowsat.models.graph import PathWitness, SimpleGraph
from tests.oracles import count_paths


def test_is_connected():
    """Test connectivity on a path and on two disjoint edges."""
    assert is_connected(SimpleGraph.path(5))
    assert not is_connected(SimpleGraph.from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(SimpleGraph.empty(1))


def test_min_degree():
    """Test minimum degree of a path and a cycle."""
    assert min_degree(SimpleGraph.path(4)) == 1
    assert min_degree(SimpleGraph.cycle(4)) == 2


def test_distances_to_respects_blocked_vertices():
    """Test BFS distances around a blocked vertex."""
    g = SimpleGraph.cycle(6)
    assert distances_to(g.adj, 0) == [0, 1, 2, 3, 2, 1]
    assert distances_to(g.adj, 0, blocked=1 << 5)[4] == 4


@pytest.mark.parametrize("n", [4, 5, 6, 7])
@pytest.mark.parametrize("t", [2, 3, 4])
def test_complete_graph_path_count(n, t):
    """Test K_n has (n-2)!/(n-t)! paths with t vertices between two fixed vertices."""
    if t > n:
        pytest.skip("path longer than the graph")
    paths = list(enumerate_paths(SimpleGraph.complete(n), 0, 1, t))
    assert len(paths) == perm(n - 2, t - 2)


def test_complete_graph_hamiltonian_paths():
    """Test Hamiltonian paths between two vertices of K_6."""
    assert len(list(enumerate_paths(SimpleGraph.complete(6), 2, 4, 6))) == 24


def test_paths_are_lexicographic_and_valid():
    """Test paths come out once each in lexicographic order."""
    g = SimpleGraph.complete(5)
    paths = [p.vertices for p in enumerate_paths(g, 0, 4, 4)]
    assert paths == sorted(paths)
    assert len(set(paths)) == len(paths)
    assert all(PathWitness(vertices=p).first_defect(g) is None for p in paths)


def test_paths_match_permutation_oracle(rng: random.Random):
    """Test path counts against the permutation filter on random graphs."""
    for _ in range(60):
        n = rng.randint(4, 7)
        edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.55]
        g = SimpleGraph.from_edges(n, edges)
        u, v = rng.sample(range(n), 2)
        t = rng.randint(2, n)
        assert len(list(enumerate_paths(g, u, v, t))) == count_paths(g, u, v, t)


def test_avoid_edges_and_vertices():
    """Test avoided edges and vertices are never used."""
    g = SimpleGraph.complete(5)
    paths = list(enumerate_paths(g, 0, 1, 4, avoid_edges=[(2, 3)], avoid_vertices=[4]))
    assert paths == []
    paths = list(enumerate_paths(g, 0, 1, 3, avoid_edges=[(0, 2)]))
    assert [p.vertices for p in paths] == [(0, 3, 1), (0, 4, 1)]


def test_rainbow_filter():
    """Test the label table drops paths with a repeated label."""
    g = SimpleGraph.path(4)
    bits = [[0] * 4 for _ in range(4)]
    bits[0][1] = bits[1][0] = 1
    bits[1][2] = bits[2][1] = 2
    bits[2][3] = bits[3][2] = 1
    assert list(iter_colored_paths(g.adj, 0, 3, 4, bits)) == []
    bits[2][3] = bits[3][2] = 4
    assert list(iter_colored_paths(g.adj, 0, 3, 4, bits)) == [((0, 1, 2, 3), 7)]


@pytest.mark.parametrize(
    "u, v, t, avoid",
    [
        (0, 0, 3, ()),
        (0, 9, 3, ()),
        (0, 1, 1, ()),
        (0, 1, 6, ()),
        (0, 1, 3, (1,)),
    ],
)
def test_enumerate_paths_domain(u, v, t, avoid):
    """Test out-of-domain requests are rejected."""
    with pytest.raises(RejectedInputError):
        list(enumerate_paths(SimpleGraph.complete(5), u, v, t, avoid_vertices=avoid))


@pytest.mark.parametrize(
    "avoid_edges, avoid_vertices",
    [
        ([(0, 5)], ()),
        ([(-1, 2)], ()),
        ((), (7,)),
        ((), (-2,)),
    ],
)
def test_avoided_vertices_must_exist(avoid_edges, avoid_vertices):
    """Test avoided edges and vertices outside the graph are rejected."""
    with pytest.raises(RejectedInputError):
        list(enumerate_paths(SimpleGraph.complete(5), 0, 1, 3, avoid_edges=avoid_edges, avoid_vertices=avoid_vertices))
