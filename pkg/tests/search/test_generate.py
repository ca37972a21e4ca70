"""Tests for isomorph-free graph generation."""

import pytest

from rainbowsat.exceptions import RejectedInputError
from rainbowsat.graph.paths import is_connected, min_degree
from rainbowsat.models.graph import SimpleGraph
from rainbowsat.search import canonical_code, enumerate_graphs
from rainbowsat.search.generate import can_reach_target
from tests.oracles import naive_class_count


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_class_counts_match_reference(n):
    """Test the number of classes against brute force over labelled edge sets."""
    for m in range(n, n * (n - 1) // 2 + 1):
        assert len(list(enumerate_graphs(n, m))) == naive_class_count(n, m), m


def test_known_counts():
    """Test a few counts by hand: C_5 is the only class at n = m = 5 and K_4 the only one at m = 6."""
    graphs = list(enumerate_graphs(5, 5))
    assert len(graphs) == 1
    assert canonical_code(graphs[0]) == canonical_code(SimpleGraph.cycle(5))
    assert len(list(enumerate_graphs(4, 6))) == 1
    assert list(enumerate_graphs(5, 4)) == []


def test_output_is_canonical_and_ordered():
    """Test graphs are canonical, distinct, valid and in decreasing code order."""
    graphs = list(enumerate_graphs(6, 8))
    codes = [canonical_code(g) for g in graphs]
    assert codes == sorted(set(codes), reverse=True)
    for g in graphs:
        assert g.edge_count == 8
        assert is_connected(g)
        assert min_degree(g) >= 2


def test_can_reach_target():
    """Test the pruning rule on degree deficit and components."""
    assert can_reach_target(SimpleGraph.empty(4), 4)
    assert not can_reach_target(SimpleGraph.empty(4), 3)
    two_triangles = SimpleGraph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not can_reach_target(two_triangles, 0)
    assert can_reach_target(two_triangles, 1)


def test_edge_count_out_of_range():
    """Test more edges than pairs is rejected."""
    with pytest.raises(RejectedInputError):
        list(enumerate_graphs(4, 7))
