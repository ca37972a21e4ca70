"""Tests for the SimpleGraph, Edge and witness models."""

import networkx as nx
import pytest
from pydantic import ValidationError

from rainbowsat.models.graph import CycleWitness, Edge, PathWitness, SimpleGraph, iter_bits


def test_iter_bits_increasing():
    """Test iter_bits yields set bit indices in increasing order."""
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert list(iter_bits(0)) == []


def test_edge_of_normalizes_order():
    """Test Edge.of stores the smaller endpoint first."""
    assert Edge.of(4, 1) == Edge(1, 4)
    assert str(Edge.of(4, 1)) == "1-4"


def test_edge_of_rejects_loops_and_negatives():
    """Test Edge.of refuses equal or negative endpoints."""
    with pytest.raises(ValueError):
        Edge.of(2, 2)
    with pytest.raises(ValueError):
        Edge.of(-1, 3)


def test_from_edges_merges_duplicates():
    """Test duplicate edges in either orientation collapse into one."""
    g = SimpleGraph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
    assert g.edge_count == 2
    assert g.edges() == (Edge(0, 1), Edge(1, 2))


def test_from_edges_rejects_out_of_range():
    """Test edges leaving the vertex range are refused."""
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(3, [(0, 3)])


def test_validator_rejects_asymmetric_rows():
    """Test a row set that is not symmetric fails validation."""
    with pytest.raises(ValidationError):
        SimpleGraph(n=2, adj=(0b10, 0))


def test_validator_rejects_loops():
    """Test a vertex adjacent to itself fails validation."""
    with pytest.raises(ValidationError):
        SimpleGraph(n=2, adj=(0b01, 0))


def test_validator_rejects_wrong_row_count():
    """Test the number of rows must equal n."""
    with pytest.raises(ValidationError):
        SimpleGraph(n=3, adj=(0, 0))


def test_vertex_limit():
    """Test graphs are limited to 64 vertices."""
    with pytest.raises(ValidationError):
        SimpleGraph.empty(65)
    assert SimpleGraph.empty(64).n == 64


def test_named_graphs():
    """Test the complete, path and cycle constructors."""
    assert SimpleGraph.complete(5).edge_count == 10
    assert SimpleGraph.complete(5).is_complete
    assert SimpleGraph.path(5).edge_count == 4
    assert SimpleGraph.cycle(5).degrees() == (2, 2, 2, 2, 2)
    assert not SimpleGraph.cycle(5).is_complete


def test_nonedges_sorted_and_complementary():
    """Test edges and nonedges partition all pairs, both sorted."""
    g = SimpleGraph.cycle(5)
    assert g.nonedges() == (Edge(0, 2), Edge(0, 3), Edge(1, 3), Edge(1, 4), Edge(2, 4))
    assert len(g.edges()) + len(g.nonedges()) == 10


def test_with_edge_returns_new_graph():
    """Test with_edge leaves the original graph untouched."""
    g = SimpleGraph.path(3)
    h = g.with_edge(0, 2)
    assert h.has_edge(0, 2)
    assert not g.has_edge(0, 2)


def test_relabeled():
    """Test relabeled puts vertex order[i] at position i."""
    g = SimpleGraph.from_edges(3, [(0, 1)])
    h = g.relabeled([2, 0, 1])
    assert h.edges() == (Edge(1, 2),)


def test_networkx_round_trip():
    """Test conversion to and from networkx keeps the edge set."""
    g = SimpleGraph.cycle(6).with_edge(0, 3)
    graph = g.to_networkx()
    assert nx.is_connected(graph)
    assert graph.number_of_edges() == 7
    assert SimpleGraph.from_networkx(graph) == g


def test_graph_is_frozen():
    """Test graphs are immutable."""
    g = SimpleGraph.path(3)
    with pytest.raises(ValidationError):
        g.n = 4


def test_path_witness_edges_and_str():
    """Test a path witness exposes its edges and dash-joined form."""
    path = PathWitness(vertices=(3, 1, 2))
    assert path.edges == (Edge(1, 3), Edge(1, 2))
    assert path.endpoints == (3, 2)
    assert str(path) == "3-1-2"
    assert len(path) == 3
    assert path.reversed().vertices == (2, 1, 3)


def test_path_witness_first_defect():
    """Test first_defect names the first failing step."""
    g = SimpleGraph.path(4)
    assert PathWitness(vertices=(0, 1, 2, 3)).first_defect(g) is None
    assert PathWitness(vertices=(0, 1, 3)).first_defect(g) == (2, "1-3 is not an edge")
    assert PathWitness(vertices=(0, 1, 0)).first_defect(g) == (2, "vertex 0 is repeated")
    assert PathWitness(vertices=(0, 7)).first_defect(g) == (1, "vertex 7 is not in the graph")


def test_cycle_witness_edges_include_closing_edge():
    """Test a cycle witness includes the edge back to its first vertex."""
    cycle = CycleWitness(vertices=(0, 1, 2, 3))
    assert cycle.edges[-1] == Edge(0, 3)
    assert str(cycle) == "0-1-2-3-0"
