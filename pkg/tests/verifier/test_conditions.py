"""Tests for the path conditions and the rainbow characterization."""

import pytest

from rainbowsat.exceptions import RejectedInputError
from rainbowsat.families import build
from rainbowsat.models.coloring import ColoredGraph
from rainbowsat.models.family import GammaSpec, OmegaSpec, SSpec, TSpec, TStyleSpec, WSpec
from rainbowsat.models.graph import Edge, SimpleGraph
from rainbowsat.verifier import (
    check_necessity_avoidance,
    check_rainbow_iff,
    check_sufficiency_disjoint_paths,
    is_rainbow_saturated,
)


def test_sufficiency_holds_for_w6():
    """Test every nonedge of W_6 has two edge-disjoint P_5's."""
    construction = build(WSpec(n=6))
    report = check_sufficiency_disjoint_paths(construction.colored, 5)
    assert report.holds
    assert len(report.witnesses) == len(construction.graph.nonedges())
    for witness in report.witnesses:
        first, second = witness.paths
        assert not set(first.edges) & set(second.edges)


def test_sufficiency_fails_for_w5():
    """Test W_5 has no disjoint pair."""
    report = check_sufficiency_disjoint_paths(build(WSpec(n=5)).colored, 5)
    assert not report.holds
    assert report.failing_nonedge == Edge(2, 3)


def test_sufficiency_holds_for_gamma10():
    """Test Gamma_10 has a disjoint rainbow pair for every nonedge."""
    assert check_sufficiency_disjoint_paths(build(GammaSpec(n=10)).colored, 7).holds


def test_sufficiency_implies_saturation():
    """Test a passing sufficiency check agrees with the exact check."""
    cg = build(WSpec(n=8)).colored
    assert check_sufficiency_disjoint_paths(cg, 5).holds
    assert is_rainbow_saturated(cg, 5).is_saturated


def test_sufficiency_rejects_rainbow_copy():
    """Test the precondition violation carries the rainbow copy."""
    with pytest.raises(RejectedInputError) as exc_info:
        check_sufficiency_disjoint_paths(ColoredGraph.rainbow(SimpleGraph.complete(5)), 5)
    assert exc_info.value.rainbow_copy is not None


@pytest.mark.parametrize("spec, r", [(GammaSpec(n=10), 7), (SSpec(n=7), 6), (OmegaSpec(n=15), 5)])
def test_necessity_holds_for_constructions(spec, r):
    """Test saturated constructions meet the path avoidance condition."""
    assert check_necessity_avoidance(build(spec).graph, r).holds


def test_necessity_fails_with_pendant_vertex():
    """Test a degree-1 vertex forces every path through its edge."""
    g = SimpleGraph.from_edges(5, [*SimpleGraph.complete(4).edges(), (0, 4)])
    report = check_necessity_avoidance(g, 4)
    assert not report.holds
    assert report.violation_nonedge == Edge(1, 4)
    assert report.violation_edge == Edge(0, 4)


def test_necessity_without_any_path():
    """Test a nonedge with no P_r reports no blocking edge."""
    report = check_necessity_avoidance(SimpleGraph.path(5), 5)
    assert not report.holds
    assert report.violation_nonedge == Edge(0, 2)
    assert report.violation_edge is None


def test_rainbow_iff_for_t20():
    """Test rainbow T_20(8) is saturated from the graph alone."""
    assert check_rainbow_iff(build(TSpec(n=20, r=8)).graph, 8).holds


def test_rainbow_iff_t_style_fails_at_r7():
    """Test the T shape breaks at r = 7 on x1 w1 and the edge w2 w3."""
    construction = build(TStyleSpec(n=14, r=7))
    report = check_rainbow_iff(construction.graph, 7)
    assert not report.holds
    x1, w1, w2, w3 = (construction.vertex(label) for label in ("x1", "w1", "w2", "w3"))
    assert report.violation == (Edge.of(x1, w1), Edge.of(w2, w3))
    assert report.violation == (Edge(2, 5), Edge(6, 7))


def test_rainbow_iff_t_style_fails_at_r6():
    """Test the T shape is not saturated at r = 6 either."""
    assert not check_rainbow_iff(build(TStyleSpec(n=11, r=6)).graph, 6).holds


def test_rainbow_iff_cycle():
    """Test C_r itself fails because it contains a C_r."""
    report = check_rainbow_iff(SimpleGraph.cycle(6), 6)
    assert not report.holds
    assert report.cycle is not None
    assert report.violation is None


@pytest.mark.parametrize("spec, r", [(WSpec(n=5), 5), (WSpec(n=7), 5), (SSpec(n=8), 6), (GammaSpec(n=11), 7)])
def test_rainbow_iff_matches_exact_check(spec, r):
    """Test the graph-only decision agrees with the exact check on the rainbow coloring."""
    g = build(spec).graph
    assert check_rainbow_iff(g, r).holds == is_rainbow_saturated(ColoredGraph.rainbow(g), r).is_saturated
