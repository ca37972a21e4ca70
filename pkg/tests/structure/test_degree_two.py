"""Tests for the degree-2 taxonomy and the suspension audit."""

import random

from rainbowsat.families import build
from rainbowsat.models.family import OmegaSpec, SSpec
from rainbowsat.models.graph import SimpleGraph
from rainbowsat.structure import audit_suspensions, classify_degree_two

BOWTIE = SimpleGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def test_bowtie():
    """Test both triangles of the bowtie hang on the center."""
    classification = classify_degree_two(BOWTIE)
    assert classification.good_roots == ()
    assert classification.bad_roots == (1, 2, 3, 4)
    assert classification.bad_root_pairs == ((1, 2), (3, 4))
    assert classification.suspensions == (0,)
    assert classification.partner(3) == 4
    assert classification.partner(0) is None


def test_isolated_triangle():
    """Test an isolated triangle has one good root, its largest vertex."""
    classification = classify_degree_two(SimpleGraph.complete(3))
    assert classification.good_roots == (2,)
    assert classification.bad_roots == (0, 1)
    assert classification.suspensions == (2,)


def test_cycle_has_only_good_roots():
    """Test the vertices of a long cycle are all good roots."""
    classification = classify_degree_two(SimpleGraph.cycle(7))
    assert classification.good_roots == tuple(range(7))
    assert classification.bad_roots == ()


def test_random_graphs_pair_bad_roots(rng: random.Random):
    """Test bad roots always come in adjacent partner pairs sharing their third neighbour."""
    for _ in range(10_000):
        n = rng.randint(3, 10)
        edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.3]
        g = SimpleGraph.from_edges(n, edges)
        classification = classify_degree_two(g)
        degree_two = {v for v in range(n) if g.degree(v) == 2}
        assert set(classification.good_roots) | set(classification.bad_roots) == degree_two
        for u, v in classification.bad_root_pairs:
            assert g.has_edge(u, v)
            assert classification.partner(u) == v and classification.partner(v) == u
            (w,) = set(g.neighbors(u)) - {v}
            assert set(g.neighbors(v)) == {u, w}
            assert w in classification.suspensions
        for u in classification.good_roots:
            v, w = g.neighbors(u)
            hanging = [p for p, q in ((v, w), (w, v)) if g.degree(p) == 2 and set(g.neighbors(p)) == {u, q}]
            isolated_apex = len(hanging) == 2 and u == max(u, v, w)
            assert not hanging or isolated_apex


def test_omega_audit_passes():
    """Test the triangle blocks of Omega_15 hang on core vertices of degree 5."""
    g = build(OmegaSpec(n=15, partition=(6, 3, 3, 3))).graph
    audit = audit_suspensions(g)
    assert audit.passed
    assert audit.suspensions == (1, 2, 3)
    assert audit.ok


def test_s_has_no_suspensions():
    """Test S_7 has no degree-2 vertices at all."""
    audit = audit_suspensions(build(SSpec(n=7)).graph)
    assert audit.passed
    assert audit.suspensions == ()


def test_bowtie_audit_fails():
    """Test the bowtie center has four bad roots and degree 4."""
    audit = audit_suspensions(BOWTIE)
    assert not audit.passed
    assert {violation.clause for violation in audit.violations} == {"bad_root_count", "degree"}
    assert all(violation.vertex == 0 for violation in audit.violations)


def test_good_root_neighbor_violation():
    """Test a suspension vertex adjacent to a good root is flagged."""
    g = SimpleGraph.from_edges(
        8,
        [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (0, 5), (3, 4), (4, 5), (5, 3), (0, 6), (6, 7), (7, 3)],
    )
    audit = audit_suspensions(g)
    assert [violation.clause for violation in audit.violations] == ["good_root_neighbor"]


def test_report_only_mode():
    """Test an unenforced audit never fails a run."""
    audit = audit_suspensions(BOWTIE, enforce=False)
    assert not audit.passed
    assert audit.ok
