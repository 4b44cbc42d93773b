import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import classified_fixtures, positive_corpus, random_positive_corpus
from knotpos.diagram import UNKNOT, switch_crossing
from knotpos.generators import braid_closure, double_crossing, pretzel, torus_2, torus_2_2p
from knotpos.skein import conway
from knotpos.stategraph import (
    Classification, ReducedEdge, ReducedGraph, b_circle_bound, betti, build_a_state_graph, burdening_number_formula,
    clasp_move, claspable, classify, predicted_lead_conway, reduce_graph, second_coeff_predicted,
)
from knotpos.statesum import jones


def reduced(d):
    return reduce_graph(build_a_state_graph(d))


def test_trefoil_graph():
    g = build_a_state_graph(torus_2(3))
    assert len(g.vertices) == 2 and len(g.edges) == 3
    rg = reduce_graph(g)
    assert len(rg.edges) == 1 and rg.edges[0].multiplicity == 3 and rg.edges[0].role == "cut"
    assert betti(rg) == 0


def test_torus_link_graph_is_a_square():
    rg = reduced(torus_2_2p(2))
    assert len(rg.vertices) == 4 and betti(rg) == 1
    assert all(e.role == "cycle" and e.multiplicity == 1 for e in rg.edges)


def test_even_pretzel_graph_is_a_theta():
    rg = reduced(pretzel(-2, -2, -2))
    h = rg.to_networkx()
    assert betti(rg) == 2
    assert sorted(d for _, d in h.degree()) == [2, 2, 2, 3, 3]


def test_graph_counts_match_stats():
    for _, d in positive_corpus(15):
        g = build_a_state_graph(d)
        assert len(g.vertices) == d.stats().A and len(g.edges) == d.c


def test_betti_examples():
    tree = nx.path_graph(4)
    square = nx.cycle_graph(4)
    theta = nx.Graph([(0, 1), (1, 2), (2, 3), (0, 4), (4, 3), (0, 5), (5, 3)])
    assert (betti(tree), betti(square), betti(theta)) == (0, 1, 2)
    with pytest.raises(ValueError):
        betti(nx.Graph([(0, 1), (2, 3)]))


def test_bridges_are_cut_edges():
    rg = ReducedGraph((0, 1, 2), (ReducedEdge(0, 1, 2, (0, 1), "cut"), ReducedEdge(1, 2, 2, (2, 3), "cut")))
    assert betti(rg) == 0 and len(rg.cut_edges()) == 2


def test_second_coefficient_examples():
    assert second_coeff_predicted(torus_2(3)) == 0
    assert abs(second_coeff_predicted(torus_2_2p(2))) == 1
    assert abs(second_coeff_predicted(pretzel(-2, -2, -2))) == 2
    with pytest.raises(Exception):
        second_coeff_predicted(switch_crossing(torus_2(3), 0))


def test_classify_examples():
    c = classify(torus_2(3))
    assert (c.family, c.diagram_type, c.m) == ("Burdened", 0, 1)
    assert 4 * jones(torus_2(3)).min_deg - 3 == c.m
    for p in range(2, 6):
        c = classify(torus_2_2p(p))
        assert (c.family, c.diagram_type, c.k, c.m) == ("Balanced", 1, 2 * p, 0)
    c = classify(pretzel(-1, -3, -3))
    assert (c.family, c.diagram_type, c.k1, c.k2, c.x, c.cycle_edges) == ("OddlyBalanced", 2, 4, 4, 1, 7)
    c = classify(pretzel(-2, -2, -2))
    assert (c.family, c.k1, c.k2, c.x) == ("Balanced", 4, 4, 2)


def test_classify_unclassified_inputs():
    assert classify(UNKNOT).family == "Unclassified"
    assert classify(switch_crossing(torus_2(3), 0)).family == "Unclassified"
    assert classify(pretzel(-2, -2, -2, -2)).family == "Unclassified"  # three holes
    assert "multiplicity 1" in classify(braid_closure([1, 1, 2])).diagnostic


def test_wedge_of_two_cycles():
    from knotpos.diagram import connected_sum
    t = torus_2_2p(2)
    d = connected_sum(t, t.arcs[0], torus_2_2p(3), torus_2_2p(3).arcs[0])
    c = classify(d)
    assert (c.diagram_type, c.k1, c.k2, c.x) == (2, 6, 4, 0)
    assert conway(d).lead_coeff == predicted_lead_conway(c) == 6


def test_burdening_formula_examples():
    d = torus_2_2p(2)
    c = classify(d)
    assert burdening_number_formula(c, d.stats(), jones(d).min_deg) == 0
    for base in (torus_2_2p(2), pretzel(-2, -2, -2)):
        d = double_crossing(base, 0)
        c = classify(d)
        assert c.m == 1 == burdening_number_formula(c, d.stats(), jones(d).min_deg)
    with pytest.raises(ValueError):
        burdening_number_formula(classify(torus_2(3)), torus_2(3).stats(), 1)


def test_predicted_lead_examples():
    assert predicted_lead_conway(Classification("Balanced", 1, 0, k=4)) == 2
    assert predicted_lead_conway(Classification("Burdened", 2, 1, k1=4, k2=4, x=2)) == 3
    assert predicted_lead_conway(Classification("OddlyBurdened", 2, 1, k1=4, k2=4, x=1)) == 4
    with pytest.raises(ValueError):
        predicted_lead_conway(Classification("Burdened", 0, 1))


def test_b_circle_bound_examples():
    assert b_circle_bound(Classification("Balanced", 1, 0, k=4), 2) == 2
    assert b_circle_bound(Classification("OddlyBalanced", 2, 0), 1) == 3
    assert b_circle_bound(Classification("Burdened", 2, 1), 1) == 3
    with pytest.raises(ValueError):
        b_circle_bound(Classification("Unclassified"), 1)


def test_claspable_examples():
    for p in range(2, 6):
        assert claspable(torus_2_2p(p)) is not None
    assert claspable(pretzel(-2, -2, -2)) is not None
    assert claspable(braid_closure([1, 1, 2, 2])) is None


def test_clasp_reduces_hole_length():
    d = clasp_move(torus_2_2p(2), claspable(torus_2_2p(2)))
    c = classify(d)
    assert (c.family, c.diagram_type) == ("Balanced", 0)
    for p in (3, 4, 5):
        d = clasp_move(torus_2_2p(p), claspable(torus_2_2p(p)))
        c = classify(d)
        assert (c.family, c.diagram_type, c.k) == ("Balanced", 1, 2 * p - 2)


def test_clasp_preserves_b_n_a():
    for name, d in classified_fixtures():
        w = claspable(d)
        if w is None or d.c > 10:
            continue
        e = clasp_move(d, w)
        s, t = d.stats(), e.stats()
        assert (t.B, t.n, t.A) == (s.B, s.n, s.A), name
        # leaves stay leaves, and v3 becomes one
        leaves = lambda x: sum(1 for _, deg in reduced(x).to_networkx().degree() if deg == 1)
        assert leaves(e) > leaves(d), name


def test_taxonomy_properties_on_fixtures():
    fixtures = classified_fixtures()
    assert len(fixtures) >= 20
    ms = set()
    for name, d in fixtures:
        c = classify(d)
        s = d.stats()
        v = jones(d)
        assert s.B <= b_circle_bound(c, s.n), name
        if c.family == "Balanced":
            assert s.B == s.n, name
        if c.family == "OddlyBalanced":
            assert s.B in (s.n, s.n - 2, s.n + 2), name
        if c.diagram_type in (1, 2):
            assert burdening_number_formula(c, s, v.min_deg) == c.m, name
            nab = conway(d)
            assert nab.lead_coeff == predicted_lead_conway(c), name
            ms.add((c.family, c.m))
    assert {("Burdened", 1), ("Burdened", 2)} <= ms


def test_dot_and_json_export():
    rg = reduced(torus_2(3))
    assert rg.to_dot().startswith("graph G {") and 'label="3"' in rg.to_dot()
    assert rg.to_json_obj()["edges"][0]["multiplicity"] == 3


def _even_cycles(d):
    h = reduced(d).to_networkx()
    return all(len(c) % 2 == 0 for c in nx.cycle_basis(h)) and nx.is_bipartite(h)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_even_cycle_law(seed):
    assert _even_cycles(random_positive_corpus(1, 12, seed=seed)[0])


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_stoimenow_second_coefficient(seed):
    d = random_positive_corpus(1, 12, seed=seed)[0]
    assert second_coeff_predicted(d) == jones(d).second_coeff
