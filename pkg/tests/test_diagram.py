import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import ATLAS, positive_corpus, random_positive_corpus
from knotpos.diagram import (
    UNKNOT, Diagram, DiagramError, connected_sum, insert_clasp, insert_kink, insert_positive_loop, mirror,
    parse_diagram_json, parse_pd, reverse_all, smooth_crossing, switch_crossing,
)
from knotpos.generators import torus_2, torus_2_2p
from knotpos.skein import conway
from knotpos.statesum import jones
from knotpos.laurent import LaurentPoly1

# right-handed trefoil, hand-drawn: every crossing positive
TREFOIL_PD = "PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]"


def test_parse_positive_trefoil():
    d = parse_pd(TREFOIL_PD)
    assert (d.c, d.n) == (3, 1)
    assert all(x.sign == 1 for x in d.crossings)


def test_parse_accepts_bracket_lists_and_bare_crossings():
    a = parse_pd(TREFOIL_PD)
    b = parse_pd("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]")
    c = parse_pd("X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]")
    assert a.isomorphic(b) and a.isomorphic(c)


def test_parse_empty_pd_is_unknot():
    d = parse_pd("PD[]")
    assert (d.c, d.n) == (0, 1)
    assert d.stats().s == 1


@pytest.mark.parametrize("bad", [
    "PD[X[1,2,3]]",                      # arity
    "PD[X[1,5,2,4], X[3,1,4,6]]",        # dangling arcs
    "PD[X[1,2,2,1], X[3,4,4,3]]",        # split
    "not a code",
])
def test_parse_rejects_bad_input(bad):
    with pytest.raises(DiagramError):
        parse_pd(bad)


def test_stats_trefoil():
    st_ = torus_2(3).stats()
    assert (st_.c, st_.s, st_.A, st_.B, st_.n, st_.q) == (3, 2, 2, 3, 1, 0)
    assert st_.chi == st_.s - st_.c


def test_stats_unknot():
    st_ = UNKNOT.stats()
    assert (st_.c, st_.s, st_.n) == (0, 1, 1)


def test_stats_t24_braid_diagram():
    st_ = torus_2_2p(2, "parallel").stats()
    assert (st_.c, st_.A, st_.B, st_.n) == (4, 2, 4, 2)


def test_smooth_trefoil_gives_hopf_link():
    d = smooth_crossing(torus_2(3), 0)
    assert (d.c, d.n) == (2, 2)
    assert conway(d) == LaurentPoly1.parse("z", "z")


def test_smooth_t24_gives_trefoil():
    d = smooth_crossing(torus_2_2p(2, "parallel"), 1)
    assert (d.c, d.n) == (3, 1)
    assert jones(d) == LaurentPoly1.parse("t + t^3 - t^4")


def test_smooth_kink_by_chirality():
    kinked, info = insert_kink(UNKNOT, 0, sign=1)
    assert kinked.c == 1
    a_state = smooth_crossing(kinked, 0, "A")
    b_state = smooth_crossing(kinked, 0, "B")
    assert sorted([a_state.loops, b_state.loops]) == [1, 2]


def test_smooth_unknown_crossing():
    with pytest.raises(DiagramError):
        smooth_crossing(torus_2(3), 7)


def test_switch_trefoil_crossing_unknots_it():
    assert conway(switch_crossing(torus_2(3), 0)) == LaurentPoly1.one("z")


def test_switch_is_an_involution():
    d = torus_2(5)
    assert switch_crossing(switch_crossing(d, 2), 2) == d


def test_switch_t24_gives_almost_positive_hopf():
    d = switch_crossing(torus_2_2p(2, "parallel"), 0)
    assert d.q == 1
    assert conway(d) == conway(torus_2_2p(1))


def test_loop_on_unknot_is_positive_trefoil():
    d = insert_positive_loop(UNKNOT, 0)
    assert d.c == 3 and d.is_positive()
    assert jones(d) == LaurentPoly1.parse("t + t^3 - t^4")


def test_loop_adds_three_crossings_and_one_seifert_circle():
    d0 = torus_2(3)
    d1 = insert_positive_loop(d0, d0.arcs[0])
    d2 = insert_positive_loop(d1, d1.arcs[0])
    assert d1.c - d0.c == 3 and d1.stats().s - d0.stats().s == 1
    assert d2.c - d0.c == 6 and d2.stats().s - d0.stats().s == 2
    assert d2.is_positive()


def test_clasp_adds_two_crossings_of_requested_sign():
    d = torus_2_2p(2)
    a, b = d.components[0][0], d.components[1][0]
    from knotpos.diagram import adjacent_faces
    shared = set(adjacent_faces(d, a)) & set(adjacent_faces(d, b))
    assert shared
    out, info = insert_clasp(d, a, b, sign=1)
    assert out.c == d.c + 2 and out.is_planar()
    assert [out.crossings[i].sign for i in info["crossings"]] == [1, 1]


def test_connected_sum_multiplies_conway():
    t = torus_2(3)
    s = connected_sum(t, t.arcs[0], torus_2(5), torus_2(5).arcs[0])
    assert s.c == 8 and s.is_positive()
    assert conway(s) == conway(t) * conway(torus_2(5))


def test_nugatory_detection():
    assert parse_pd(TREFOIL_PD).is_reduced()
    kinked, info = insert_kink(UNKNOT, 0)
    assert not kinked.is_reduced()
    t = torus_2(3)
    k, info = insert_kink(t, t.arcs[0])
    s = connected_sum(t, t.arcs[1], k, k.arcs[0])
    nug = s.nugatory_crossings()
    assert len(nug) == 1
    assert s.crossings[nug[0]].arcs[0] in (s.crossings[nug[0]].arcs[1], s.crossings[nug[0]].arcs[3])


def test_mirror_inverts_jones():
    d = parse_pd(ATLAS["5_2"][0])
    v, vm = jones(d), jones(mirror(d))
    assert vm == v.substitute_power(-1, "t")


def test_reversing_every_component_keeps_signs():
    d = torus_2_2p(3)
    assert [x.sign for x in reverse_all(d).crossings] == [x.sign for x in d.crossings]


def test_json_round_trip():
    d = torus_2_2p(3)
    assert parse_diagram_json(d.to_json()) == d


def test_faces_satisfy_euler():
    for _, d in positive_corpus(10):
        assert d.is_planar()
        assert len(d.faces) == d.c + 2


def test_pd_round_trip_on_corpus():
    for _, d in positive_corpus(20):
        assert parse_pd(d.to_pd()).isomorphic(d)


def test_relabelled_diagram_is_isomorphic():
    d = torus_2(5)
    shift = {a: 100 + 3 * a for a in d.occurrences}
    from knotpos.diagram import relabel
    e = relabel(d, shift)
    assert e.isomorphic(d)
    assert not e.isomorphic(mirror(d))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.data())
def test_oriented_smoothing_changes_components_by_one(seed, data):
    d = random_positive_corpus(1, 10, seed=seed)[0]
    x = data.draw(st.integers(0, d.c - 1))
    assert abs(smooth_crossing(d, x).n - d.n) == 1


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6), st.data())
def test_switch_preserves_counts_and_shadow(seed, data):
    d = random_positive_corpus(1, 10, seed=seed)[0]
    x = data.draw(st.integers(0, d.c - 1))
    e = switch_crossing(d, x)
    assert (e.c, e.n) == (d.c, d.n)
    assert e.q == d.q + 1
    assert sorted(e.crossings[x].arcs) == sorted(d.crossings[x].arcs)
    assert sorted(len(f) for f in e.faces) == sorted(len(f) for f in d.faces)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_positive_diagrams_have_a_equal_to_s(seed):
    d = random_positive_corpus(1, 12, seed=seed)[0]
    assert d.stats().A == d.stats().s


def test_diagram_is_immutable():
    d = torus_2(3)
    with pytest.raises(Exception):
        d.loops = 3
    assert isinstance(d, Diagram)
