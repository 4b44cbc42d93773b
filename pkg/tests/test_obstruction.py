import json
from fractions import Fraction

import pytest

from knotpos.diagram import UNKNOT
from knotpos.dt import realize_dt
from knotpos.fixtures import K15_V1_MINUS1, K15_V1_MINUS2, K16, conway_of, jones_of
from knotpos.generators import pretzel, torus_2
from knotpos.laurent import LaurentPoly1
from knotpos.obstruction import (
    SCHEMA_VERSION, analyze, family_diagram, loop_site, positivity_test, rational_json, verify_family_claims,
)

T = LaurentPoly1.parse
Z = lambda s: LaurentPoly1.parse(s, "z")


def test_reference_numbers_from_published_polynomials():
    for k in (K16, K15_V1_MINUS1, K15_V1_MINUS2):
        r = positivity_test(jones_of(k), conway_of(k), 1)
        assert (r.verdict, r.bound_value, r.max_v) == ("NotPositive", k.bound, k.max_v)
    r = positivity_test(jones_of(K16), conway_of(K16), 1)
    assert r.reason == "max deg V = 18 not <= 16"


def test_trefoil_is_inconclusive():
    r = positivity_test(T("t + t^3 - t^4"), Z("1 + z^2"), 1)
    assert (r.verdict, r.bound_value, r.max_v) == ("Inconclusive", 4, 4)


def test_dispatch_on_second_coefficient():
    # |V1| = 1: bound 4 minV + (n-1)/2 + 2 lead - 2
    r = positivity_test(T("t^(1/2) - t^(3/2) + t^(9/2)"), Z("3z"), 2)
    assert r.bound_value == 2 + Fraction(1, 2) + 4
    # |V1| = 2: + lead
    r = positivity_test(T("t + 2t^2 + t^7"), Z("5z^2"), 1)
    assert r.bound_value == 4 + 5 and r.verdict == "Inconclusive"
    r = positivity_test(T("t + 3t^2 + t^9"), Z("1"), 1)
    assert r.verdict == "NotApplicable" and r.bound_value is None


def test_zero_polynomials_rejected():
    with pytest.raises(ValueError):
        positivity_test(LaurentPoly1.zero("t"), Z("1"), 1)
    with pytest.raises(ValueError):
        positivity_test(T("1"), LaurentPoly1.zero("z"), 2)


def test_rational_json():
    assert rational_json(Fraction(4)) == 4 and rational_json(Fraction(9, 2)) == "9/2"


def test_analyze_unknot():
    rep = analyze(UNKNOT)
    assert rep["obstruction"]["verdict"] == "Inconclusive"
    assert rep["obstruction"]["bound_value"] == 0


def test_analyze_even_pretzel_self_consistent():
    rep = analyze(pretzel(-2, -2, -2))
    assert rep["schema"] == SCHEMA_VERSION
    assert rep["obstruction"]["verdict"] == "Inconclusive"
    pos = rep["positive"]
    assert pos["classification"]["family"] == "Balanced"
    for key in ("second_coeff_agrees", "conway_degree_agrees", "b_circle_bound_holds",
                "lead_conway_agrees", "burdening_number_agrees"):
        assert pos[key] is True, key
    json.dumps(rep)


def test_analyze_reference_knot_uses_homfly_route_past_the_state_limit():
    d = realize_dt(K15_V1_MINUS2.dt)
    rep = analyze(d, state_limit=10)
    assert rep["jones_route"] == "homfly"
    assert rep["obstruction"]["verdict"] == "NotPositive"
    assert rep["obstruction"]["bound_value"] == 15 and rep["obstruction"]["max_v"] == 16
    assert "positive" not in rep


def test_family_first_rows():
    for k, (max_v, min_v, v1, lead) in ((K15_V1_MINUS1, (20, 4, -1, 2)), (K16, (22, 5, 0, 1))):
        rep = verify_family_claims(realize_dt(k.dt), w_max=1)
        r1 = rep.rows[1]
        assert (r1.max_v, r1.min_v, r1.second_coeff, r1.lead_conway) == (max_v, min_v, v1, lead)
        assert rep.passed, rep.failures()


def test_family_identity_row():
    base = realize_dt(K15_V1_MINUS1.dt)
    assert family_diagram(base, 0) == base
    rep = verify_family_claims(base, w_max=0)
    assert len(rep.rows) == 1 and rep.rows[0].c == base.c


def test_family_diagrams_are_almost_positive_and_b_adequate():
    base = realize_dt(K15_V1_MINUS2.dt)
    for w in (1, 2):
        d = family_diagram(base, w)
        assert (d.c, d.q) == (base.c + 3 * w, 1)
    assert all(r.b_adequate for r in verify_family_claims(base, w_max=1).rows)


def test_loop_site_rejects_bad_arcs():
    base = realize_dt(K15_V1_MINUS1.dt)
    x, arc, partner, face = loop_site(base)
    assert loop_site(base, arc)[0] == x
    from knotpos.diagram import DiagramError
    with pytest.raises(DiagramError):
        loop_site(base, partner)
    with pytest.raises(DiagramError):
        loop_site(torus_2(3))
