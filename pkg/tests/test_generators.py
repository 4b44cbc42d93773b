import random

import pytest

from knotpos.diagram import DiagramError
from knotpos.generators import (
    braid_closure, double_crossing, positive_orientations, pretzel, random_positive, torus_2, torus_2_2p,
)
from knotpos.laurent import LaurentPoly1
from knotpos.skein import conway
from knotpos.statesum import jones

Z = lambda s: LaurentPoly1.parse(s, "z")


@pytest.mark.parametrize("p", range(1, 7))
def test_torus_link_conway(p):
    d = torus_2_2p(p)
    assert (d.c, d.n) == (2 * p, 2) and d.is_positive()
    assert conway(d) == Z(f"{p}z")


def test_torus_link_orientations_differ():
    anti, par = torus_2_2p(2), torus_2_2p(2, "parallel")
    assert (anti.stats().A, anti.stats().B) == (4, 2)
    assert (par.stats().A, par.stats().B) == (2, 4)
    with pytest.raises(ValueError):
        torus_2_2p(2, "sideways")


def test_parallel_torus_link_is_the_braid_closure():
    # sigma_1^4: z + z(1 + z^2) by one skein step
    assert conway(torus_2_2p(2, "parallel")) == conway(braid_closure([1, 1, 1, 1]))


@pytest.mark.parametrize("n", [3, 5, 7])
def test_torus_knots(n):
    d = torus_2(n)
    assert (d.c, d.n) == (n, 1) and d.is_positive()
    assert conway(d).max_deg == n - 1


@pytest.mark.parametrize("p,q,r", [(a, b, c) for a in (2, 4) for b in (2, 4) for c in (2, 4) if a <= b <= c])
def test_even_pretzel_conway(p, q, r):
    d = pretzel(-p, -q, -r)
    assert d.is_positive() and d.n == 3
    coeff = (p * q + p * r + q * r) // 4
    assert conway(d) == Z(f"{coeff}z^2")


@pytest.mark.parametrize("p,q,r", [(a, b, c) for a in (1, 3, 5) for b in (1, 3, 5) for c in (1, 3, 5) if a <= b <= c])
def test_odd_pretzel_conway(p, q, r):
    d = pretzel(-p, -q, -r)
    assert d.is_positive() and d.n == 1
    coeff = (p * q + p * r + q * r + 1) // 4
    assert conway(d) == Z(f"1 + {coeff}z^2")


def test_pretzel_rejects_mixed_parity():
    with pytest.raises(DiagramError):
        pretzel(-2, -3, -3)


def test_braid_closure_hopf():
    d = braid_closure([1, 1])
    assert (d.c, d.n) == (2, 2)
    assert jones(d) == LaurentPoly1.parse("-t^(1/2) - t^(5/2)")


def test_random_positive_is_reproducible():
    a = random_positive(random.Random(5), max_crossings=10)
    b = random_positive(random.Random(5), max_crossings=10)
    assert a == b and a.is_positive() and a.c <= 10 and a.is_connected()


def test_random_positive_reduced_flag():
    rng = random.Random(9)
    for _ in range(10):
        assert random_positive(rng, max_crossings=10, reduced=True).is_reduced()


def test_positive_orientations_of_a_shadow():
    d = torus_2_2p(2)
    outs = positive_orientations([x.arcs for x in d.crossings])
    assert outs and all(o.is_positive() for o in outs)


def test_double_crossing_adds_parallel_copies():
    d = torus_2(3)
    e = double_crossing(d, 0, 2)
    assert e.c == 5 and e.is_positive()
    assert e.stats().s == d.stats().s
    assert conway(e) == conway(torus_2(5))
    with pytest.raises(DiagramError):
        double_crossing(d, 3)
