"""Diagram corpora shared by the test modules."""

from __future__ import annotations

import random
from functools import lru_cache

from knotpos.diagram import Diagram, connected_sum, parse_pd, switch_crossing
from knotpos.generators import (
    braid_closure, double_crossing, pretzel, random_positive, torus_2, torus_2_2p,
)
from knotpos.stategraph import clasp_move, claspable, classify

# Knot Atlas planar diagrams, with their Jones polynomials as listed there.
ATLAS = {
    "3_1": ("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]", "-t^-4 + t^-3 + t^-1"),
    "4_1": ("PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]", "t^-2 - t^-1 + 1 - t + t^2"),
    "5_1": ("PD[X[1,6,2,7], X[3,8,4,9], X[5,10,6,1], X[7,2,8,3], X[9,4,10,5]]",
            "-t^-7 + t^-6 - t^-5 + t^-4 + t^-2"),
    "5_2": ("PD[X[1,4,2,5], X[3,8,4,9], X[5,10,6,1], X[9,6,10,7], X[7,2,8,3]]",
            "-t^-6 + t^-5 - t^-4 + 2t^-3 - t^-2 + t^-1"),
    "6_1": ("PD[X[1,4,2,5], X[7,10,8,11], X[3,9,4,8], X[9,3,10,2], X[5,12,6,1], X[11,6,12,7]]",
            "t^-4 - t^-3 + t^-2 - 2t^-1 + 2 - t + t^2"),
}


def generated_positive() -> list[tuple[str, Diagram]]:
    out = []
    for p in range(1, 6):
        out.append((f"T(2,{2 * p})", torus_2_2p(p)))
        out.append((f"T(2,{2 * p}) parallel", torus_2_2p(p, "parallel")))
    for n in (3, 5, 7):
        out.append((f"T(2,{n})", torus_2(n)))
    for params in ((-2, -2, -2), (-2, -2, -4), (-2, -4, -4), (-1, -3, -3), (-1, -3, -5),
                   (-3, -3, -3), (-1, -1, -1), (-2, -2, -2, -2)):
        out.append((f"P{params}", pretzel(*params)))
    for word in ([1, 1, 2, 2], [1, 2, 1, 2], [1, 1, 1, 2, 2, 2], [1, 2, 3, 1, 2, 3], [1, 1, 2, 1, 1, 2]):
        out.append((f"braid{word}", braid_closure(word)))
    return out


@lru_cache(maxsize=None)
def random_positive_corpus(count: int, max_crossings: int, seed: int = 7) -> tuple[Diagram, ...]:
    rng = random.Random(seed)
    return tuple(random_positive(rng, max_crossings=max_crossings) for _ in range(count))


def positive_corpus(random_count: int = 40, max_crossings: int = 12) -> list[tuple[str, Diagram]]:
    out = generated_positive()
    for i, d in enumerate(random_positive_corpus(random_count, max_crossings)):
        out.append((f"random{i}", d))
    return out


def mixed_corpus() -> list[tuple[str, Diagram]]:
    """Positive diagrams, atlas knots, and random diagrams with some crossings switched."""
    out = positive_corpus(30, 12)
    for name, (pd, _) in ATLAS.items():
        out.append((name, parse_pd(pd)))
    rng = random.Random(11)
    for i, d in enumerate(random_positive_corpus(20, 11, seed=3)):
        for x in rng.sample(range(d.c), k=rng.randint(1, max(1, d.c // 3))):
            d = switch_crossing(d, x)
        out.append((f"switched{i}", d))
    return out


def classified_fixtures() -> list[tuple[str, Diagram]]:
    """Balanced, Oddly Balanced and Burdened diagrams of types 0, 1 and 2."""
    hopf = braid_closure([1, 1])
    t24 = torus_2_2p(2)
    p222 = pretzel(-2, -2, -2)
    p133 = pretzel(-1, -3, -3)
    out = [
        ("hopf", hopf),
        ("hopf chain", braid_closure([1, 1, 2, 2])),
        ("hopf chain 4", braid_closure([1, 1, 2, 2, 3, 3])),
        ("trefoil", torus_2(3)),
        ("T(2,5)", torus_2(5)),
    ]
    for p in range(2, 7):
        out.append((f"T(2,{2 * p})", torus_2_2p(p)))
    for params in ((-2, -2, -2), (-2, -2, -4), (-2, -4, -4), (-4, -4, -4)):
        out.append((f"P{params}", pretzel(*params)))
    for params in ((-1, -3, -3), (-1, -3, -5), (-3, -3, -3), (-1, -5, -5), (-3, -3, -5)):
        out.append((f"P{params}", pretzel(*params)))
    # burdened: extra crossings stacked on cycle and cut edges
    out += [
        ("T(2,4)+1", double_crossing(t24, 0)),
        ("T(2,4)+2", double_crossing(t24, 0, 2)),
        ("T(2,6)+1+1", double_crossing(double_crossing(torus_2_2p(3), 0), 3)),
        ("P(-2,-2,-2)+1", double_crossing(p222, 0)),
        ("P(-2,-2,-2)+2", double_crossing(p222, 0, 2)),
        ("P(-1,-3,-3)+1", double_crossing(p133, 0)),
        ("P(-1,-3,-3)+2", double_crossing(double_crossing(p133, 0), 4)),
        ("T(2,4)#hopf", connected_sum(t24, t24.arcs[0], hopf, hopf.arcs[0])),
    ]
    tsum = connected_sum(t24, t24.arcs[0], hopf, hopf.arcs[0])
    cut = next(i for i, x in enumerate(tsum.crossings) if _on_cut_edge(tsum, i))
    out.append(("T(2,4)#hopf cut+1", double_crossing(tsum, cut)))
    for name, d in list(out):
        if claspable(d) is not None and d.c <= 10:
            out.append((f"{name} clasped", clasp_move(d, claspable(d))))
    return [(n, d) for n, d in out if classify(d).classified]


def _on_cut_edge(d: Diagram, x: int) -> bool:
    from knotpos.stategraph import build_a_state_graph, reduce_graph
    rg = reduce_graph(build_a_state_graph(d))
    return any(x in e.crossings and e.role == "cut" for e in rg.edges)
