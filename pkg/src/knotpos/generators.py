"""Standard diagram families: braid closures, T(2,2p) torus links, pretzels,
and random positive diagrams for property tests."""

from __future__ import annotations

import random
from itertools import count, product
from typing import Sequence

from .diagram import (
    Crossing, Diagram, DiagramError, _UF, _traverse, assemble, connected_sum, mirror, reverse_component,
)


def braid_closure(word: Sequence[int], strands: int | None = None) -> Diagram:
    """Closure of a braid word (generator ``i`` or ``-i`` for sigma_i^{+-1}), strands running upward."""
    k = strands if strands is not None else (max((abs(g) for g in word), default=0) + 1)
    if any(g == 0 or abs(g) >= k for g in word):
        raise DiagramError(f"braid word {list(word)} does not fit on {k} strands")
    fresh = count(1)
    bottom = [next(fresh) for _ in range(k)]
    cur = list(bottom)
    quads, under, hints = [], [], []
    for g in word:
        i = abs(g) - 1
        ne, nw = next(fresh), next(fresh)
        # counterclockwise from SE: SE, NE, NW, SW
        quads.append([cur[i + 1], ne, nw, cur[i]])
        # positive generator: SW->NE strand (slots 3,1) over, so SE->NW (parity 0) is under
        under.append(0 if g > 0 else 1)
        hints.append({0, 3})
        cur[i], cur[i + 1] = nw, ne
    uf = _UF()
    for top, bot in zip(cur, bottom):
        uf.union(top, bot)
    quads = [[uf.find(a) for a in q] for q in quads]
    present = {a for q in quads for a in q}
    loops = len({uf.find(b) for b in bottom} - present)
    return assemble(quads, under, hints, loops)


def _shadow_positive(quads, comp_dirs, loops=0) -> Diagram:
    """Orient a shadow by ``comp_dirs`` and pick every over-strand so the crossing is positive."""
    comps = _traverse(quads)
    entries = [set() for _ in quads]
    for comp, fwd in zip(comps, comp_dirs):
        for ci, s in comp:
            entries[ci].add(s if fwd else (s + 2) % 4)
    under = []
    for e in entries:
        s0, s1 = sorted(e)
        # strand entering at s is under iff the other strand enters at s - 1
        under.append(s0 % 2 if (s0 - 1) % 4 == s1 else s1 % 2)
    return assemble(quads, under, entries, loops)


def _is_alternating(d: Diagram) -> bool:
    for a in d.occurrences:
        (c1, s1), (c2, s2) = d.occurrences[a]
        if (s1 % 2 == 0) == (s2 % 2 == 0):
            return False
    return True


def positive_orientations(quads, loops=0) -> list[Diagram]:
    """All positive diagrams on a shadow, one per component orientation (first component fixed)."""
    ncomp = len(_traverse(quads))
    out = []
    for dirs in product((True, False), repeat=max(ncomp - 1, 0)):
        out.append(_shadow_positive(quads, (True,) + dirs, loops))
    return out


def torus_2_2p(p: int, orientation: str = "antiparallel") -> Diagram:
    """Standard 2-braid diagram of the torus link T(2,2p), all crossings positive.

    ``antiparallel`` (default) orients the two components oppositely, which is
    the positive orientation whose A-state graph is a single 2p-cycle;
    ``parallel`` is the plain positive braid closure.
    """
    if not isinstance(p, int) or p < 1:
        raise DiagramError("torus_2_2p needs p >= 1")
    d = braid_closure([1] * (2 * p), 2)
    if orientation == "parallel":
        return d
    if orientation != "antiparallel":
        raise DiagramError(f"unknown orientation {orientation!r}")
    return mirror(reverse_component(d, 1))


def torus_2(n: int) -> Diagram:
    """Positive braid closure of sigma_1^n (T(2,n), a knot for odd n)."""
    if n < 1:
        raise DiagramError("torus_2 needs n >= 1")
    return braid_closure([1] * n, 2)


def _pretzel_shadow(cols: Sequence[int]):
    fresh = count(1)
    uf = _UF()
    quads = []
    tops, bots = [], []
    for n in cols:
        x0, y0 = next(fresh), next(fresh)
        x, y = x0, y0
        for _ in range(n):
            nx, ny = next(fresh), next(fresh)
            # counterclockwise from SE: SE, NE, NW, SW
            quads.append([ny, y, x, nx])
            x, y = nx, ny
        tops.append((x0, y0))
        bots.append((x, y))
    m = len(cols)
    for i in range(m):
        uf.union(tops[i][1], tops[(i + 1) % m][0])
        uf.union(bots[i][1], bots[(i + 1) % m][0])
    labels = {a for t in tops + bots for a in t}
    quads = [[uf.find(a) for a in q] for q in quads]
    present = {a for q in quads for a in q}
    loops = len({uf.find(a) for a in labels} - present)
    return quads, loops


def pretzel(*params: int) -> Diagram:
    """Standard diagram of the pretzel link P(p1, ..., pk) with all parameters <= 0.

    Column i is a vertical twist of |p_i| crossings, all of one handedness.
    Orientations are chosen so every crossing is positive; a zero column
    degenerates the link into a connected sum of 2-bridge torus links.
    """
    if len(params) < 2:
        raise DiagramError("pretzel needs at least two columns")
    if any(not isinstance(p, int) or p > 0 for p in params):
        raise DiagramError("pretzel parameters must be non-positive integers")
    cols = [-p for p in params]
    if sum(cols) == 0:
        raise DiagramError("all columns empty")
    quads, loops = _pretzel_shadow(cols)
    for d in positive_orientations(quads, loops):
        if _uniform_twist(d, quads):
            return d
    raise DiagramError(f"P{tuple(params)} has no positive orientation of its standard diagram")


def _uniform_twist(d: Diagram, quads, want: int = 0) -> bool:
    """Every crossing has its over-strand along the same diagonal (counterclockwise twisting)."""
    for x, q in zip(d.crossings, quads):
        # rotation offset between stored arcs and the shadow quad
        off = next(r for r in range(4) if tuple(q[(r + k) % 4] for k in range(4)) == x.arcs)
        over_parity = (off + 1) % 2
        # want=0: over-strand on the NW-SE diagonal (shadow slots 0, 2)
        if over_parity != want:
            return False
    return True


def random_positive(rng: random.Random, max_crossings: int = 12, max_strands: int = 4,
                    reduced: bool = False, tries: int = 200) -> Diagram:
    """A random connected positive diagram: a braid shadow with random strand reversals."""
    for _ in range(tries):
        k = rng.randint(2, max_strands)
        c = rng.randint(k - 1, max_crossings)
        word = [rng.randint(1, k - 1) for _ in range(c)]
        if set(word) != set(range(1, k)):
            continue
        d = braid_closure(word, k)
        if d.loops or not d.is_connected():
            continue
        quads = [x.arcs for x in d.crossings]
        ncomp = len(d.components)
        dirs = (True,) + tuple(rng.random() < 0.5 for _ in range(ncomp - 1))
        out = _shadow_positive(quads, dirs)
        if reduced and not out.is_reduced():
            continue
        return out
    raise DiagramError("could not generate a diagram with the requested properties")


def double_crossing(d: Diagram, x: int, extra: int = 1) -> Diagram:
    """Stack ``extra`` more crossings of the same sign next to crossing ``x``.

    Seen with both strands running upward, crossing ``x`` becomes
    sigma^(1+extra): the Seifert circles are unchanged and the A-state graph
    gains ``extra`` parallel copies of the edge of ``x``.  Link type (and
    possibly the component count) changes, as it must.
    """
    if not 0 <= x < d.c:
        raise DiagramError(f"unknown crossing id {x}")
    if extra < 0:
        raise DiagramError("extra must be non-negative")
    cx = d.crossings[x]
    if cx.sign < 0:
        return mirror(double_crossing(mirror(d), x, extra))
    a0, a1, a2, a3 = cx.arcs
    fresh = count(max(d.occurrences) + 1)
    cr = list(d.crossings)
    se, sw = a0, a3
    new = []
    for _ in range(extra):
        ne, nw = next(fresh), next(fresh)
        new.append(Crossing((se, ne, nw, sw), 1))
        se, sw = ne, nw
    top = Crossing((se, a1, a2, sw), 1)
    if extra == 0:
        return d
    cr[x] = new[0]
    rest = new[1:] + [top]
    return Diagram(tuple(cr + rest), d.loops)


__all__ = [
    "braid_closure", "torus_2_2p", "torus_2", "pretzel", "random_positive", "positive_orientations",
    "connected_sum", "double_crossing",
]
