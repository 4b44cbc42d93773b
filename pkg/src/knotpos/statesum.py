"""Kauffman bracket by full state enumeration, Jones polynomial, adequacy and
the degree bounds that come from the extreme states.

States are enumerated in Gray-code order by a compiled kernel; each state's
circle count is recomputed from scratch with a union-find over arc labels.
The kernel only returns a histogram ``hist[#A][circles]`` and the bracket is
assembled from it with exact integers.
"""

from __future__ import annotations

import io
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np
from numba import njit

from .diagram import A_PAIRS, B_PAIRS, Diagram, DiagramStats
from .laurent import LaurentPoly1

DEFAULT_STATE_LIMIT = 24


class ResourceLimitError(RuntimeError):
    """A computation would exceed its configured size limit."""


def state_limit_default() -> int:
    v = os.environ.get("KNOTPOS_STATE_LIMIT")
    return int(v) if v else DEFAULT_STATE_LIMIT


def _arrays(d: Diagram) -> tuple[np.ndarray, int]:
    labels = {a: i for i, a in enumerate(sorted(d.occurrences))}
    arr = np.array([[labels[a] for a in x.arcs] for x in d.crossings], dtype=np.int64).reshape(d.c, 4)
    return arr, len(labels)


@njit(cache=True)
def _find(parent, x):
    r = x
    while parent[r] != r:
        r = parent[r]
    while parent[x] != r:
        nxt = parent[x]
        parent[x] = r
        x = nxt
    return r


@njit(cache=True)
def _circles_for(quads, narcs, state, parent):
    """Circle count of one state; bit i set means B-smoothing at crossing i."""
    for i in range(narcs):
        parent[i] = i
    comps = narcs
    c = quads.shape[0]
    for i in range(c):
        if (state >> i) & 1:
            p0, p1, p2, p3 = 1, 2, 3, 0
        else:
            p0, p1, p2, p3 = 0, 1, 2, 3
        ra = _find(parent, quads[i, p0])
        rb = _find(parent, quads[i, p1])
        if ra != rb:
            parent[rb] = ra
            comps -= 1
        ra = _find(parent, quads[i, p2])
        rb = _find(parent, quads[i, p3])
        if ra != rb:
            parent[rb] = ra
            comps -= 1
    return comps


@njit(cache=True)
def _popcount(x):
    n = 0
    while x:
        x &= x - 1
        n += 1
    return n


@njit(cache=True)
def _histogram(quads, narcs, start, stop, gray):
    c = quads.shape[0]
    hist = np.zeros((c + 1, c + 2), dtype=np.int64)
    parent = np.empty(max(narcs, 1), dtype=np.int64)
    for i in range(start, stop):
        state = i ^ (i >> 1) if gray else i
        k = _circles_for(quads, narcs, state, parent)
        nb = _popcount(state)
        hist[c - nb, k] += 1
    return hist


def state_histogram(d: Diagram, order: str = "gray", partitions: int = 1, limit: int | None = None) -> np.ndarray:
    """``hist[a, k]``: number of states with ``a`` A-smoothings and ``k`` circles (loops excluded)."""
    limit = state_limit_default() if limit is None else limit
    if d.c > limit:
        raise ResourceLimitError(f"state sum over {d.c} crossings exceeds the limit of {limit}; raise it explicitly")
    if d.c == 0:
        h = np.zeros((1, 2), dtype=np.int64)
        h[0, 0] = 1
        return h
    quads, narcs = _arrays(d)
    total = 1 << d.c
    bounds = [total * i // partitions for i in range(partitions + 1)]
    hist = np.zeros((d.c + 1, d.c + 2), dtype=np.int64)
    for lo, hi in zip(bounds, bounds[1:]):
        if hi > lo:
            hist += _histogram(quads, narcs, lo, hi, order == "gray")
    return hist


def _delta_powers(kmax: int) -> list[LaurentPoly1]:
    delta = LaurentPoly1({8: -1, -8: -1}, "A")
    out = [LaurentPoly1.one("A")]
    for _ in range(kmax):
        out.append(out[-1] * delta)
    return out


def bracket_from_histogram(hist: np.ndarray, c: int, loops: int) -> LaurentPoly1:
    kmax = hist.shape[1] + loops
    dp = _delta_powers(kmax)
    total = LaurentPoly1.zero("A")
    for a in range(hist.shape[0]):
        for k in range(hist.shape[1]):
            cnt = int(hist[a, k])
            if cnt:
                circles = k + loops
                total = total + dp[circles - 1].shift(a - (c - a)) * cnt
    return total


def kauffman_bracket(d: Diagram, limit: int | None = None, order: str = "gray", partitions: int = 1) -> LaurentPoly1:
    """Bracket in the variable A, normalised so the crossingless unknot is 1."""
    hist = state_histogram(d, order, partitions, limit)
    return bracket_from_histogram(hist, d.c, d.loops)


def jones_from_bracket(br: LaurentPoly1, writhe: int) -> LaurentPoly1:
    f = br.shift(-3 * writhe)
    if writhe % 2:
        f = -f
    return f.substitute_power(Fraction(-1, 4), "t")


def jones(d: Diagram, limit: int | None = None, order: str = "gray", partitions: int = 1) -> LaurentPoly1:
    """Jones polynomial: (-A)^(-3w) <D> with A -> t^(-1/4)."""
    return jones_from_bracket(kauffman_bracket(d, limit, order, partitions), d.writhe)


# ---- single states ------------------------------------------------------

@dataclass(frozen=True)
class StateCircles:
    count: int
    membership: dict


def state_circles(d: Diagram, state: Sequence[str] | Sequence[int]) -> StateCircles:
    """Circles of one state; ``state[i]`` is 'A'/'B' (or 0/1 with 1 meaning B)."""
    if len(state) != d.c:
        raise ValueError(f"state has {len(state)} entries for {d.c} crossings")
    pairs = []
    for ch in state:
        if ch in ("A", 0, False):
            pairs.append(A_PAIRS)
        elif ch in ("B", 1, True):
            pairs.append(B_PAIRS)
        else:
            raise ValueError(f"bad state entry {ch!r}")
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, pp in zip(d.crossings, pairs):
        for i, j in pp:
            ra, rb = find(x.arcs[i]), find(x.arcs[j])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    membership = {a: find(a) for a in sorted(d.occurrences)}
    return StateCircles(len(set(membership.values())) + d.loops, membership)


def reference_bracket(d: Diagram) -> LaurentPoly1:
    """Slow pure-Python bracket (binary order), used as an oracle for small diagrams."""
    total = LaurentPoly1.zero("A")
    dp = _delta_powers(d.c + d.loops + 1)
    for bits in range(1 << d.c):
        st = [(bits >> i) & 1 for i in range(d.c)]
        k = state_circles(d, st).count
        nb = sum(st)
        total = total + dp[k - 1].shift(d.c - 2 * nb)
    return total


def adequacy(d: Diagram) -> tuple[bool, bool]:
    """(A-adequate, B-adequate): no crossing touches a single circle of the all-A (all-B) state."""
    out = []
    for mode in ("A", "B"):
        member, _ = d.circle_membership(mode)
        ok = True
        for x in d.crossings:
            # the two smoothing arcs at x lie on circles through slots 0 and 2
            if member[x.arcs[0]] == member[x.arcs[2]]:
                ok = False
                break
        out.append(ok)
    return out[0], out[1]


@dataclass(frozen=True)
class DegreeBounds:
    min_bound: Fraction
    max_bound: Fraction
    min_tight: bool
    max_tight: bool


def degree_bounds(st: DiagramStats, adequate: tuple[bool, bool] | None = None) -> DegreeBounds:
    """Bounds on the Jones degrees from the all-A and all-B states.

    ``min deg V >= (c - A + 1)/2 - 3q/2`` and ``max deg V <= c + (B - 1)/2 - 3q/2``;
    each is an equality when the diagram is A- (resp. B-) adequate.
    """
    lo = Fraction(st.c - st.A + 1, 2) - Fraction(3 * st.q, 2)
    hi = st.c + Fraction(st.B - 1, 2) - Fraction(3 * st.q, 2)
    a, b = adequate if adequate is not None else (False, False)
    return DegreeBounds(lo, hi, a, b)


def trace_states(d: Diagram, limit: int | None = None, order: str = "gray") -> Iterator[str]:
    """CSV rows ``state,num_A,num_B,circles`` for each state (bit string, crossing 0 first)."""
    limit = state_limit_default() if limit is None else limit
    if d.c > limit:
        raise ResourceLimitError(f"trace over {d.c} crossings exceeds the limit of {limit}")
    yield "state,num_A,num_B,circles"
    for i in range(1 << d.c):
        s = i ^ (i >> 1) if order == "gray" else i
        bits = [(s >> j) & 1 for j in range(d.c)]
        k = state_circles(d, bits).count
        nb = sum(bits)
        yield "%s,%d,%d,%d" % ("".join("B" if b else "A" for b in bits), d.c - nb, nb, k)


def trace_csv(d: Diagram, limit: int | None = None) -> str:
    buf = io.StringIO()
    for row in trace_states(d, limit):
        buf.write(row + "\n")
    return buf.getvalue()
