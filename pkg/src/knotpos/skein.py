"""HOMFLY and Conway polynomials by skein recursion toward descending diagrams.

Convention: ``a P(L+) - a^-1 P(L-) = z P(L0)`` with ``P(unknot) = 1``; the
Conway polynomial obeys ``C(L+) - C(L-) = z C(L0)``.

Each node walks the components in order of their smallest arc label, from
that arc.  The first crossing first met on its under-strand is the pivot; one
child switches it (one step closer to descending), the other smooths it
(fewer crossings).  A diagram with no pivot is a descending diagram of an
unlink.  Two identities shortcut the tree without changing the value:
one-crossing curls are removed (both polynomials are isotopy invariants), and
split diagrams factor (HOMFLY) or vanish (Conway).
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .diagram import Diagram
from .laurent import LaurentPoly1, LaurentPoly2, specialize
from .statesum import ResourceLimitError

DEFAULT_SKEIN_LIMIT = 20
DEFAULT_NODE_CAP = 1 << 22


def skein_limit_default() -> int:
    v = os.environ.get("KNOTPOS_SKEIN_LIMIT")
    return int(v) if v else DEFAULT_SKEIN_LIMIT


@dataclass
class SkeinStats:
    nodes: int = 0
    leaves: int = 0
    cap: int = DEFAULT_NODE_CAP
    trace: list | None = None

    def tick(self, pivot, kind, depth):
        self.nodes += 1
        if self.nodes > self.cap:
            raise ResourceLimitError(f"skein tree exceeded {self.cap} nodes")
        if self.trace is not None:
            self.trace.append({"node": self.nodes, "pivot": pivot, "branch": kind, "depth": depth})


# A lean diagram state: list of [a0, a1, a2, a3] plus parallel list of signs.

def _occ(quads):
    occ = {}
    for ci, q in enumerate(quads):
        for s, a in enumerate(q):
            occ.setdefault(a, []).append((ci, s))
    return occ


def _remove_curls(quads, signs, loops):
    """Drop one-crossing curls until none remain."""
    changed = True
    while changed and quads:
        changed = False
        for ci, q in enumerate(quads):
            for s in range(4):
                if q[s] == q[(s + 1) % 4]:
                    u, v = q[(s + 2) % 4], q[(s + 3) % 4]
                    quads = quads[:ci] + quads[ci + 1:]
                    signs = signs[:ci] + signs[ci + 1:]
                    if u == v:
                        loops += 1
                    else:
                        quads = [[u if a == v else a for a in r] for r in quads]
                    changed = True
                    break
            if changed:
                break
    return quads, signs, loops


def _pieces(quads):
    """Crossing index groups of the connected pieces."""
    parent = list(range(len(quads)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    first = {}
    for ci, q in enumerate(quads):
        for a in q:
            if a in first:
                ra, rb = find(first[a]), find(ci)
                if ra != rb:
                    parent[rb] = ra
            else:
                first[a] = ci
    groups = {}
    for ci in range(len(quads)):
        groups.setdefault(find(ci), []).append(ci)
    return list(groups.values())


def _pivot(quads, signs):
    """(pivot crossing or None, number of components)."""
    occ = _occ(quads)
    head = {}
    for a, ((c1, s1), (c2, s2)) in occ.items():
        in1 = s1 == 0 or s1 == (3 if signs[c1] > 0 else 1)
        head[a] = (c1, s1) if in1 else (c2, s2)
    seen_arc = set()
    seen_x = set()
    ncomp = 0
    for a0 in sorted(occ):
        if a0 in seen_arc:
            continue
        ncomp += 1
        a = a0
        while a not in seen_arc:
            seen_arc.add(a)
            ci, s = head[a]
            if ci not in seen_x:
                if s == 0:
                    return ci, None
                seen_x.add(ci)
            a = quads[ci][(s + 2) % 4]
    return None, ncomp


def _switch(q, sign):
    if sign > 0:
        return [q[3], q[0], q[1], q[2]], -1
    return [q[1], q[2], q[3], q[0]], 1


def _smooth(quads, signs, loops, x):
    q = quads[x]
    pairs = ((0, 1), (2, 3)) if signs[x] > 0 else ((1, 2), (3, 0))
    rep = {a: a for a in q}

    def find(a):
        while rep[a] != a:
            a = rep[a]
        return a

    for i, j in pairs:
        ra, rb = find(q[i]), find(q[j])
        if ra != rb:
            rep[max(ra, rb)] = min(ra, rb)
    rest = quads[:x] + quads[x + 1:]
    rsigns = signs[:x] + signs[x + 1:]
    mapping = {a: find(a) for a in q}
    rest = [[mapping.get(a, a) for a in r] for r in rest]
    present = set()
    for r in rest:
        present.update(r)
    new_loops = len({find(a) for a in q} - present)
    return rest, rsigns, loops + new_loops


class _Engine:
    def __init__(self, mode: str, stats: SkeinStats):
        self.mode = mode
        self.stats = stats
        self._delta_cache = {0: {(0, 0): 1}}

    def delta_pow(self, k):
        if k not in self._delta_cache:
            prev = self.delta_pow(k - 1)
            out = {}
            for (a, z), c in prev.items():
                for (da, dz, dc) in ((1, -1, 1), (-1, -1, -1)):
                    key = (a + da, z + dz)
                    out[key] = out.get(key, 0) + c * dc
            self._delta_cache[k] = {k_: v for k_, v in out.items() if v}
        return self._delta_cache[k]

    def unlink(self, n):
        if self.mode == "conway":
            return {(0, 0): 1} if n == 1 else {}
        return self.delta_pow(n - 1)

    def run(self, quads, signs, loops, depth=0) -> dict:
        result: dict = {}
        stack = [(quads, signs, loops, 1, 0, 0, depth, "root")]
        conway = self.mode == "conway"
        while stack:
            quads, signs, loops, coef, ea, ez, dep, kind = stack.pop()
            quads, signs, loops = _remove_curls(quads, signs, loops)
            if not quads:
                self.stats.tick(None, kind, dep)
                self.stats.leaves += 1
                _addmul(result, self.unlink(max(loops, 1)), coef, ea, ez)
                continue
            groups = _pieces(quads)
            if len(groups) > 1 or loops:
                self.stats.tick(None, kind, dep)
                if conway:
                    continue
                prod = self.delta_pow(len(groups) + loops - 1)
                for g in groups:
                    sub_q = [quads[i] for i in g]
                    sub_s = [signs[i] for i in g]
                    prod = _mul(prod, self.run(sub_q, sub_s, 0, dep + 1))
                _addmul(result, prod, coef, ea, ez)
                continue
            x, ncomp = _pivot(quads, signs)
            self.stats.tick(x, kind, dep)
            if x is None:
                self.stats.leaves += 1
                _addmul(result, self.unlink(ncomp), coef, ea, ez)
                continue
            sign = signs[x]
            nq, ns = _switch(quads[x], sign)
            sw_quads = quads[:x] + [nq] + quads[x + 1:]
            sw_signs = signs[:x] + [ns] + signs[x + 1:]
            sm_quads, sm_signs, sm_loops = _smooth(quads, signs, loops, x)
            if conway:
                # C+ = C- + z C0 ;  C- = C+ - z C0
                sw = (coef, ea, ez)
                sm = (coef if sign > 0 else -coef, ea, ez + 1)
            else:
                # P+ = a^-2 P- + a^-1 z P0 ;  P- = a^2 P+ - a z P0
                sw = (coef, ea - 2 * sign, ez)
                sm = (coef if sign > 0 else -coef, ea - sign, ez + 1)
            stack.append((sm_quads, sm_signs, sm_loops, *sm, dep + 1, "smooth"))
            stack.append((sw_quads, sw_signs, loops, *sw, dep + 1, "switch"))
        return result


def _addmul(acc, poly, coef, ea, ez):
    for (a, z), c in poly.items():
        key = (a + ea, z + ez)
        v = acc.get(key, 0) + coef * c
        if v:
            acc[key] = v
        else:
            acc.pop(key, None)


def _mul(p, q):
    out = {}
    for (a1, z1), c1 in p.items():
        for (a2, z2), c2 in q.items():
            key = (a1 + a2, z1 + z2)
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def _prepare(d: Diagram, limit: int | None):
    limit = skein_limit_default() if limit is None else limit
    if d.c > limit:
        raise ResourceLimitError(f"skein recursion over {d.c} crossings exceeds the limit of {limit}; raise it explicitly")
    return [list(x.arcs) for x in d.crossings], [x.sign for x in d.crossings], d.loops


def homfly(d: Diagram, limit: int | None = None, node_cap: int = DEFAULT_NODE_CAP,
           stats: SkeinStats | None = None) -> LaurentPoly2:
    """HOMFLY polynomial in (a, z)."""
    quads, signs, loops = _prepare(d, limit)
    st = stats if stats is not None else SkeinStats(cap=node_cap)
    return LaurentPoly2(_Engine("homfly", st).run(quads, signs, loops))


def conway(d: Diagram, limit: int | None = None, node_cap: int = DEFAULT_NODE_CAP,
           via: str = "direct", stats: SkeinStats | None = None) -> LaurentPoly1:
    """Conway polynomial in z, by direct recursion or by specializing HOMFLY (``via='homfly'``)."""
    if via == "homfly":
        return specialize(homfly(d, limit, node_cap, stats), "conway")
    if via != "direct":
        raise ValueError(f"unknown route {via!r}")
    quads, signs, loops = _prepare(d, limit)
    st = stats if stats is not None else SkeinStats(cap=node_cap)
    res = _Engine("conway", st).run(quads, signs, loops)
    return LaurentPoly1({4 * z: c for (_, z), c in res.items()}, "z")


def jones_via_homfly(d: Diagram, limit: int | None = None, node_cap: int = DEFAULT_NODE_CAP) -> LaurentPoly1:
    return specialize(homfly(d, limit, node_cap), "jones")


class ZeroConwayError(ValueError):
    """The Conway polynomial vanishes (split link), so it has no leading term."""


def lead_conway(d: Diagram, limit: int | None = None, node_cap: int = DEFAULT_NODE_CAP) -> tuple[int, int]:
    """(degree, coefficient) of the top term of the Conway polynomial."""
    nab = conway(d, limit, node_cap)
    if nab.is_zero():
        raise ZeroConwayError("Conway polynomial is zero")
    return int(nab.max_deg), nab.lead_coeff


def skein_trace(d: Diagram, limit: int | None = None, node_cap: int = DEFAULT_NODE_CAP,
                mode: str = "homfly") -> list[dict]:
    """Node records (node id, pivot, branch kind, depth) of the skein tree."""
    st = SkeinStats(cap=node_cap, trace=[])
    if mode == "homfly":
        homfly(d, limit, node_cap, st)
    else:
        conway(d, limit, node_cap, stats=st)
    return st.trace


__all__ = [
    "homfly", "conway", "lead_conway", "jones_via_homfly", "skein_trace", "SkeinStats",
    "ZeroConwayError", "DEFAULT_SKEIN_LIMIT", "DEFAULT_NODE_CAP",
]

