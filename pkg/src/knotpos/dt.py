"""Dowker-Thistlethwaite codes: parsing, planar realization, and extraction.

Walking along the knot, passages through crossings are numbered 1..2c.  The
code lists, for the odd passages 1, 3, ..., 2c-1 in order, the even passage
at the same crossing.  A negative entry means the strand is *over* at that
even passage.

Realization embeds a gadget graph: every crossing becomes a wheel whose rim
visits (odd in, even in, odd out, even out), which forces the two strands to
alternate around the crossing in any planar embedding.  The embedding itself
comes from networkx's planarity test.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import networkx as nx

from .diagram import Diagram, DiagramError, assemble, mirror

MIRROR_POLICIES = ("fewest_negative", "as_given", "mirror")


@dataclass(frozen=True)
class DTCode:
    entries: tuple[int, ...]

    def __post_init__(self):
        e = self.entries
        if not e:
            raise DiagramError("empty DT code")
        if any(v == 0 or v % 2 for v in e):
            raise DiagramError("DT entries must be non-zero even integers")
        if sorted(abs(v) for v in e) != list(range(2, 2 * len(e) + 1, 2)):
            raise DiagramError("DT entries must be a signed permutation of 2, 4, ..., 2c")

    @property
    def c(self) -> int:
        return len(self.entries)

    def __str__(self):
        return "[" + ", ".join(str(v) for v in self.entries) + "]"


def parse_dt(text: str) -> DTCode:
    """Parse ``[4, 8, -22, ...]`` (brackets optional, commas or spaces)."""
    s = text.strip()
    if not s:
        raise DiagramError("empty DT input")
    s = s.replace("−", "-")
    s = re.sub(r"^DT\s*", "", s)
    if not re.fullmatch(r"[\[(]?\s*-?\d+(?:\s*[,\s]\s*-?\d+)*\s*[\])]?", s):
        raise DiagramError(f"cannot parse DT code {text!r}")
    return DTCode(tuple(int(v) for v in re.findall(r"-?\d+", s)))


def _passage_data(code: DTCode):
    c = code.c
    n = 2 * c
    # crossing index of each passage, and which passages are over
    cross_of = {}
    over = set()
    for i, e in enumerate(code.entries):
        odd = 2 * i + 1
        even = abs(e)
        cross_of[odd] = i
        cross_of[even] = i
        if e < 0:
            over.add(even)
        else:
            over.add(odd)
    return n, cross_of, over


def realize_dt(code: DTCode | str, mirror_policy: str = "fewest_negative") -> Diagram:
    """A planar knot diagram for the code; arc ``p`` runs from passage p to p+1."""
    if isinstance(code, str):
        code = parse_dt(code)
    if mirror_policy not in MIRROR_POLICIES:
        raise DiagramError(f"unknown mirror policy {mirror_policy!r}")
    n, cross_of, over = _passage_data(code)
    c = code.c

    def arc_in(p):
        return n if p == 1 else p - 1

    g = nx.Graph()
    for i in range(c):
        odd = 2 * i + 1
        even = abs(code.entries[i])
        rim = [("in", odd), ("in", even), ("out", odd), ("out", even)]
        for k in range(4):
            g.add_edge(("hub", i), rim[k])
            g.add_edge(rim[k], rim[(k + 1) % 4])
    for p in range(1, n + 1):
        nxt = 1 if p == n else p + 1
        g.add_edge(("out", p), ("mid", p))
        g.add_edge(("mid", p), ("in", nxt))
    planar, emb = nx.check_planarity(g)
    if not planar:
        raise DiagramError(f"DT code {code} is not realizable (non-planar)")
    quads, under, hints = [], [], []
    for i in range(c):
        odd = 2 * i + 1
        even = abs(code.entries[i])
        cw = [v for v in emb.neighbors_cw_order(("hub", i))]
        ccw = list(reversed(cw))
        start = ccw.index(("in", odd))
        ccw = ccw[start:] + ccw[:start]
        arcs = []
        for kind, p in ccw:
            arcs.append(arc_in(p) if kind == "in" else p)
        quads.append(arcs)
        # slots 0,2 carry the odd strand
        under.append(1 if odd in over else 0)
        even_in_slot = ccw.index(("in", even))
        hints.append({0, even_in_slot})
    d = assemble(quads, under, hints)
    if not d.is_planar():
        raise DiagramError(f"DT code {code} produced a non-planar gluing")
    if mirror_policy == "mirror" or (mirror_policy == "fewest_negative" and 2 * d.q > d.c):
        d = mirror(d)
    return d


def extract_dt(d: Diagram, start_arc: int | None = None) -> DTCode:
    """DT code of a knot diagram, numbering passages from the tail of ``start_arc``
    (default: the smallest arc label)."""
    if len(d.components) != 1 or d.loops:
        raise DiagramError("DT codes describe knot diagrams")
    if d.c == 0:
        raise DiagramError("DT code of the crossingless unknot is empty")
    comp = d.components[0]
    a0 = min(comp) if start_arc is None else start_arc
    k = comp.index(a0)
    order = comp[k:] + comp[:k]
    passages = {}
    over_at = {}
    for p, a in enumerate(order, start=1):
        ci, s = d.tail(a)
        passages.setdefault(ci, []).append(p)
        over_at[p] = s % 2 == 1
    entries = [0] * d.c
    for ci, (p1, p2) in passages.items():
        odd, even = (p1, p2) if p1 % 2 else (p2, p1)
        if odd % 2 == 0 or even % 2:
            raise DiagramError("diagram violates the DT parity condition")
        entries[(odd - 1) // 2] = -even if over_at[even] else even
    return DTCode(tuple(entries))
