"""Oriented link diagrams as labelled 4-valent planar maps.

PD convention
-------------
A crossing is written ``X[a, b, c, d]``: the four arcs meeting at the crossing,
listed counterclockwise, starting with the arc on which the under-strand
*enters*.  So the under-strand runs ``a -> c``.  The over-strand runs
``d -> b`` at a positive crossing and ``b -> d`` at a negative one.

Arc labels are arbitrary integers; each must occur exactly twice.  A diagram
may additionally carry free circles (``loops``) that meet no crossing; they
appear after smoothings and as the 0-crossing unknot.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property
from itertools import count
from typing import Iterable, Sequence


class DiagramError(ValueError):
    """Malformed or unsupported diagram data."""


@dataclass(frozen=True)
class Crossing:
    arcs: tuple[int, int, int, int]
    sign: int

    def __post_init__(self):
        if len(self.arcs) != 4:
            raise DiagramError(f"crossing needs 4 arcs, got {self.arcs}")
        if self.sign not in (1, -1):
            raise DiagramError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def in_slots(self) -> tuple[int, int]:
        """Slots where the under- and over-strand enter."""
        return (0, 3 if self.sign > 0 else 1)

    @property
    def out_slots(self) -> tuple[int, int]:
        return (2, 1 if self.sign > 0 else 3)


@dataclass(frozen=True)
class DiagramStats:
    c: int
    n: int
    s: int
    A: int
    B: int
    q: int
    writhe: int
    chi: int

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("c", "n", "s", "A", "B", "q", "writhe", "chi")}


# smoothing pairings by slot
A_PAIRS = ((0, 1), (2, 3))
B_PAIRS = ((1, 2), (3, 0))


def oriented_pairs(sign: int):
    return A_PAIRS if sign > 0 else B_PAIRS


class _UF:
    __slots__ = ("p",)

    def __init__(self):
        self.p = {}

    def find(self, x):
        p = self.p
        p.setdefault(x, x)
        root = x
        while p[root] != root:
            root = p[root]
        while p[x] != root:
            p[x], x = root, p[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.p[rb] = ra
        return True


@dataclass(frozen=True, eq=False)
class Diagram:
    crossings: tuple[Crossing, ...]
    loops: int = 0
    _check: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self._check:
            occ = defaultdict(int)
            for x in self.crossings:
                for a in x.arcs:
                    occ[a] += 1
            bad = sorted(a for a, k in occ.items() if k != 2)
            if bad:
                raise DiagramError(f"arc(s) {bad} do not occur exactly twice")
            self._ends  # raises on inconsistent orientation

    # ---- basic structure ------------------------------------------------
    @property
    def c(self) -> int:
        return len(self.crossings)

    @cached_property
    def occurrences(self) -> dict[int, list[tuple[int, int]]]:
        occ: dict[int, list[tuple[int, int]]] = defaultdict(list)
        for ci, x in enumerate(self.crossings):
            for s, a in enumerate(x.arcs):
                occ[a].append((ci, s))
        return dict(occ)

    @cached_property
    def _ends(self) -> dict[int, tuple[tuple[int, int], tuple[int, int]]]:
        """arc -> (tail occurrence, head occurrence)."""
        out = {}
        for a, occ in self.occurrences.items():
            o1, o2 = occ
            in1 = o1[1] in self.crossings[o1[0]].in_slots
            in2 = o2[1] in self.crossings[o2[0]].in_slots
            if in1 == in2:
                raise DiagramError(f"arc {a} has inconsistent orientation")
            out[a] = (o2, o1) if in1 else (o1, o2)
        return out

    def tail(self, arc: int) -> tuple[int, int]:
        return self._ends[arc][0]

    def head(self, arc: int) -> tuple[int, int]:
        return self._ends[arc][1]

    @property
    def arcs(self) -> list[int]:
        return sorted(self.occurrences)

    def has_arc(self, arc: int) -> bool:
        return arc in self.occurrences

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        """Arc labels of each crossing-bearing component in travel order, starting at the smallest label."""
        seen = set()
        comps = []
        for a in sorted(self.occurrences):
            if a in seen:
                continue
            comp = []
            cur = a
            while cur not in seen:
                seen.add(cur)
                comp.append(cur)
                ci, s = self.head(cur)
                cur = self.crossings[ci].arcs[(s + 2) % 4]
            comps.append(tuple(comp))
        return tuple(comps)

    def component_of(self, arc: int) -> int:
        for i, comp in enumerate(self.components):
            if arc in comp:
                return i
        raise DiagramError(f"unknown arc {arc}")

    @property
    def n(self) -> int:
        return len(self.components) + self.loops

    @property
    def q(self) -> int:
        return sum(1 for x in self.crossings if x.sign < 0)

    @property
    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def is_positive(self) -> bool:
        return all(x.sign > 0 for x in self.crossings)

    def count_circles(self, pairs_per_crossing: Iterable) -> int:
        uf = _UF()
        labels = set(self.occurrences)
        merged = 0
        for x, pairs in zip(self.crossings, pairs_per_crossing):
            for i, j in pairs:
                if uf.union(x.arcs[i], x.arcs[j]):
                    merged += 1
        return len(labels) - merged + self.loops

    def circles(self, mode: str) -> int:
        if mode == "A":
            return self.count_circles([A_PAIRS] * self.c)
        if mode == "B":
            return self.count_circles([B_PAIRS] * self.c)
        if mode == "oriented":
            return self.count_circles(oriented_pairs(x.sign) for x in self.crossings)
        raise DiagramError(f"unknown smoothing mode {mode!r}")

    def circle_membership(self, mode: str) -> tuple[dict[int, int], int]:
        """Map each arc to a circle index (0-based, ordered by smallest arc), plus the circle count."""
        uf = _UF()
        for x in self.crossings:
            pairs = {"A": A_PAIRS, "B": B_PAIRS}.get(mode) or oriented_pairs(x.sign)
            for i, j in pairs:
                uf.union(x.arcs[i], x.arcs[j])
        roots = {}
        member = {}
        for a in sorted(self.occurrences):
            r = uf.find(a)
            member[a] = roots.setdefault(r, len(roots))
        return member, len(roots) + self.loops

    @cached_property
    def _stats(self) -> DiagramStats:
        s = self.circles("oriented")
        return DiagramStats(
            c=self.c, n=self.n, s=s, A=self.circles("A"), B=self.circles("B"),
            q=self.q, writhe=self.writhe, chi=s - self.c,
        )

    def stats(self) -> DiagramStats:
        return self._stats

    def is_connected(self) -> bool:
        """True when the diagram's projection is connected (no split pieces)."""
        if self.c == 0:
            return self.loops <= 1
        if self.loops:
            return False
        uf = _UF()
        for ci, x in enumerate(self.crossings):
            for a in x.arcs:
                uf.union(("x", ci), ("a", a))
        return len({uf.find(("x", ci)) for ci in range(self.c)}) == 1

    # ---- faces ------------------------------------------------------------
    @cached_property
    def faces(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Faces as cycles of darts ``(crossing, slot)``; a dart leaves its crossing
        along the arc in that slot and has the face on its left."""
        other = {}
        for a, (o1, o2) in ((a, tuple(v)) for a, v in self.occurrences.items()):
            other[o1] = o2
            other[o2] = o1
        seen = set()
        faces = []
        for ci in range(self.c):
            for s in range(4):
                if (ci, s) in seen:
                    continue
                face = []
                cur = (ci, s)
                while cur not in seen:
                    seen.add(cur)
                    face.append(cur)
                    cj, t = other[cur]
                    cur = (cj, (t - 1) % 4)
                faces.append(tuple(face))
        return tuple(faces)

    @cached_property
    def _face_of_dart(self) -> dict[tuple[int, int], int]:
        return {d: i for i, f in enumerate(self.faces) for d in f}

    def face_of(self, dart: tuple[int, int]) -> int:
        return self._face_of_dart[dart]

    def is_planar(self) -> bool:
        """Euler check per connected piece: V - E + F = 2 with V=c, E=2c."""
        if self.c == 0:
            return True
        uf = _UF()
        for ci, x in enumerate(self.crossings):
            for a in x.arcs:
                uf.union(("x", ci), ("a", a))
        pieces = defaultdict(lambda: [0, 0])
        for ci in range(self.c):
            pieces[uf.find(("x", ci))][0] += 1
        for f in self.faces:
            pieces[uf.find(("x", f[0][0]))][1] += 1
        return all(nf == nc + 2 for nc, nf in pieces.values())

    def nugatory_crossings(self) -> list[int]:
        out = []
        for ci in range(self.c):
            f = [self.face_of((ci, s)) for s in range(4)]
            if f[0] == f[2] or f[1] == f[3]:
                out.append(ci)
        return out

    def is_reduced(self) -> bool:
        return not self.nugatory_crossings()

    def face_arcs(self, face: int) -> list[tuple[int, bool]]:
        """Arcs along a face boundary with a flag telling whether the face lies to the arc's left."""
        out = []
        for ci, s in self.faces[face]:
            a = self.crossings[ci].arcs[s]
            out.append((a, self.tail(a) == (ci, s)))
        return out

    # ---- serialization ---------------------------------------------------
    def to_pd(self) -> str:
        return "PD[" + ", ".join("X[%d, %d, %d, %d]" % x.arcs for x in self.crossings) + "]"

    def to_json_obj(self) -> dict:
        return {
            "pd": [list(x.arcs) for x in self.crossings],
            "signs": [x.sign for x in self.crossings],
            "loops": self.loops,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Diagram":
        pd = obj["pd"]
        signs = obj.get("signs")
        if signs is None:
            return parse_pd(json.dumps(pd), allow_split=True, loops=obj.get("loops", 0))
        if len(signs) != len(pd):
            raise DiagramError("signs and pd lengths differ")
        d = cls(tuple(Crossing(tuple(int(a) for a in q), int(s)) for q, s in zip(pd, signs)), int(obj.get("loops", 0)))
        d._ends  # orientation consistency
        return d

    def canonical(self) -> "Diagram":
        """Relabel arcs 1..2c consecutively along components (in component order)."""
        mapping = {}
        k = count(1)
        for comp in self.components:
            for a in comp:
                mapping[a] = next(k)
        return Diagram(tuple(Crossing(tuple(mapping[a] for a in x.arcs), x.sign) for x in self.crossings), self.loops)

    # ---- isomorphism -----------------------------------------------------
    @cached_property
    def canonical_key(self) -> tuple:
        """Relabel-invariant key; equal keys iff the oriented diagrams are isomorphic."""
        pieces = self._pieces()
        keys = sorted(self._piece_key(p) for p in pieces)
        return (tuple(keys), self.loops)

    def _pieces(self) -> list[list[int]]:
        uf = _UF()
        for ci, x in enumerate(self.crossings):
            for a in x.arcs:
                uf.union(("x", ci), ("a", a))
        groups = defaultdict(list)
        for ci in range(self.c):
            groups[uf.find(("x", ci))].append(ci)
        return list(groups.values())

    def _piece_key(self, cis: list[int]) -> tuple:
        best = None
        for start in cis:
            key = self._bfs_key(start)
            if best is None or key < best:
                best = key
        return best

    def _bfs_key(self, start: int) -> tuple:
        order = {start: 0}
        arcs_map: dict[int, int] = {}
        queue = [start]
        out = []
        i = 0
        while i < len(queue):
            ci = queue[i]
            i += 1
            x = self.crossings[ci]
            row = []
            for s, a in enumerate(x.arcs):
                if a not in arcs_map:
                    arcs_map[a] = len(arcs_map)
                row.append(arcs_map[a])
                for cj, t in self.occurrences[a]:
                    if cj not in order:
                        order[cj] = len(order)
                        queue.append(cj)
            out.append((x.sign, tuple(row)))
        return tuple(out)

    def isomorphic(self, other: "Diagram") -> bool:
        return self.canonical_key == other.canonical_key

    def __eq__(self, other):
        if not isinstance(other, Diagram):
            return NotImplemented
        return self.crossings == other.crossings and self.loops == other.loops

    def __hash__(self):
        return hash((self.crossings, self.loops))

    def __repr__(self):
        return f"Diagram({self.to_pd()}, loops={self.loops})"


UNKNOT = Diagram((), 1)


# ---------------------------------------------------------------------------
# orientation assembly

def _traverse(quads: Sequence[Sequence[int]]) -> list[list[tuple[int, int]]]:
    """Components of a shadow as lists of entry points ``(crossing, in_slot)``.

    Strands pass straight through a crossing (slot s to slot s+2).  Each
    component is walked starting from the smallest arc label it contains.
    """
    occ = defaultdict(list)
    for ci, q in enumerate(quads):
        for s, a in enumerate(q):
            occ[a].append((ci, s))
    for a, v in occ.items():
        if len(v) != 2:
            raise DiagramError(f"arc {a} occurs {len(v)} time(s); expected 2")
    other = {}
    for o1, o2 in occ.values():
        other[o1] = o2
        other[o2] = o1
    seen = set()
    comps = []
    for a in sorted(occ):
        start = occ[a][0]
        if start in seen:
            continue
        comp = []
        cur = start
        while True:
            nxt = other[cur]
            seen.add(cur)
            seen.add(nxt)
            comp.append(nxt)
            cur = (nxt[0], (nxt[1] + 2) % 4)
            if cur == start:
                break
        comps.append(comp)
    return comps


def assemble(quads: Sequence[Sequence[int]], under: Sequence[int], hints: Sequence[Iterable[int]] | None = None,
             loops: int = 0, strict: bool = False, tiebreak=None) -> Diagram:
    """Build an oriented Diagram from a shadow.

    ``quads[i]`` lists crossing i's arcs counterclockwise; ``under[i]`` in {0, 1}
    says the under-strand occupies slots ``(under[i], under[i] + 2)``.  Each
    component's direction is chosen to agree with ``hints`` (per-crossing sets of
    preferred entry slots); with ``strict`` any disagreement is an error.
    ``tiebreak(comp) -> bool`` (True keeps the walk direction) decides components
    without hints.
    """
    hints = [set(h) for h in hints] if hints is not None else [set() for _ in quads]
    entries: list[set[int]] = [set() for _ in quads]
    for comp in _traverse(quads):
        score = 0
        bad_fwd = bad_rev = 0
        for ci, s in comp:
            h = hints[ci]
            if s in h:
                score += 1
                bad_rev += 1
            if (s + 2) % 4 in h:
                score -= 1
                bad_fwd += 1
        if score == 0 and tiebreak is not None and bad_fwd == 0:
            forward = tiebreak(comp)
        else:
            forward = score >= 0
        if strict and (bad_fwd if forward else bad_rev):
            raise DiagramError("inconsistent strand orientations in input")
        for ci, s in comp:
            entries[ci].add(s if forward else (s + 2) % 4)
    crossings = []
    for q, u, e in zip(quads, under, entries):
        if len(e) != 2:
            raise DiagramError("crossing is not met by two distinct strands")
        u_in = next(s for s in e if s % 2 == u % 2)
        o_in = next(s for s in e if s % 2 != u % 2)
        arcs = tuple(q[(u_in + k) % 4] for k in range(4))
        sign = 1 if (o_in - u_in) % 4 == 3 else -1
        crossings.append(Crossing(arcs, sign))
    return Diagram(tuple(crossings), loops)


def _hints_of(d: Diagram) -> list[set[int]]:
    return [set(x.in_slots) for x in d.crossings]


# ---------------------------------------------------------------------------
# parsing

_NUM = re.compile(r"-?\d+")


def _parse_quads(text: str) -> list[tuple[int, ...]]:
    s = text.strip()
    if not s:
        raise DiagramError("empty PD input")
    # strip an optional PD[...] wrapper
    m = re.fullmatch(r"PD\s*\[(.*)\]", s, re.S)
    if m:
        s = m.group(1).strip()
    if s.startswith("[") and not s.startswith("[["):
        inner = s[1:-1].strip() if s.endswith("]") else s
        if not inner or inner.startswith("X") or inner.startswith("["):
            s = inner
    if s.startswith("[[") and s.endswith("]]"):
        s = s[1:-1]
    if not s:
        return []
    groups = re.findall(r"(?:X\s*)?[\[(]([^\[\]()]*)[\])]", s)
    rest = re.sub(r"(?:X\s*)?[\[(][^\[\]()]*[\])]", "", s)
    if rest.replace(",", "").strip():
        raise DiagramError(f"unrecognised PD text near {rest.strip()[:20]!r}")
    quads = []
    for g in groups:
        nums = [int(v) for v in _NUM.findall(g)]
        if len(nums) != 4:
            raise DiagramError(f"crossing {g!r} has {len(nums)} entries; expected 4")
        quads.append(tuple(nums))
    return quads


def parse_pd(text: str, allow_split: bool = False, loops: int | None = None) -> Diagram:
    """Parse PD text such as ``PD[X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]]``.

    Also accepted: ``[[1,5,2,4],[3,1,4,6],[5,3,6,2]]`` and bare ``X[...]`` lists.
    ``PD[]`` (or ``[]``) is the 0-crossing unknot.  Strands that never pass
    under anything are oriented so their labels increase along the strand.
    """
    quads = _parse_quads(text)
    if not quads:
        return Diagram((), 1 if loops is None else loops)

    def by_labels(comp):
        # prefer the walk direction in which consecutive labels mostly increase
        up = 0
        for ci, s in comp:
            a_in = quads[ci][s]
            a_out = quads[ci][(s + 2) % 4]
            up += 1 if a_out == a_in + 1 else (-1 if a_in == a_out + 1 else 0)
        return up >= 0

    d = assemble(quads, [0] * len(quads), [{0} for _ in quads], loops or 0, strict=True, tiebreak=by_labels)
    if not d.is_planar():
        raise DiagramError("PD gluing is not planar")
    if not allow_split and not d.is_connected():
        raise DiagramError("diagram is split (disconnected); only non-split diagrams are supported")
    return d


def parse_diagram_json(text: str) -> Diagram:
    return Diagram.from_json_obj(json.loads(text))


# ---------------------------------------------------------------------------
# edits

def _check_crossing(d: Diagram, x: int) -> None:
    if not isinstance(x, int) or not 0 <= x < d.c:
        raise DiagramError(f"unknown crossing id {x!r} (diagram has {d.c})")


def mirror_crossing(x: Crossing) -> Crossing:
    a = x.arcs
    if x.sign > 0:
        return Crossing((a[3], a[0], a[1], a[2]), -1)
    return Crossing((a[1], a[2], a[3], a[0]), 1)


def switch_crossing(d: Diagram, x: int) -> Diagram:
    """Swap over and under at crossing ``x``."""
    _check_crossing(d, x)
    cr = list(d.crossings)
    cr[x] = mirror_crossing(cr[x])
    return Diagram(tuple(cr), d.loops)


def mirror(d: Diagram) -> Diagram:
    return Diagram(tuple(mirror_crossing(x) for x in d.crossings), d.loops)


def smooth_crossing(d: Diagram, x: int, mode: str = "oriented") -> Diagram:
    """Remove crossing ``x`` by its A-, B- or oriented (Seifert) smoothing.

    Crossing ids above ``x`` shift down by one.  Arcs joined by the smoothing
    keep the smaller label; closed circles left without crossings become loops.
    A- and B-smoothings that disagree with the orientation reverse whatever
    component they have to.
    """
    _check_crossing(d, x)
    cx = d.crossings[x]
    if mode == "A":
        pairs = A_PAIRS
    elif mode == "B":
        pairs = B_PAIRS
    elif mode == "oriented":
        pairs = oriented_pairs(cx.sign)
    else:
        raise DiagramError(f"unknown smoothing mode {mode!r}")
    uf = _UF()
    for i, j in pairs:
        uf.union(cx.arcs[i], cx.arcs[j])
    rest = [c for k, c in enumerate(d.crossings) if k != x]
    quads = [tuple(uf.find(a) for a in c.arcs) for c in rest]
    present = {a for q in quads for a in q}
    new_loops = len({uf.find(a) for a in cx.arcs} - present)
    return assemble(quads, [0] * len(quads), [set(c.in_slots) for c in rest], d.loops + new_loops)


def smooth_all(d: Diagram, xs: Iterable[int], mode: str = "oriented") -> Diagram:
    """Smooth several crossings (ids refer to ``d``)."""
    for x in sorted(set(xs), reverse=True):
        d = smooth_crossing(d, x, mode)
    return d


def reverse_component(d: Diagram, comp: int) -> Diagram:
    """Reverse the orientation of one component (index into ``d.components``)."""
    if not 0 <= comp < len(d.components):
        raise DiagramError(f"unknown component {comp}")
    arcs = set(d.components[comp])
    hints = []
    for x in d.crossings:
        h = set()
        for s in x.in_slots:
            h.add((s + 2) % 4 if x.arcs[s] in arcs else s)
        hints.append(h)
    return assemble([x.arcs for x in d.crossings], [0] * d.c, hints, d.loops)


def reverse_all(d: Diagram) -> Diagram:
    hints = [{(s + 2) % 4 for s in x.in_slots} for x in d.crossings]
    return assemble([x.arcs for x in d.crossings], [0] * d.c, hints, d.loops)


def _fresh(d: Diagram):
    start = max(d.occurrences, default=0) + 1
    return count(start)


def relabel(d: Diagram, mapping: dict[int, int]) -> Diagram:
    return Diagram(tuple(Crossing(tuple(mapping.get(a, a) for a in x.arcs), x.sign) for x in d.crossings), d.loops)


def connected_sum(d1: Diagram, arc1: int, d2: Diagram, arc2: int) -> Diagram:
    """Cut ``arc1`` of ``d1`` and ``arc2`` of ``d2`` and splice them, respecting orientation."""
    if d2.c == 0:
        if d2.loops != 1:
            raise DiagramError("second summand must be a knot diagram or a connected diagram")
        return d1
    if d1.c == 0:
        if d1.loops != 1:
            raise DiagramError("first summand must be a knot diagram or a connected diagram")
        return d2
    if not d1.has_arc(arc1):
        raise DiagramError(f"unknown arc {arc1} in first diagram")
    if not d2.has_arc(arc2):
        raise DiagramError(f"unknown arc {arc2} in second diagram")
    shift = max(d1.occurrences) + 1 - min(d2.occurrences)
    d2s = relabel(d2, {a: a + shift for a in d2.occurrences})
    arc2 = arc2 + shift
    fresh = count(max(d2s.occurrences) + 1)
    x_arc, y_arc = next(fresh), next(fresh)
    quads = [list(x.arcs) for x in d1.crossings] + [list(x.arcs) for x in d2s.crossings]
    off = d1.c
    t1, h1 = d1.tail(arc1), d1.head(arc1)
    t2, h2 = d2s.tail(arc2), d2s.head(arc2)
    quads[t1[0]][t1[1]] = x_arc
    quads[h2[0] + off][h2[1]] = x_arc
    quads[t2[0] + off][t2[1]] = y_arc
    quads[h1[0]][h1[1]] = y_arc
    hints = _hints_of(d1) + _hints_of(d2s)
    return assemble(quads, [0] * len(quads), hints, d1.loops + d2.loops)


def _dart_for(d: Diagram, arc: int, face: int | None, left: bool | None = None) -> tuple[int, int]:
    """A dart traversing ``arc`` with ``face`` on its left (any adjacent face if None)."""
    if not d.has_arc(arc):
        raise DiagramError(f"unknown arc {arc}")
    cands = []
    for occ in d.occurrences[arc]:
        f = d.face_of(occ)
        fwd = d.tail(arc) == occ
        if face is not None and f != face:
            continue
        if left is not None and fwd != left:
            continue
        cands.append(occ)
    if not cands:
        raise DiagramError(f"arc {arc} does not border face {face}")
    return cands[0]


def adjacent_faces(d: Diagram, arc: int) -> list[int]:
    """Faces on the left and right of ``arc`` (in that order)."""
    t, h = d.tail(arc), d.head(arc)
    return [d.face_of(t), d.face_of(h)]


def _other_occ(d: Diagram, occ):
    a = d.crossings[occ[0]].arcs[occ[1]]
    o1, o2 = d.occurrences[a]
    return o2 if o1 == occ else o1


def insert_kink(d: Diagram, arc: int, face: int | None = None, sign: int = 1) -> tuple[Diagram, dict]:
    """Add a one-crossing curl on ``arc`` bulging into ``face``.

    Returns the new diagram and the labels of the new pieces:
    ``{"before", "loop", "after", "crossing"}`` (before/after along the arc's
    orientation).
    """
    if sign not in (1, -1):
        raise DiagramError("sign must be +1 or -1")
    if d.c == 0:
        if d.loops < 1:
            raise DiagramError("no arc to kink")
        a, l = 1, 2
        under = 0 if sign > 0 else 1
        # slots: NE=l, NW=l, SW=a, SE=a ; strand SW->NE then NW->SE
        quads = [(l, l, a, a)]
        d2 = assemble(quads, [under], [{2, 1}], d.loops - 1)
        if d2.crossings[0].sign != sign:
            d2 = assemble(quads, [1 - under], [{2, 1}], d.loops - 1)
        return d2, {"before": a, "loop": l, "after": a, "crossing": 0}
    dart = _dart_for(d, arc, face)
    end = _other_occ(d, dart)
    fwd = d.tail(arc) == dart
    fresh = _fresh(d)
    a_l, loop, a_r = next(fresh), next(fresh), next(fresh)
    quads = [list(x.arcs) for x in d.crossings]
    quads[dart[0]][dart[1]] = a_l
    quads[end[0]][end[1]] = a_r
    # new crossing, counterclockwise from NE: loop, loop, a_l (SW), a_r (SE)
    quads.append([loop, loop, a_l, a_r])
    hints = _hints_of(d) + [{2, 1} if fwd else {3, 0}]
    best = None
    for under in (0, 1):
        d2 = assemble(quads, [0] * d.c + [under], hints, d.loops)
        if d2.crossings[-1].sign == sign:
            best = d2
            break
    before, after = (a_l, a_r) if fwd else (a_r, a_l)
    return best, {"before": before, "loop": loop, "after": after, "crossing": d.c}


def insert_clasp(d: Diagram, arc_a: int, arc_b: int, face: int | None = None, sign: int = 1,
                 a_over_first: bool | None = None) -> tuple[Diagram, dict]:
    """Hook ``arc_a`` and ``arc_b`` together with a full twist across a face they share.

    A finger of ``arc_a`` is pushed across ``arc_b``; the two new crossings get
    opposite over/under so they share a sign, chosen by ``sign``.  Returns the
    diagram and the new crossing ids.
    """
    if arc_a == arc_b:
        raise DiagramError("clasp needs two different arcs")
    faces = [face] if face is not None else sorted(set(adjacent_faces(d, arc_a)) & set(adjacent_faces(d, arc_b)))
    if not faces:
        raise DiagramError(f"arcs {arc_a} and {arc_b} share no face")
    f = faces[0]
    da = _dart_for(d, arc_a, f)
    db = _dart_for(d, arc_b, f)
    ea, eb = _other_occ(d, da), _other_occ(d, db)
    fwd_a = d.tail(arc_a) == da
    fwd_b = d.tail(arc_b) == db
    fresh = _fresh(d)
    a_l, a_m, a_r, b_r, b_m, b_l = (next(fresh) for _ in range(6))
    quads = [list(x.arcs) for x in d.crossings]
    quads[da[0]][da[1]] = a_l
    quads[ea[0]][ea[1]] = a_r
    quads[db[0]][db[1]] = b_r
    quads[eb[0]][eb[1]] = b_l
    P = [b_m, a_m, b_l, a_l]
    Q = [b_r, a_m, b_m, a_r]
    quads += [P, Q]
    hp = {3 if fwd_a else 1, 0 if fwd_b else 2}
    hq = {1 if fwd_a else 3, 0 if fwd_b else 2}
    hints = _hints_of(d) + [hp, hq]
    options = [True, False] if a_over_first is None else [a_over_first]
    for aof in options:
        # a is the 1-3 strand; a over at P means b (parity 0) is under there
        under = [0] * d.c + ([0, 1] if aof else [1, 0])
        d2 = assemble(quads, under, hints, d.loops)
        if d2.crossings[-1].sign == sign and d2.crossings[-2].sign == sign:
            return d2, {"crossings": (d.c, d.c + 1), "face": f}
    raise DiagramError("no over/under choice gives the requested sign")


def insert_positive_loop(d: Diagram, arc: int, partner: int | None = None, face: int | None = None,
                         variant: str = "thread") -> Diagram:
    """Add a three-crossing positive loop on ``arc``.

    The arc (or ``partner`` when given) grows a positive curl and the arc is
    threaded through the curl with a positive clasp, giving three new positive
    crossings and one extra Seifert circle.  With no partner the arc threads
    its own curl, which on a bare unknot produces a positive trefoil.
    """
    if d.c == 0:
        kinked, info = insert_kink(d, 0, sign=1)
        return insert_clasp(kinked, info["loop"], info["after"], sign=1)[0]
    if not d.has_arc(arc):
        raise DiagramError(f"unknown arc {arc}")
    if partner is None:
        for f in adjacent_faces(d, arc):
            kinked, info = insert_kink(d, arc, f, sign=1)
            for piece in (info["after"], info["before"]):
                try:
                    out = insert_clasp(kinked, info["loop"], piece, sign=1)[0]
                except DiagramError:
                    continue
                if out.stats().s == d.stats().s + 1 and out.is_positive() == d.is_positive():
                    return out
        raise DiagramError(f"could not place a loop on arc {arc}")
    if not d.has_arc(partner):
        raise DiagramError(f"unknown arc {partner}")
    shared = [f for f in adjacent_faces(d, arc) if f in adjacent_faces(d, partner)]
    if face is not None:
        shared = [f for f in shared if f == face]
    for f in shared:
        kinked, info = insert_kink(d, partner, f, sign=1)
        for g in sorted(set(adjacent_faces(kinked, info["loop"])) & set(adjacent_faces(kinked, arc))):
            try:
                out = insert_clasp(kinked, arc, info["loop"], g, sign=1)[0]
            except DiagramError:
                continue
            if out.stats().s == d.stats().s + 1:
                return out
    raise DiagramError(f"arcs {arc} and {partner} admit no loop placement")
