"""A-state graphs of positive diagrams and the Balanced / Burdened taxonomy.

The A-state graph has one vertex per A-circle and one edge per crossing.  Its
reduction collapses parallel edges and remembers their multiplicity; an
edge of the reduction is a *cut* edge when it is a bridge and a *cycle* edge
otherwise.  Hole lengths are read off the cycle edges alone (cut edges
contracted), which for two holes leaves either a theta graph or two cycles
sharing at most a vertex.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import combinations

import networkx as nx

from .diagram import Diagram, DiagramError, DiagramStats, adjacent_faces, insert_clasp

FAMILIES = ("Balanced", "OddlyBalanced", "Burdened", "OddlyBurdened", "Unclassified")


@dataclass(frozen=True)
class StateGraph:
    """Multigraph: ``edges[i]`` joins the two A-circles met by crossing ``i``."""
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    positive: bool

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(self.vertices)
        for i, (u, v) in enumerate(self.edges):
            g.add_edge(u, v, key=i)
        return g

    @property
    def has_loops(self) -> bool:
        return any(u == v for u, v in self.edges)


@dataclass(frozen=True)
class ReducedEdge:
    u: int
    v: int
    multiplicity: int
    crossings: tuple[int, ...]
    role: str  # "cut" or "cycle"


@dataclass(frozen=True)
class ReducedGraph:
    vertices: tuple[int, ...]
    edges: tuple[ReducedEdge, ...]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        for e in self.edges:
            g.add_edge(e.u, e.v, multiplicity=e.multiplicity, role=e.role, crossings=e.crossings)
        return g

    def edge(self, u: int, v: int) -> ReducedEdge:
        key = (min(u, v), max(u, v))
        for e in self.edges:
            if (e.u, e.v) == key:
                return e
        raise KeyError(key)

    def cycle_edges(self) -> list[ReducedEdge]:
        return [e for e in self.edges if e.role == "cycle"]

    def cut_edges(self) -> list[ReducedEdge]:
        return [e for e in self.edges if e.role == "cut"]

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f"  {v};")
        for e in self.edges:
            style = "bold" if e.role == "cycle" else "dashed"
            lines.append(f'  {e.u} -- {e.v} [label="{e.multiplicity}", style={style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [
                {"u": e.u, "v": e.v, "multiplicity": e.multiplicity, "role": e.role,
                 "crossings": list(e.crossings)}
                for e in self.edges
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


def build_a_state_graph(d: Diagram) -> StateGraph:
    """Vertices are A-circles, numbered by their smallest arc label; edge ``i`` is crossing ``i``."""
    member, count = d.circle_membership("A")
    edges = []
    for x in d.crossings:
        u, v = member[x.arcs[0]], member[x.arcs[2]]
        edges.append((min(u, v), max(u, v)))
    return StateGraph(tuple(range(count)), tuple(edges), d.is_positive())


def reduce_graph(g: StateGraph) -> ReducedGraph:
    groups: dict[tuple[int, int], list[int]] = {}
    for i, (u, v) in enumerate(g.edges):
        if u != v:
            groups.setdefault((u, v), []).append(i)
    simple = nx.Graph()
    simple.add_nodes_from(g.vertices)
    simple.add_edges_from(groups)
    bridges = {(min(u, v), max(u, v)) for u, v in nx.bridges(simple)}
    edges = tuple(
        ReducedEdge(u, v, len(xs), tuple(xs), "cut" if (u, v) in bridges else "cycle")
        for (u, v), xs in sorted(groups.items())
    )
    return ReducedGraph(g.vertices, edges)


def betti(g: ReducedGraph | nx.Graph) -> int:
    """First Betti number E - V + 1 of a connected graph."""
    h = g.to_networkx() if isinstance(g, ReducedGraph) else g
    if h.number_of_nodes() == 0 or not nx.is_connected(h):
        raise ValueError("betti needs a connected, non-empty graph")
    return h.number_of_edges() - h.number_of_nodes() + 1


def second_coeff_predicted(d: Diagram) -> int:
    """(-1)^(n-1) (s - 1 - #pairs of Seifert circles joined by a crossing)."""
    if not d.is_positive():
        raise DiagramError("second_coeff_predicted needs a positive diagram")
    g = build_a_state_graph(d)
    pairs = {e for e in g.edges if e[0] != e[1]}
    s = d.stats().s
    val = s - 1 - len(pairs)
    return val if d.n % 2 == 1 else -val


# ---- classification ------------------------------------------------------

@dataclass(frozen=True)
class Classification:
    family: str
    diagram_type: int | None = None
    m: int | None = None
    k: int | None = None
    k1: int | None = None
    k2: int | None = None
    x: int | None = None
    cycle_edges: int = 0
    cycle_edge_parity: str = "even"
    diagnostic: str = ""

    @property
    def classified(self) -> bool:
        return self.family != "Unclassified"

    @property
    def odd(self) -> bool:
        return self.family in ("OddlyBalanced", "OddlyBurdened")

    def as_dict(self) -> dict:
        return asdict(self)


def _unclassified(why: str, **kw) -> Classification:
    return Classification("Unclassified", diagnostic=why, **kw)


def _walk(h: nx.Graph, start, first) -> tuple[list, int]:
    """Follow a path from ``start`` through ``first`` until a branch vertex; returns (path, length)."""
    path = [start, first]
    prev, cur = start, first
    while h.degree(cur) == 2 and cur != start:
        nxt = next(w for w in h.neighbors(cur) if w != prev)
        prev, cur = cur, nxt
        path.append(cur)
    return path, len(path) - 1


def hole_lengths(rg: ReducedGraph) -> tuple[int, ...]:
    """Hole boundary data from the cycle edges.

    One hole: ``(k,)``.  Two holes: ``(k1, k2, x)`` with ``x`` the number of
    shared edges.  For a theta graph with branch paths ``p <= q <= r`` the
    shared path is taken to be the shortest: ``x = p``, ``k1 = p + r``,
    ``k2 = p + q``; the predictions only use ``k1 + k2 - x`` and
    ``k1*k2 - x^2``, which are symmetric in the three paths.
    """
    h = nx.Graph()
    h.add_edges_from((e.u, e.v) for e in rg.cycle_edges())
    if h.number_of_edges() == 0:
        return ()
    b = h.number_of_edges() - h.number_of_nodes() + nx.number_connected_components(h)
    if b == 1:
        return (h.number_of_edges(),)
    if b != 2:
        raise ValueError(f"cycle part has {b} independent cycles")
    comps = list(nx.connected_components(h))
    if len(comps) == 2:
        k1, k2 = sorted((h.subgraph(c).number_of_edges() for c in comps), reverse=True)
        return (k1, k2, 0)
    branch = sorted(v for v in h if h.degree(v) > 2)
    if len(branch) == 1:
        v = branch[0]
        lens, used = [], set()
        for w in sorted(h.neighbors(v)):
            if w in used:
                continue
            path, ln = _walk(h, v, w)
            used.add(path[-2])
            lens.append(ln)
        k1, k2 = sorted(lens, reverse=True)
        return (k1, k2, 0)
    u, v = branch
    lens = sorted(_walk(h, u, w)[1] for w in h.neighbors(u))
    p, q, r = lens
    return (p + r, p + q, p)


def classify(d: Diagram) -> Classification:
    """Family, type, burdening number and hole data of a positive diagram."""
    if d.c == 0:
        return _unclassified("crossingless diagram")
    if not d.is_positive():
        return _unclassified("diagram is not positive")
    if d.loops or not d.is_connected():
        return _unclassified("split diagram")
    g = build_a_state_graph(d)
    if g.has_loops:
        return _unclassified("a crossing meets a single A-circle")
    rg = reduce_graph(g)
    b = betti(rg)
    if b >= 3:
        return _unclassified(f"reduced A-state graph has {b} holes")
    cuts, cyc = rg.cut_edges(), rg.cycle_edges()
    if any(e.multiplicity == 1 for e in cuts):
        return _unclassified("cut edge of multiplicity 1 (nugatory crossing)")
    m = sum(e.multiplicity - 2 for e in cuts) + sum(e.multiplicity - 1 for e in cyc)
    parity = "odd" if len(cyc) % 2 else "even"
    base = dict(diagram_type=b, m=m, cycle_edges=len(cyc), cycle_edge_parity=parity)
    holes = hole_lengths(rg)
    if b == 0:
        return Classification("Balanced" if m == 0 else "Burdened", **base)
    if b == 1:
        return Classification("Balanced" if m == 0 else "Burdened", k=holes[0], **base)
    k1, k2, x = holes
    if parity == "odd":
        fam = "OddlyBalanced" if m == 0 else "OddlyBurdened"
    else:
        fam = "Balanced" if m == 0 else "Burdened"
    return Classification(fam, k1=k1, k2=k2, x=x, **base)


def burdening_number_formula(cls: Classification, st: DiagramStats, min_v) -> int:
    """Burdening number from the Jones minimal degree: type 1 ``4 minV - c + k - 2``,
    type 2 ``4 minV - c + (k1 + k2 - x - 4)``."""
    mv = Fraction(min_v)
    if cls.diagram_type == 1:
        val = 4 * mv - st.c + cls.k - 2
    elif cls.diagram_type == 2:
        val = 4 * mv - st.c + (cls.k1 + cls.k2 - cls.x - 4)
    else:
        raise ValueError("the burdening-number formula covers types 1 and 2 only")
    if val.denominator != 1:
        raise ValueError(f"non-integral burdening number {val}")
    return int(val)


def predicted_lead_conway(cls: Classification) -> Fraction:
    if not cls.classified or cls.diagram_type not in (1, 2):
        raise ValueError("leading Conway prediction needs a classified diagram of type 1 or 2")
    if cls.diagram_type == 1:
        return Fraction(cls.k, 2)
    extra = 1 if cls.odd else 0
    return Fraction(cls.k1 * cls.k2 - cls.x ** 2 + extra, 4)


def b_circle_bound(cls: Classification, n: int) -> int:
    """Upper bound on the number of B-circles: ``n + 2m``, or ``n + 2(m + 1)`` for the odd families."""
    if not cls.classified:
        raise ValueError("no B-circle bound for an unclassified diagram")
    return n + 2 * (cls.m + 1) if cls.odd else n + 2 * cls.m


# ---- clasp moves ---------------------------------------------------------

@dataclass(frozen=True)
class ClaspWitness:
    v1: int
    v2: int
    v3: int


def claspable(d: Diagram) -> ClaspWitness | None:
    """Lexicographically smallest ``(v1, v2, v3)`` on a cycle whose two edges at
    ``v2`` form a cut set leaving a tree on the ``v2`` side, or None."""
    if d.c == 0 or not d.is_positive() or not d.is_reduced():
        return None
    g = build_a_state_graph(d)
    if g.has_loops:
        return None
    rg = reduce_graph(g)
    for e in rg.edges:
        if (e.role == "cut" and e.multiplicity != 2) or (e.role == "cycle" and e.multiplicity != 1):
            return None
    h = rg.to_networkx()
    found = []
    for v2 in sorted(h):
        nbrs = sorted(w for w in h.neighbors(v2) if h.edges[v2, w]["role"] == "cycle")
        for v1, v3 in combinations(nbrs, 2):
            cut = h.copy()
            cut.remove_edges_from([(v1, v2), (v2, v3)])
            side = nx.node_connected_component(cut, v2)
            if v1 in side or v3 in side:
                continue
            if nx.is_tree(cut.subgraph(side)):
                found.append((v1, v2, v3))
                found.append((v3, v2, v1))
    if not found:
        return None
    return ClaspWitness(*min(found))


def _expected_after_clasp(g: StateGraph, w: ClaspWitness) -> nx.MultiGraph:
    out = nx.MultiGraph()
    out.add_nodes_from(g.vertices)
    for u, v in g.edges:
        u2 = w.v1 if u == w.v3 else u
        v2 = w.v1 if v == w.v3 else v
        out.add_edge(u2, v2)
    out.add_edge(w.v1, w.v3)
    out.add_edge(w.v1, w.v3)
    return out


def clasp_move(d: Diagram, witness: ClaspWitness) -> Diagram:
    """Clasp an arc of circle ``v1`` with an arc of circle ``v3`` by two positive crossings.

    Candidate arc pairs sharing a face are tried in label order; the first whose
    A-state graph is the expected one (edges at ``v3`` moved to ``v1``, plus a
    doubled ``v1``-``v3`` edge) is returned.
    """
    g = build_a_state_graph(d)
    rg = reduce_graph(g)
    h = rg.to_networkx()
    w = witness
    if not (h.has_edge(w.v1, w.v2) and h.has_edge(w.v2, w.v3)):
        raise DiagramError(f"invalid witness {w}")
    circ, _ = d.circle_membership("A")
    arcs1 = sorted(a for a in circ if circ[a] == w.v1)
    arcs3 = sorted(a for a in circ if circ[a] == w.v3)
    expected = _expected_after_clasp(g, w)
    for a1 in arcs1:
        for a3 in arcs3:
            for f in sorted(set(adjacent_faces(d, a1)) & set(adjacent_faces(d, a3))):
                for aof in (True, False):
                    try:
                        out, _ = insert_clasp(d, a1, a3, f, sign=1, a_over_first=aof)
                    except DiagramError:
                        continue
                    if not out.is_positive():
                        continue
                    got = build_a_state_graph(out).to_networkx()
                    if nx.is_isomorphic(got, expected):
                        return out
    raise DiagramError(f"no clasp realizes witness {w}")


def graph_report(d: Diagram) -> dict:
    g = build_a_state_graph(d)
    rg = reduce_graph(g)
    return {"a_state_graph": {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]},
            "reduced": rg.to_json_obj()}


__all__ = [
    "StateGraph", "ReducedGraph", "ReducedEdge", "Classification", "ClaspWitness", "FAMILIES",
    "build_a_state_graph", "reduce_graph", "betti", "second_coeff_predicted", "classify",
    "hole_lengths", "burdening_number_formula", "predicted_lead_conway", "b_circle_bound",
    "claspable", "clasp_move", "graph_report",
]
