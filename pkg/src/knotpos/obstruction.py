"""Positivity obstructions from the Jones and Conway polynomials.

A positive link with Jones polynomial V, Conway polynomial C and n components
satisfies ``max deg V <= bound`` where, writing V1 for the coefficient one
step above the lowest term of V,

* |V1| = 0:  bound = 4 min deg V + (n - 1)/2
* |V1| = 1:  bound = 4 min deg V + (n - 1)/2 + 2 lead(C) - 2
* |V1| = 2:  bound = 4 min deg V + (n - 1)/2 + lead(C)

A violated bound proves the link is not positive; a satisfied one proves
nothing.  For |V1| >= 3 no bound is available.

This module also builds the three-crossing-loop families over an
almost-positive base diagram and checks their degree and coefficient
patterns.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .diagram import Diagram, DiagramError, insert_positive_loop, smooth_crossing, switch_crossing
from .laurent import LaurentPoly1, LaurentPoly2, specialize
from .skein import conway, homfly, skein_limit_default
from .stategraph import (
    b_circle_bound, burdening_number_formula, classify, graph_report, predicted_lead_conway,
    second_coeff_predicted,
)
from .statesum import adequacy, degree_bounds, jones, state_limit_default

SCHEMA_VERSION = "knotpos.report/1"

VERDICTS = ("NotPositive", "Inconclusive", "NotApplicable")


def rational_json(v):
    """Exact rationals as JSON: integers stay integers, halves become ``"p/q"`` strings."""
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v


@dataclass(frozen=True)
class ObstructionReport:
    min_v: Fraction
    max_v: Fraction
    second_coeff: int
    lead_conway: int
    n: int
    bound_value: Fraction | None
    verdict: str

    @property
    def reason(self) -> str:
        if self.bound_value is None:
            return f"|V1| = {abs(self.second_coeff)} >= 3: no bound applies"
        rel = "<=" if self.max_v <= self.bound_value else "not <="
        return f"max deg V = {rational_json(self.max_v)} {rel} {rational_json(self.bound_value)}"

    def as_dict(self) -> dict:
        out = {k: rational_json(v) for k, v in asdict(self).items()}
        out["reason"] = self.reason
        return out


def positivity_test(v: LaurentPoly1, nabla: LaurentPoly1, n: int) -> ObstructionReport:
    if v.is_zero() or nabla.is_zero():
        raise ValueError("positivity test needs non-zero Jones and Conway polynomials")
    min_v, max_v = Fraction(v.min_deg), Fraction(v.max_deg)
    v1 = v.second_coeff
    lead = nabla.lead_coeff
    base = 4 * min_v + Fraction(n - 1, 2)
    if abs(v1) == 0:
        bound = base
    elif abs(v1) == 1:
        bound = base + 2 * lead - 2
    elif abs(v1) == 2:
        bound = base + lead
    else:
        return ObstructionReport(min_v, max_v, v1, lead, n, None, "NotApplicable")
    verdict = "NotPositive" if max_v > bound else "Inconclusive"
    return ObstructionReport(min_v, max_v, v1, lead, n, bound, verdict)


def _poly_json(p):
    return {"text": p.to_text(), "terms": p.to_json()}


def analyze(d: Diagram, state_limit: int | None = None, skein_limit: int | None = None) -> dict:
    """Everything about one diagram in a JSON-ready dict.

    The Jones polynomial comes from the state sum when ``c`` is within the
    state limit and from the HOMFLY polynomial otherwise.
    """
    state_limit = state_limit_default() if state_limit is None else state_limit
    skein_limit = skein_limit_default() if skein_limit is None else skein_limit
    st = d.stats()
    adq = adequacy(d)
    hom = homfly(d, skein_limit)
    nab = conway(d, skein_limit)
    if d.c <= state_limit:
        v, route = jones(d, state_limit), "state_sum"
    else:
        v, route = specialize(hom, "jones"), "homfly"
    bounds = degree_bounds(st, adq)
    report: dict = {
        "schema": SCHEMA_VERSION,
        "diagram": d.to_json_obj(),
        "stats": st.as_dict(),
        "adequacy": {"A": adq[0], "B": adq[1]},
        "jones": _poly_json(v),
        "jones_route": route,
        "homfly": _poly_json(hom),
        "conway": _poly_json(nab),
        "degree_bounds": {
            "min": rational_json(bounds.min_bound), "max": rational_json(bounds.max_bound),
            "min_tight": bounds.min_tight, "max_tight": bounds.max_tight,
        },
    }
    if not v.is_zero() and not nab.is_zero():
        report["obstruction"] = positivity_test(v, nab, st.n).as_dict()
    else:
        report["obstruction"] = None
    if d.is_positive():
        report["positive"] = _positive_section(d, v, nab)
    return report


def _positive_section(d: Diagram, v: LaurentPoly1, nab: LaurentPoly1) -> dict:
    st = d.stats()
    cls = classify(d)
    out: dict = {"classification": cls.as_dict(), "graph": graph_report(d)}
    if d.c == 0:
        return out
    pred_v1 = second_coeff_predicted(d)
    out["second_coeff_predicted"] = pred_v1
    out["second_coeff_agrees"] = pred_v1 == v.second_coeff
    out["conway_degree_agrees"] = (not nab.is_zero()) and Fraction(nab.max_deg) == 2 * Fraction(v.min_deg)
    if cls.classified:
        out["b_circle_bound"] = b_circle_bound(cls, st.n)
        out["b_circle_bound_holds"] = st.B <= out["b_circle_bound"]
    if cls.classified and cls.diagram_type in (1, 2):
        lead = predicted_lead_conway(cls)
        out["lead_conway_predicted"] = rational_json(lead)
        out["lead_conway_agrees"] = (not nab.is_zero()) and lead == nab.lead_coeff
        m_formula = burdening_number_formula(cls, st, v.min_deg)
        out["burdening_number_formula"] = m_formula
        out["burdening_number_agrees"] = m_formula == cls.m
    return out


# ---- three-crossing-loop families -----------------------------------------

def negative_crossing(d: Diagram) -> int:
    neg = [i for i, x in enumerate(d.crossings) if x.sign < 0]
    if len(neg) != 1:
        raise DiagramError(f"expected exactly one negative crossing, found {len(neg)}")
    return neg[0]


def loop_site(d: Diagram, arc: int | None = None) -> tuple[int, int, int, int]:
    """(crossing, arc, partner, face) where the next loop goes.

    ``arc`` is the under-strand arc leaving a negative crossing (default: the
    one at the diagram's only negative crossing); ``partner`` is the
    over-strand arc entering that crossing and ``face`` the region between
    them.  The partner curls into that region and ``arc`` threads the curl.
    """
    if arc is None:
        x = negative_crossing(d)
    else:
        ci, s = d.tail(arc)
        if s != 2 or d.crossings[ci].sign > 0:
            raise DiagramError(f"arc {arc} does not leave a negative crossing on its under-strand")
        x = ci
    cx = d.crossings[x]
    return x, cx.arcs[2], cx.arcs[1], d.face_of((x, 1))


def add_loop(d: Diagram, crossing: int) -> Diagram:
    """One more three-crossing loop next to negative crossing ``crossing``."""
    cx = d.crossings[crossing]
    if cx.sign > 0:
        raise DiagramError(f"crossing {crossing} is not negative")
    return insert_positive_loop(d, cx.arcs[2], partner=cx.arcs[1], face=d.face_of((crossing, 1)))


def family_diagram(base: Diagram, w: int, arc: int | None = None) -> Diagram:
    """``base`` with ``w`` three-crossing loops at the site given by ``arc``."""
    if w < 0:
        raise ValueError("w must be non-negative")
    x = loop_site(base, arc)[0]
    d = base
    for _ in range(w):
        d = add_loop(d, x)
    return d


TREFOIL_CONWAY = LaurentPoly1.parse("1 + z^2", "z")
TREFOIL_HOMFLY = LaurentPoly2.parse("2a^-2 - a^-4 + a^-2 z^2")
ONE_PLUS_Z2 = LaurentPoly2.parse("1 + z^2")


@dataclass
class FamilyRow:
    w: int
    c: int
    q: int
    min_v: Fraction
    max_v: Fraction
    second_coeff: int
    lead_conway: int
    b_adequate: bool
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def as_dict(self) -> dict:
        out = {k: rational_json(v) for k, v in asdict(self).items()}
        out["ok"] = self.ok
        return out


@dataclass
class FamilyReport:
    rows: list[FamilyRow]
    crossing: int

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)

    def failures(self) -> list[str]:
        return [f"w={r.w}: {name}" for r in self.rows for name, ok in r.checks.items() if not ok]

    def as_dict(self) -> dict:
        return {"schema": SCHEMA_VERSION, "crossing": self.crossing, "passed": self.passed,
                "rows": [r.as_dict() for r in self.rows], "failures": self.failures()}


def verify_family_claims(base: Diagram, arc: int | None = None, w_max: int = 3,
                         skein_limit: int | None = None, crosscheck_limit: int = 20) -> FamilyReport:
    """Recompute V(w) and C(w) for w = 0..w_max and check them against the base.

    Checks per row: ``c`` grows by 3w, min deg V by w, max deg V by 4w, the
    second Jones coefficient and the leading Conway coefficient stay put, and
    the skein recursions

    * ``C(w) = (1 + z^2) C(w-1) + z C(D00) (1 + z^2)^(w-1)``
    * ``a^2 P(w) = (1 + z^2) P(w-1) + (P(D0+) - a^-2 P(D0)) P(3_1)^(w-1)``

    hold, where D0+ switches and D00 smooths the negative crossing of the base
    and 3_1 is the positive trefoil.  Jones comes from HOMFLY; up to
    ``crosscheck_limit`` crossings the state sum is compared as well.
    """
    x = loop_site(base, arc)[0]
    limit = skein_limit if skein_limit is not None else base.c + 3 * w_max
    c_d00 = conway(smooth_crossing(base, x), limit)
    p_switch = homfly(switch_crossing(base, x), limit)
    a2 = LaurentPoly2.parse("a^2")
    am2 = LaurentPoly2.parse("a^-2")
    z = LaurentPoly1.parse("z", "z")
    rows: list[FamilyRow] = []
    d = base
    prev_c = prev_p = None
    for w in range(w_max + 1):
        if w:
            d = add_loop(d, x)
        p = homfly(d, limit)
        c = conway(d, limit)
        v = specialize(p, "jones")
        row = FamilyRow(w, d.c, d.q, Fraction(v.min_deg), Fraction(v.max_deg), v.second_coeff,
                        c.lead_coeff, adequacy(d)[1])
        if d.c <= crosscheck_limit:
            row.checks["jones_state_sum"] = jones(d, max(crosscheck_limit, d.c)) == v
        row.checks["conway_from_homfly"] = specialize(p, "conway") == c
        if w:
            r0 = rows[0]
            row.checks["crossings"] = d.c == base.c + 3 * w
            row.checks["min_deg"] = row.min_v == r0.min_v + w
            row.checks["max_deg"] = row.max_v == r0.max_v + 4 * w
            row.checks["second_coeff"] = row.second_coeff == r0.second_coeff
            row.checks["lead_conway"] = row.lead_conway == r0.lead_conway
            row.checks["conway_recursion"] = c == (
                TREFOIL_CONWAY * prev_c + z * c_d00 * TREFOIL_CONWAY ** (w - 1))
            row.checks["homfly_recursion"] = a2 * p == (
                ONE_PLUS_Z2 * prev_p + (p_switch - am2 * p_base) * TREFOIL_HOMFLY ** (w - 1))
        else:
            p_base = p
        rows.append(row)
        prev_c, prev_p = c, p
    return FamilyReport(rows, x)


__all__ = [
    "ObstructionReport", "positivity_test", "analyze", "verify_family_claims", "family_diagram",
    "loop_site", "add_loop", "negative_crossing", "FamilyReport", "FamilyRow", "SCHEMA_VERSION",
    "rational_json",
]
