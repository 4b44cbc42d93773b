"""Invariants and positivity obstructions for knot and link diagrams."""

from .diagram import Crossing, Diagram, DiagramError, DiagramStats, UNKNOT, parse_pd
from .dt import extract_dt, parse_dt, realize_dt
from .laurent import LaurentPoly1, LaurentPoly2
from .obstruction import analyze, positivity_test, verify_family_claims
from .skein import conway, homfly
from .stategraph import classify
from .statesum import jones, kauffman_bracket

__version__ = "0.1.0"

__all__ = [
    "Crossing", "Diagram", "DiagramError", "DiagramStats", "UNKNOT", "parse_pd",
    "extract_dt", "parse_dt", "realize_dt", "LaurentPoly1", "LaurentPoly2",
    "analyze", "positivity_test", "verify_family_claims", "conway", "homfly",
    "classify", "jones", "kauffman_bracket",
]
