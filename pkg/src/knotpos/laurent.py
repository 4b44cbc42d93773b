"""Exact sparse Laurent polynomials with integer coefficients.

One-variable polynomials store exponents as integers counting quarter-units of
their variable, so ``t^(1/2)`` is stored under key ``2`` and ``z^3`` under key
``12``.  Two-variable polynomials (HOMFLY, in ``a`` and ``z``) use plain
integer exponents.  All values are immutable and hashable.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

# exponent granularity in quarter-units
QUARTER, HALF, WHOLE = 1, 2, 4

DEFAULT_GRID = {"A": WHOLE, "t": HALF, "z": WHOLE}


class GridError(ValueError):
    """Polynomials on different variables or grids were combined."""


class ZeroPolynomialError(ValueError):
    """A degree was requested from the zero polynomial."""


def _clean(terms: Mapping) -> dict:
    return {e: c for e, c in terms.items() if c != 0}


class LaurentPoly1:
    __slots__ = ("_terms", "var", "grid", "_hash")

    def __init__(self, terms: Mapping[int, int] | None = None, var: str = "t", grid: int | None = None):
        terms = _clean(terms or {})
        grid = DEFAULT_GRID.get(var, QUARTER) if grid is None else grid
        for e, c in terms.items():
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError("exponents and coefficients must be int")
            if e % grid:
                raise GridError(f"exponent {Fraction(e, 4)} is off the 1/{4 // grid} grid of {var}")
        self._terms = dict(sorted(terms.items()))
        self.var = var
        self.grid = grid
        self._hash = None

    # construction helpers
    @classmethod
    def monomial(cls, exponent, coeff: int = 1, var: str = "t", grid: int | None = None) -> "LaurentPoly1":
        """``coeff * var^exponent`` with ``exponent`` given in variable units (int or Fraction)."""
        q = Fraction(exponent) * 4
        if q.denominator != 1:
            raise GridError(f"exponent {exponent} is not a multiple of 1/4")
        return cls({int(q): coeff}, var, grid)

    @classmethod
    def one(cls, var: str = "t") -> "LaurentPoly1":
        return cls({0: 1}, var)

    @classmethod
    def zero(cls, var: str = "t") -> "LaurentPoly1":
        return cls({}, var)

    @classmethod
    def from_coeffs(cls, coeffs: Mapping, var: str = "t") -> "LaurentPoly1":
        """Build from ``{exponent_in_variable_units: coeff}``."""
        out = {}
        for e, c in coeffs.items():
            q = Fraction(e) * 4
            if q.denominator != 1:
                raise GridError(f"exponent {e} is not a multiple of 1/4")
            out[int(q)] = out.get(int(q), 0) + c
        return cls(out, var)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exponent) -> int:
        """Coefficient at ``exponent`` (variable units)."""
        q = Fraction(exponent) * 4
        if q.denominator != 1:
            return 0
        return self._terms.get(int(q), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "LaurentPoly1") -> None:
        if not isinstance(other, LaurentPoly1):
            raise TypeError(f"cannot combine LaurentPoly1 with {type(other).__name__}")
        if other.var != self.var or other.grid != self.grid:
            raise GridError(f"variable/grid mismatch: {self.var}/{self.grid} vs {other.var}/{other.grid}")

    def _coerce(self, other):
        if isinstance(other, int):
            return LaurentPoly1({0: other}, self.var, self.grid)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly1(out, self.var, self.grid)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly1({e: -c for e, c in self._terms.items()}, self.var, self.grid)

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        self._check(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly1(out, self.var, self.grid)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient has no inverse")
            return LaurentPoly1({-e * -n: c ** -n}, self.var, self.grid)
        result = LaurentPoly1.one(self.var)
        result = LaurentPoly1(result._terms, self.var, self.grid)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exponent) -> "LaurentPoly1":
        """Multiply by ``var^exponent``."""
        q = Fraction(exponent) * 4
        if q.denominator != 1:
            raise GridError("shift must be a multiple of 1/4")
        q = int(q)
        return LaurentPoly1({e + q: c for e, c in self._terms.items()}, self.var, self.grid)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly1({0: other}, self.var, self.grid)
        if not isinstance(other, LaurentPoly1):
            return NotImplemented
        return self.var == other.var and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var, tuple(self._terms.items())))
        return self._hash

    # degree queries
    @property
    def min_deg(self) -> Fraction:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return Fraction(next(iter(self._terms)), 4)

    @property
    def max_deg(self) -> Fraction:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return Fraction(next(reversed(self._terms)), 4)

    @property
    def lead_coeff(self) -> int:
        return self._terms[int(self.max_deg * 4)]

    @property
    def low_coeff(self) -> int:
        return self._terms[int(self.min_deg * 4)]

    @property
    def second_coeff(self) -> int:
        """Coefficient one variable-unit above the minimal degree (zero if absent)."""
        return self.coeff(self.min_deg + 1)

    def degree_info(self) -> "DegreeInfo":
        return DegreeInfo(self.min_deg, self.max_deg, self.lead_coeff, self.second_coeff, self.low_coeff)

    def substitute_power(self, factor: Fraction, var: str, grid: int | None = None) -> "LaurentPoly1":
        """Monomial substitution ``self.var -> var^factor``."""
        out = {}
        for e, c in self._terms.items():
            q = Fraction(e) * factor
            if q.denominator != 1:
                raise GridError(f"substitution leaves the quarter grid at exponent {Fraction(e, 4)}")
            out[int(q)] = out.get(int(q), 0) + c
        return LaurentPoly1(out, var, grid)

    def all_coefficients_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # serialization
    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for i, (e, c) in enumerate(self._terms.items()):
            exp = Fraction(e, 4)
            body = f"{abs(c)}*{self.var}^({exp})"
            if i == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def to_json(self) -> list[list[int]]:
        out = []
        for e, c in self._terms.items():
            f = Fraction(e, 4)
            out.append([f.numerator, f.denominator, c])
        return out

    @classmethod
    def from_json(cls, data: Iterable, var: str = "t") -> "LaurentPoly1":
        out: dict[int, int] = {}
        for n, d, c in data:
            q = Fraction(n, d) * 4
            if q.denominator != 1:
                raise GridError(f"exponent {n}/{d} is not a multiple of 1/4")
            out[int(q)] = out.get(int(q), 0) + int(c)
        return cls(out, var)

    @classmethod
    def parse(cls, text: str, var: str | None = None) -> "LaurentPoly1":
        """Parse the canonical text form (and the looser ``t^3 - 2t^4 + 1`` style)."""
        s = re.sub(r"\s+", "", text).replace("−", "-").replace("{", "(").replace("}", ")")
        if s in ("", "0"):
            return cls({}, var or "t")
        if s[0] not in "+-":
            s = "+" + s
        chunks = _split_signed(s)
        out: dict[int, int] = {}
        found_var = var
        for chunk in chunks:
            m = re.fullmatch(r"([+-])(\d+)?\*?(?:([A-Za-z])(?:\^\(?([+-]?\d+(?:/\d+)?)\)?)?)?", chunk)
            if not m or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"cannot parse term {chunk!r} in {text!r}")
            sign, num, v, exp = m.groups()
            c = int(num) if num else 1
            if sign == "-":
                c = -c
            if v:
                if found_var is None:
                    found_var = v
                elif v != found_var:
                    raise GridError(f"mixed variables {found_var!r} and {v!r}")
                e = Fraction(exp) if exp else Fraction(1)
            else:
                e = Fraction(0)
            q = e * 4
            if q.denominator != 1:
                raise GridError(f"exponent {e} is not a multiple of 1/4")
            out[int(q)] = out.get(int(q), 0) + c
        return cls(out, found_var or "t")

    def __repr__(self):
        return f"LaurentPoly1({self.to_text()!r})"

    __str__ = to_text


class DegreeInfo:
    __slots__ = ("min_deg", "max_deg", "lead_coeff", "second_coeff", "low_coeff")

    def __init__(self, min_deg, max_deg, lead_coeff, second_coeff, low_coeff):
        self.min_deg = min_deg
        self.max_deg = max_deg
        self.lead_coeff = lead_coeff
        self.second_coeff = second_coeff
        self.low_coeff = low_coeff

    def __iter__(self):
        return iter((self.min_deg, self.max_deg, self.lead_coeff, self.second_coeff))

    def __repr__(self):
        return (f"DegreeInfo(min_deg={self.min_deg}, max_deg={self.max_deg}, "
                f"lead_coeff={self.lead_coeff}, second_coeff={self.second_coeff})")


def degree_info(p: LaurentPoly1) -> DegreeInfo:
    return p.degree_info()


class LaurentPoly2:
    """Laurent polynomial in ``a`` (the HOMFLY framing variable) and ``z``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = dict(sorted(_clean(terms or {}).items()))
        self._hash = None

    @classmethod
    def one(cls):
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, a: int, z: int, coeff: int = 1):
        return cls({(a, z): coeff})

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self):
        return not self._terms

    def _coerce(self, other):
        if isinstance(other, int):
            return LaurentPoly2({(0, 0): other})
        if not isinstance(other, LaurentPoly2):
            raise GridError(f"cannot combine LaurentPoly2 with {type(other).__name__}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[tuple[int, int], int] = {}
        for (a1, z1), c1 in self._terms.items():
            for (a2, z2), c2 in other._terms.items():
                k = (a1 + a2, z1 + z2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = LaurentPoly2.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, a: int = 0, z: int = 0) -> "LaurentPoly2":
        return LaurentPoly2({(ea + a, ez + z): c for (ea, ez), c in self._terms.items()})

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly2({(0, 0): other})
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def to_text(self) -> str:
        """Terms ordered by ascending z then ascending a exponent."""
        if not self._terms:
            return "0"
        parts = []
        for i, ((a, z), c) in enumerate(sorted(self._terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))):
            body = f"{abs(c)}*a^({a})*z^({z})"
            if i == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append((" + " if c > 0 else " - ") + body)
        return "".join(parts)

    def to_json(self) -> list[list[int]]:
        return [[a, z, c] for (a, z), c in self._terms.items()]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly2":
        out: dict[tuple[int, int], int] = {}
        for a, z, c in data:
            out[(a, z)] = out.get((a, z), 0) + c
        return cls(out)

    @classmethod
    def parse(cls, text: str) -> "LaurentPoly2":
        """Parse sums of terms like ``2*a^(-6)*z^(4)``, ``a^{-8} z^6`` or ``-3 a^-14``."""
        s = text.replace("α", "a").replace("−", "-").replace("{", "(").replace("}", ")")
        s = re.sub(r"\s+", "", s)
        if s in ("", "0"):
            return cls({})
        if s[0] not in "+-":
            s = "+" + s
        out: dict[tuple[int, int], int] = {}
        for chunk in _split_signed(s):
            m = re.fullmatch(r"([+-])(\d+)?\*?((?:[az](?:\^\(?-?\d+\)?)?\*?)*)", chunk)
            if not m or (m.group(2) is None and not m.group(3)):
                raise ValueError(f"cannot parse term {chunk!r}")
            sign, num, mono = m.groups()
            c = int(num) if num else 1
            if sign == "-":
                c = -c
            ea = ez = 0
            for v, e in re.findall(r"([az])(?:\^\(?(-?\d+)\)?)?", mono):
                if v == "a":
                    ea += int(e) if e else 1
                else:
                    ez += int(e) if e else 1
            out[(ea, ez)] = out.get((ea, ez), 0) + c
        return cls(out)

    def __repr__(self):
        return f"LaurentPoly2({self.to_text()!r})"

    __str__ = to_text


def _split_signed(s: str) -> list[str]:
    """Split at top-level +/- signs that are not exponent signs."""
    out, cur = [], ""
    for ch in s:
        if ch in "+-" and cur and not cur.endswith("^") and not cur.endswith("^("):
            out.append(cur)
            cur = ch
        else:
            cur += ch
    if cur:
        out.append(cur)
    return out


def poly_add_mul(a, b, op: str):
    """Functional entry point: ``op`` in {'add', 'mul', 'neg'} (``neg`` ignores ``b``)."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown op {op!r}")


def _binomial_powers(max_power: int) -> list[LaurentPoly1]:
    base = LaurentPoly1({2: 1, -2: -1}, "t")
    out = [LaurentPoly1.one("t")]
    for _ in range(max_power):
        out.append(out[-1] * base)
    return out


def _divide_exact(num: LaurentPoly1, den: LaurentPoly1) -> LaurentPoly1:
    """Quotient of an exact division by a divisor with unit leading coefficient."""
    rest = dict(num.terms)
    dtop = max(den.terms)
    dlead = den.terms[dtop]
    floor = min(rest, default=0) - min(den.terms)
    quot: dict[int, int] = {}
    while rest:
        top = max(rest)
        if top - dtop < floor or rest[top] % dlead:
            raise ValueError("polynomial division is not exact")
        e, c = top - dtop, rest[top] // dlead
        quot[e] = c
        for k, v in den.terms.items():
            nv = rest.get(e + k, 0) - c * v
            if nv:
                rest[e + k] = nv
            else:
                rest.pop(e + k, None)
    return LaurentPoly1(quot, num.var, num.grid)


def specialize(p: LaurentPoly2, target: str) -> LaurentPoly1:
    """HOMFLY to Conway (``a -> 1``) or to Jones (``a -> t^-1``, ``z -> t^(1/2) - t^(-1/2)``)."""
    if target == "conway":
        out: dict[int, int] = {}
        for (a, z), c in p.items():
            out[4 * z] = out.get(4 * z, 0) + c
        return LaurentPoly1(out, "z")
    if target == "jones":
        # split links carry z^-k; clear the denominator, then divide it back out exactly
        zmin = min((z for (_, z) in p.terms), default=0)
        lift = max(0, -zmin)
        zmax = max((z for (_, z) in p.terms), default=0) + lift
        pw = _binomial_powers(max(zmax, 1))
        total = LaurentPoly1.zero("t")
        for (a, z), c in p.items():
            total = total + pw[z + lift].shift(-a) * c
        for _ in range(lift):
            total = _divide_exact(total, pw[1])
        return total
    raise ValueError(f"unknown specialization target {target!r}")
