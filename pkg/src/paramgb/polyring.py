"""Sparse polynomials in the main variables with coefficients in R(S)."""
from __future__ import annotations

from collections import namedtuple
from typing import Iterable, Sequence

from .coeffs import ParamField, check_symbols
from .errors import DegreeOverflow, InvalidArgument, LengthMismatch, ZeroPolynomial

MAX_DEGREE = 2 ** 31
ORDERS = ("lex", "grlex", "grevlex")

Monomial = tuple  # exponent vector


def _lex_key(e):
    return e


def _grlex_key(e):
    return (sum(e), e)


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


_KEYS = {"lex": _lex_key, "grlex": _grlex_key, "grevlex": _grevlex_key}

# negated keys: the largest monomial gets the smallest key (for heapq)
_NEG_KEYS = {
    "lex": lambda e: tuple(-x for x in e),
    "grlex": lambda e: (-sum(e), tuple(-x for x in e)),
    "grevlex": lambda e: (-sum(e), tuple(reversed(e))),
}


class MonomialOrder:
    """lex, grlex or grevlex with x1 > x2 > ... > xn."""

    __slots__ = ("kind", "key", "neg_key")

    def __init__(self, kind: str = "lex"):
        if isinstance(kind, MonomialOrder):
            kind = kind.kind
        if kind not in _KEYS:
            raise InvalidArgument(f"unknown monomial order {kind!r}; expected one of {ORDERS}")
        self.kind = kind
        self.key = _KEYS[kind]
        self.neg_key = _NEG_KEYS[kind]

    @property
    def graded(self) -> bool:
        return self.kind != "lex"

    def __eq__(self, other):
        if isinstance(other, str):
            return self.kind == other
        return isinstance(other, MonomialOrder) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"

    def __str__(self):
        return self.kind


def compare(a: Monomial, b: Monomial, order: MonomialOrder | str = "lex") -> int:
    """Return -1, 0 or 1 as ``a`` is less than, equal to or greater than ``b``."""
    if len(a) != len(b):
        raise LengthMismatch(f"exponent vectors of lengths {len(a)} and {len(b)}")
    key = MonomialOrder(order).key
    ka, kb = key(tuple(a)), key(tuple(b))
    return (ka > kb) - (ka < kb)


def monomial_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


class PolyRing:
    """Ring context: main variables, monomial order, coefficient field."""

    def __init__(self, vars: Sequence[str], order="lex", field: ParamField | None = None):
        self.vars = check_symbols(vars, "variable")
        self.field = field if field is not None else ParamField(())
        clash = set(self.vars) & set(self.field.params)
        if clash:
            raise InvalidArgument(f"symbols declared both as parameter and variable: {sorted(clash)}")
        self.order = MonomialOrder(order)
        self.key = self.order.key
        self.ngens = len(self.vars)
        self.zero_exp = (0,) * self.ngens

    def __repr__(self):
        return f"PolyRing({list(self.vars)}, {self.order.kind!r}, params={list(self.field.params)})"

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, PolyRing) and self.vars == other.vars
                and self.order == other.order and self.field == other.field)

    def __hash__(self):
        return hash((self.vars, self.order.kind))

    @property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @property
    def one(self) -> "Poly":
        return self.constant(1)

    @property
    def gens(self) -> list["Poly"]:
        return [self.gen(i) for i in range(self.ngens)]

    def gen(self, i: int) -> "Poly":
        e = [0] * self.ngens
        e[i] = 1
        return Poly(self, {tuple(e): self.field.one})

    def var(self, name: str) -> "Poly":
        return self.gen(self.vars.index(name))

    def constant(self, c) -> "Poly":
        c = self.field.convert(c)
        return Poly(self, {self.zero_exp: c} if c else {})

    def param(self, name: str) -> "Poly":
        return self.constant(self.field.param(name))

    def term(self, exp, coeff=1) -> "Poly":
        coeff = self.field.convert(coeff)
        if len(exp) != self.ngens:
            raise LengthMismatch(f"monomial of length {len(exp)} in a ring with {self.ngens} variables")
        return Poly(self, {tuple(exp): coeff} if coeff else {})

    def from_dict(self, terms: dict) -> "Poly":
        conv = self.field.convert
        out = {}
        for e, c in terms.items():
            e = tuple(e)
            if len(e) != self.ngens:
                raise LengthMismatch(f"monomial of length {len(e)} in a ring with {self.ngens} variables")
            if any(x < 0 for x in e):
                raise InvalidArgument("negative exponent")
            c = conv(c)
            if c:
                out[e] = c
        return Poly(self, out)

    # derived rings

    def with_order(self, order) -> "PolyRing":
        if MonomialOrder(order) == self.order:
            return self
        return PolyRing(self.vars, order, self.field)

    def fresh_name(self, base: str) -> str:
        taken = set(self.vars) | set(self.field.params)
        name, i = base, 0
        while name in taken:
            i += 1
            name = f"{base}{i}"
        return name

    def extend(self, name: str, first: bool = True, order=None) -> "PolyRing":
        vars = (name,) + self.vars if first else self.vars + (name,)
        return PolyRing(vars, order or self.order, self.field)

    def embed(self, p: "Poly", first: bool = True) -> "Poly":
        """Map ``p`` from the ring with one variable fewer into this ring."""
        if first:
            return Poly(self, {(0,) + e: c for e, c in p.terms.items()})
        return Poly(self, {e + (0,): c for e, c in p.terms.items()})

    def convert(self, p: "Poly") -> "Poly":
        """Re-home a polynomial from a ring with the same variables and field."""
        if p.ring is self:
            return p
        if p.ring.vars != self.vars:
            raise InvalidArgument("cannot convert between rings with different variables")
        return Poly(self, dict(p.terms))


LeadingData = namedtuple("LeadingData", "LT LC LM multideg")


class Poly:
    """Immutable sparse polynomial: ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._lm = None

    # leading data

    @property
    def LM(self) -> Monomial:
        if self._lm is None:
            if not self.terms:
                raise ZeroPolynomial("the zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=self.ring.key)
        return self._lm

    @property
    def LC(self):
        return self.terms[self.LM]

    @property
    def LT(self) -> tuple:
        lm = self.LM
        return lm, self.terms[lm]

    multideg = LM

    def sorted_terms(self) -> list[tuple]:
        """Terms in strictly descending order."""
        return sorted(self.terms.items(), key=lambda t: self.ring.key(t[0]), reverse=True)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.zero_exp in self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def support_vars(self) -> set[int]:
        return {i for e in self.terms for i, x in enumerate(e) if x}

    def coefficients(self):
        return list(self.terms.values())

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise InvalidArgument("polynomials from different rings")
            return other
        try:
            return self.ring.constant(other)
        except (TypeError, ValueError, InvalidArgument):
            return None

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.terms.keys() != other.terms.keys():
            return False
        return all(c == other.terms[e] for e, c in self.terms.items())

    __hash__ = None

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            if e in terms:
                s = terms[e] + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
            else:
                terms[e] = c
        return Poly(self.ring, terms)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return self.ring.zero
        if _max_exp(self) + _max_exp(other) >= MAX_DEGREE:
            raise DegreeOverflow("exponent exceeds 2^31")
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = c1 * c2
                if e in terms:
                    c = terms[e] + c
                    if c:
                        terms[e] = c
                    else:
                        del terms[e]
                elif c:
                    terms[e] = c
        return Poly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise InvalidArgument("exponent must be a nonnegative integer")
        if n and _max_exp(self) * n >= MAX_DEGREE:
            raise DegreeOverflow("exponent exceeds 2^31")
        result, base = self.ring.one, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> "Poly":
        c = self.ring.field.convert(c)
        if not c:
            return self.ring.zero
        terms = {}
        for e, a in self.terms.items():
            b = a * c
            if b:
                terms[e] = b
        return Poly(self.ring, terms)

    def mul_term(self, exp: Monomial, c) -> "Poly":
        if not c:
            return self.ring.zero
        terms = {}
        for e, a in self.terms.items():
            b = a * c
            if b:
                terms[tuple(x + y for x, y in zip(e, exp))] = b
        return Poly(self.ring, terms)

    def monic(self) -> "Poly":
        return self.scale(1 / self.LC)

    def __str__(self):
        from .printing import render_poly
        return render_poly(self)

    def __repr__(self):
        return f"Poly({self})"


def _max_exp(p: Poly) -> int:
    return max((max(e, default=0) for e in p.terms), default=0)


def leading_data(h: Poly) -> LeadingData:
    if not h:
        raise ZeroPolynomial("leading data of the zero polynomial")
    lm, lc = h.LT
    return LeadingData(LT=(lm, lc), LC=lc, LM=lm, multideg=lm)


def add(a: Poly, b) -> Poly:
    return a + b


def sub(a: Poly, b) -> Poly:
    return a - b


def mul(a: Poly, b) -> Poly:
    return a * b


def scale(a: Poly, c) -> Poly:
    return a.scale(c)


def sum_polys(ring: PolyRing, polys: Iterable[Poly]) -> Poly:
    total = ring.zero
    for p in polys:
        total = total + p
    return total
