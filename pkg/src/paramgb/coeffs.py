"""Exact arithmetic in the parameter ring and its fraction field.

Parameter polynomials (``ParamPoly``) are sympy ``PolyElement`` objects over
QQ in a ring whose monomial order is fixed to grevlex.  Coefficients of the
main polynomial ring are ``ParamRational`` values, or plain ``Fraction`` in
parameter-free mode (no parameters declared).

Zero-testing is always done modulo the space ideal: every numerator and
denominator is kept in normal form with respect to its reduced Groebner
basis, so a stored value is zero exactly when its numerator is.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, ring as sympy_ring

from .errors import DivisionByZeroOnSpace, InconsistentSpace, InvalidArgument, DenominatorVanishes

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

ParamPoly = PolyElement


def qq_to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def check_symbols(names: Sequence[str], what: str = "symbol") -> tuple[str, ...]:
    names = tuple(names)
    for name in names:
        if not isinstance(name, str) or not _IDENT.match(name):
            raise InvalidArgument(f"invalid {what} name {name!r}")
    if len(set(names)) != len(names):
        raise InvalidArgument(f"duplicate {what} names in {names}")
    return names


def eval_param_poly(p: ParamPoly, point: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for exps, c in p.terms():
        t = qq_to_fraction(c)
        for v, e in zip(point, exps):
            if e:
                t *= v ** e
        total += t
    return total


class SpaceIdeal:
    """Defining equations of the parameter space, with a reduced basis.

    The basis is computed by the package's own Buchberger engine run in
    parameter-free mode on the parameters as variables (grevlex).
    """

    def __init__(self, ring, generators: Iterable[ParamPoly] = ()):
        self.ring = ring
        self.generators = [g for g in generators if g]
        self.basis = _classical_basis(ring, self.generators) if self.generators else []
        if any(b.is_ground for b in self.basis):
            raise InconsistentSpace("space equations generate the unit ideal; the space is empty")

    @property
    def trivial(self) -> bool:
        return not self.basis

    def reduce(self, p: ParamPoly) -> ParamPoly:
        if not self.basis or p.is_ground:
            return p
        return p.rem(self.basis)

    def contains(self, p: ParamPoly) -> bool:
        return not self.reduce(p)


def reduce_mod_space(p: ParamPoly, sp: SpaceIdeal) -> ParamPoly:
    """Normal form of ``p`` modulo the space ideal; zero iff p vanishes on V(space)."""
    return sp.reduce(p)


def _classical_basis(ring, generators):
    # local imports: the classical engine itself depends on this module
    from .groebner import groebner_basis
    from .polyring import PolyRing

    names = [str(g) for g in ring.gens]
    prings = PolyRing(names, "grevlex", ParamField(()))
    polys = [prings.from_dict({e: qq_to_fraction(c) for e, c in g.terms()}) for g in generators]
    sys = groebner_basis(polys)
    return [ring.from_dict({e: QQ(c.numerator, c.denominator) for e, c in g.terms.items()})
            for g in sys.basis]


class ParamField:
    """Coefficient field R(S): fractions of parameter polynomials modulo the space.

    With no parameters, coefficients are ``Fraction`` and the class is only a
    thin conversion layer.
    """

    def __init__(self, params: Sequence[str] = (), space: Iterable = ()):
        self.params = check_symbols(params, "parameter")
        self.m = len(self.params)
        if self.m:
            self.ring = sympy_ring([Symbol(p) for p in self.params], QQ, grevlex)[0]
        else:
            self.ring = None
        polys = []
        for g in space:
            if isinstance(g, str):
                from .parser import parse_param_poly
                g = parse_param_poly(g, self.params, _ring=self.ring)
            polys.append(g)
        if polys and not self.m:
            if any(polys):
                raise InconsistentSpace("nonzero constant space equation without parameters")
            polys = []
        self.space = SpaceIdeal(self.ring, polys)
        self.zero = self.convert(0)
        self.one = self.convert(1)

    def __repr__(self):
        return f"ParamField(params={list(self.params)}, space={len(self.space.generators)} eqs)"

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, ParamField):
            return NotImplemented
        return self.params == other.params and self.space.basis == other.space.basis

    def __hash__(self):
        return hash(self.params)

    # construction

    def convert(self, x):
        if isinstance(x, ParamRational):
            if x.field is not self and x.field != self:
                raise InvalidArgument("coefficient from a different parameter field")
            return x
        if isinstance(x, PolyElement):
            return self.make(x, self.ring.one)
        x = Fraction(x)
        if not self.m:
            return x
        return ParamRational(self, self.ring(QQ(x.numerator, x.denominator)), self.ring.one)

    def param(self, name: str) -> ParamRational:
        i = self.params.index(name)
        return self.make(self.ring.gens[i], self.ring.one)

    def make(self, num: ParamPoly, den: ParamPoly) -> ParamRational:
        """Canonical fraction num/den: both reduced mod space, gcd cancelled, den monic."""
        sp = self.space
        num = sp.reduce(num)
        den = sp.reduce(den)
        if not den:
            raise DivisionByZeroOnSpace("denominator vanishes identically on the space")
        ring = self.ring
        if not num:
            return ParamRational(self, ring.zero, ring.one)
        if not den.is_ground:
            for _ in range(16):
                _, num, den = num.cofactors(den)
                if sp.trivial:
                    break
                n2, d2 = sp.reduce(num), sp.reduce(den)
                if not d2:
                    raise DivisionByZeroOnSpace("denominator vanishes identically on the space")
                if n2 == num and d2 == den:
                    break
                num, den = n2, d2
        lc = den.LC
        if lc != 1:
            num = num.quo_ground(lc)
            den = den.quo_ground(lc)
        return ParamRational(self, num, den)

    # queries

    def is_zero(self, c) -> bool:
        return not c

    def locus_parts(self, c) -> list:
        """Non-constant parameter polynomials whose vanishing makes ``c`` non-invertible."""
        if isinstance(c, ParamRational):
            return [p for p in (c.num, c.den) if not p.is_ground]
        return []

    def denominators(self, c) -> list:
        if isinstance(c, ParamRational) and not c.den.is_ground:
            return [c.den]
        return []

    def evaluate(self, c, point: Sequence[Fraction]) -> Fraction:
        if not isinstance(c, ParamRational):
            return Fraction(c)
        d = eval_param_poly(c.den, point)
        if d == 0:
            raise DenominatorVanishes(f"denominator {c.den} vanishes at {tuple(map(str, point))}")
        return eval_param_poly(c.num, point) / d

    def on_space(self, point: Sequence[Fraction]) -> bool:
        return all(eval_param_poly(g, point) == 0 for g in self.space.generators)


class ParamRational:
    """Element num/den of R(S).  Build through ``ParamField.make``."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: ParamField, num: ParamPoly, den: ParamPoly):
        self.field = field
        self.num = num
        self.den = den

    def _coerce(self, other):
        if isinstance(other, ParamRational):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.convert(other)
        return None

    def __bool__(self):
        return bool(self.num)

    def is_one(self) -> bool:
        return self.num == self.den

    def is_ground(self) -> bool:
        return self.num.is_ground and self.den.is_ground

    def __neg__(self):
        return ParamRational(self.field, -self.num, self.den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            num = self.num + other.num
            if self.den.is_ground:
                if not num:
                    return self.field.zero
                return ParamRational(self.field, num, self.den)
            return self.field.make(num, self.den)
        return self.field.make(self.num * other.den + other.num * self.den, self.den * other.den)

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
        if not self.num or not other.num:
            return self.field.zero
        if self.den.is_ground and other.den.is_ground:
            num = self.field.space.reduce(self.num * other.num)
            if not num:
                return self.field.zero
            return ParamRational(self.field, num, self.field.ring.one)
        return self.field.make(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise DivisionByZeroOnSpace("inverting a coefficient that is zero on the space")
        return self.field.make(self.den, self.num)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        return self.field.make(base.num ** abs(k), base.den ** abs(k))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.num:
            raise DivisionByZeroOnSpace("division by a coefficient that is zero on the space")
        return self.field.make(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.field.space.trivial:
            return self.num == other.num and self.den == other.den
        return not self.field.space.reduce(self.num * other.den - other.num * self.den)

    __hash__ = None

    def __str__(self):
        from .printing import render_coeff
        return render_coeff(self)

    def __repr__(self):
        return f"ParamRational({self})"
