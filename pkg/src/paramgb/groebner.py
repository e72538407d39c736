"""Buchberger completion over R(S) with exceptional-locus bookkeeping.

The engine works generically: every parameter polynomial that has to be
inverted (leading coefficients, coefficient denominators) is recorded in an
``ExceptionalLocus``.  Off that finite union of hypersurfaces the computed
basis specializes to a Groebner basis of every fibre.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from heapq import heappop, heappush
from math import gcd, lcm
from typing import Iterable, Sequence

from sympy.polys.domains import QQ

from .coeffs import ParamField, eval_param_poly
from .division import remainder, s_polynomial
from .errors import BudgetExceeded, InvalidArgument
from .polyring import Poly, PolyRing, monomial_divides, monomial_lcm

DEFAULT_BUDGET = 20000


def _key(p):
    return tuple(sorted(p.terms()))


def _primitive(p):
    """Integer content-free associate with positive leading coefficient."""
    terms = list(p.terms())
    d = lcm(*(int(c.denominator) for _, c in terms))
    n = gcd(*(int(c.numerator) * (d // int(c.denominator)) for _, c in terms))
    p = p * QQ(d, n)
    if p.LC < 0:
        p = -p
    return p


def _hypersurfaces(fld: ParamField, p) -> list:
    cache = fld.__dict__.setdefault("_locus_cache", {})
    k = _key(p)
    if k in cache:
        return cache[k]
    sp = fld.space
    q = sp.reduce(p)
    out = []
    if q and not q.is_ground:
        _, factors = q.factor_list()
        parts = []
        for f, _ in factors:
            r = sp.reduce(f)
            if not r:
                # a factor vanishing on a space component: keep q whole
                parts = [q]
                break
            if not r.is_ground:
                parts.append(r)
        out = [_primitive(r) for r in parts]
    cache[k] = out
    return out


class ExceptionalLocus:
    """Finite union of parameter hypersurfaces V(p) where results may fail.

    Members are reduced modulo the space ideal, split into irreducible
    factors over QQ, made primitive with positive leading coefficient, and
    deduplicated.  Constants never appear.
    """

    def __init__(self, fld: ParamField, polys: Iterable = ()):
        self.field = fld
        self._members = {}
        self._extend(polys)

    def _extend(self, polys):
        seen = set()
        for p in polys:
            if p.is_ground:
                continue
            k = _key(p)
            if k in seen:
                continue
            seen.add(k)
            for h in _hypersurfaces(self.field, p):
                self._members.setdefault(_key(h), h)

    def union(self, other) -> "ExceptionalLocus":
        new = ExceptionalLocus(self.field)
        new._members = dict(self._members)
        if isinstance(other, ExceptionalLocus):
            new._members.update(other._members)
        else:
            new._extend(other)
        return new

    __or__ = union

    @property
    def hypersurfaces(self) -> list:
        from .printing import render_param_poly
        return sorted(self._members.values(), key=render_param_poly)

    def __iter__(self):
        return iter(self.hypersurfaces)

    def __len__(self):
        return len(self._members)

    def __bool__(self):
        return bool(self._members)

    def __contains__(self, p) -> bool:
        """True when V(p) is covered by members, i.e. every factor of p is a member."""
        if p.is_ground:
            return True
        return all(_key(h) in self._members for h in _hypersurfaces(self.field, p))

    def __eq__(self, other):
        if not isinstance(other, ExceptionalLocus):
            return NotImplemented
        return self._members.keys() == other._members.keys()

    def vanishes_at(self, point) -> bool:
        return any(eval_param_poly(h, point) == 0 for h in self._members.values())

    def strings(self) -> list[str]:
        from .printing import render_param_poly
        return sorted(render_param_poly(h) for h in self._members.values())

    def __repr__(self):
        return f"ExceptionalLocus({self.strings()})"


@dataclass
class GroebnerSystem:
    basis: list
    locus: ExceptionalLocus
    ring: PolyRing
    reduced: bool = False
    stats: dict = field(default_factory=dict)
    generators: list | None = None  # the input the basis was completed from

    @property
    def order(self):
        return self.ring.order

    @property
    def space(self):
        return self.ring.field.space

    def is_unit(self) -> bool:
        return any(g and g.is_constant() for g in self.basis)

    def with_locus(self, extra) -> "GroebnerSystem":
        return replace(self, locus=self.locus | extra)


def _coefficient_parts(fld, g: Poly) -> list:
    parts = fld.locus_parts(g.LC)
    for c in g.terms.values():
        parts.extend(fld.denominators(c))
    return parts


def _coprime(a, b) -> bool:
    return all(not x or not y for x, y in zip(a, b))


def buchbergerable(G: Sequence[Poly], budget: int | None = None,
                   ring: PolyRing | None = None) -> tuple[bool, GroebnerSystem]:
    """Complete ``G`` by adjoining reduced S-polynomials until nothing changes.

    Returns the verdict together with the raw (unreduced) system.  Since all
    coefficients are reduced modulo the space ideal, a nonzero remainder always
    has a leading coefficient that is nonzero on the space, so the verdict is
    always True; the caveat lives in the returned locus.
    """
    basis = [g for g in G if g]
    if ring is None:
        if not G:
            raise InvalidArgument("buchbergerable needs at least one polynomial or an explicit ring")
        ring = G[0].ring
    fld = ring.field
    budget = DEFAULT_BUDGET if budget is None else budget
    raw = []
    for g in basis:
        raw.extend(_coefficient_parts(fld, g))
    key = ring.key
    pairs = []

    def add_pairs(j):
        lm = basis[j].LM
        for i in range(j):
            m = monomial_lcm(basis[i].LM, lm)
            heappush(pairs, (key(m), i, j))

    for j in range(len(basis)):
        add_pairs(j)

    verdict = True
    unit = any(g.is_constant() for g in basis)
    processed = reductions = 0
    while pairs and not unit:
        _, i, j = heappop(pairs)
        p, q = basis[i], basis[j]
        if _coprime(p.LM, q.LM):
            continue
        processed += 1
        if processed > budget:
            raise BudgetExceeded(f"Buchberger pair budget of {budget} exhausted")
        s, contrib = s_polynomial(p, q)
        raw.extend(contrib)
        if not s:
            continue
        r, contrib = remainder(s, basis)
        raw.extend(contrib)
        reductions += 1
        if not r:
            continue
        if not r.LC:
            # unreachable while coefficients stay reduced mod the space ideal
            verdict = False
            break
        raw.extend(_coefficient_parts(fld, r))
        basis.append(r)
        add_pairs(len(basis) - 1)
        unit = r.is_constant()

    sys = GroebnerSystem(basis, ExceptionalLocus(fld, raw), ring, reduced=False,
                         stats={"pairs": processed, "reductions": reductions},
                         generators=[g for g in G if g])
    return verdict, sys


def is_groebner(G: Sequence[Poly]) -> tuple[bool, list]:
    """Buchberger's criterion: every S-polynomial reduces to zero modulo G."""
    G = [g for g in G if g]
    contrib = []
    for j in range(len(G)):
        for i in range(j):
            s, c = s_polynomial(G[i], G[j])
            contrib.extend(c)
            if not s:
                continue
            r, c = remainder(s, G)
            contrib.extend(c)
            if r:
                return False, contrib
    return True, contrib


def reduce_basis(sys: GroebnerSystem) -> GroebnerSystem:
    """Minimal, monic, inter-reduced basis sorted by decreasing leading monomial."""
    ring = sys.ring
    fld = ring.field
    B = [g for g in sys.basis if g]
    raw = []
    if any(g.is_constant() for g in B):
        unit = [g for g in B if g.is_constant()][0]
        raw.extend(fld.locus_parts(unit.LC))
        return GroebnerSystem([ring.one], sys.locus.union(raw), ring, True, dict(sys.stats),
                              sys.generators)

    minimal = []
    for i, g in enumerate(B):
        lm = g.LM
        if any(j != i and monomial_divides(h.LM, lm) and (h.LM != lm or j < i)
               for j, h in enumerate(B)):
            continue
        minimal.append(g)

    monic = []
    for g in minimal:
        raw.extend(fld.locus_parts(g.LC))
        monic.append(g.monic())

    out = []
    for i, g in enumerate(monic):
        others = monic[:i] + monic[i + 1:]
        if others:
            g, contrib = remainder(g, others)
            raw.extend(contrib)
        for c in g.terms.values():
            raw.extend(fld.denominators(c))
        out.append(g)
    out.sort(key=lambda g: ring.key(g.LM), reverse=True)
    return GroebnerSystem(out, sys.locus.union(raw), ring, True, dict(sys.stats), sys.generators)


def groebner_basis(G: Sequence[Poly], budget: int | None = None, reduced: bool = True,
                   ring: PolyRing | None = None) -> GroebnerSystem:
    _, sys = buchbergerable(G, budget=budget, ring=ring)
    return reduce_basis(sys) if reduced else sys
