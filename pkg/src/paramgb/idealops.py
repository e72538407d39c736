"""Ideal operations over R(S): membership, radicals, elimination, intersection,
quotients, saturation and constructive primary splitting.

Every result carries the exceptional locus accumulated along the way; all
statements hold for parameter values off that locus.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Iterable, Sequence

import sympy

from .division import divide, remainder
from .errors import (BudgetExceeded, InexactDivision, InvalidArgument, OrderNotLex,
                     PostconditionFailed, WitnessInvalid)
from .groebner import ExceptionalLocus, GroebnerSystem, groebner_basis
from .polyring import Poly, PolyRing

MAX_SATURATION_STEPS = 64
DEFAULT_SPLIT_BUDGET = 16


class Ideal:
    """Finitely generated ideal with a per-order cache of reduced Groebner systems."""

    def __init__(self, ring: PolyRing, generators: Iterable[Poly] = (),
                 locus: ExceptionalLocus | None = None):
        self.ring = ring
        self.generators = [ring.convert(g) for g in generators]
        self.locus = locus if locus is not None else ExceptionalLocus(ring.field)
        self._cache = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"Ideal<{', '.join(map(str, self.generators))}>"

    def groebner(self, order=None, budget: int | None = None) -> GroebnerSystem:
        ring = self.ring if order is None else self.ring.with_order(order)
        with self._lock:
            sys = self._cache.get(ring.order.kind)
            if sys is None:
                gens = [ring.convert(g) for g in self.generators]
                sys = groebner_basis(gens, budget=budget, ring=ring).with_locus(self.locus)
                self._cache[ring.order.kind] = sys
        return sys

    def basis(self, order=None) -> list[Poly]:
        return self.groebner(order).basis

    def __add__(self, other) -> "Ideal":
        if isinstance(other, Ideal):
            return Ideal(self.ring, self.generators + other.generators, self.locus | other.locus)
        return Ideal(self.ring, self.generators + list(other), self.locus)

    def is_zero(self) -> bool:
        return not any(self.generators)

    def is_unit(self) -> bool:
        return self.groebner().is_unit()


def _ideal(I, ring=None) -> Ideal:
    if isinstance(I, Ideal):
        return I
    I = list(I)
    return Ideal(ring or I[0].ring, I)


def same_ideal(A: Ideal, B: Ideal, budget: int | None = None) -> tuple[bool, ExceptionalLocus]:
    """Equality of reduced bases in A's order (the almost-equality test)."""
    ga = A.groebner(budget=budget)
    gb = B.groebner(A.ring.order, budget=budget)
    equal = len(ga.basis) == len(gb.basis) and all(
        p == A.ring.convert(q) for p, q in zip(ga.basis, gb.basis))
    return equal, ga.locus | gb.locus


def normal_form(f: Poly, I: Ideal, budget: int | None = None) -> tuple[Poly, ExceptionalLocus]:
    sys = I.groebner(budget=budget)
    f = sys.ring.convert(f)
    if not sys.basis:
        return f, sys.locus
    r, contrib = remainder(f, sys.basis)
    return r, sys.locus | contrib


def member(f: Poly, I: Ideal, budget: int | None = None) -> tuple[bool, ExceptionalLocus]:
    r, locus = normal_form(f, _ideal(I), budget)
    return not r, locus


def radical_member(f: Poly, I: Ideal, budget: int | None = None) -> tuple[bool, ExceptionalLocus]:
    """f in sqrt(I) iff 1 in I + <1 - y f> for a fresh variable y."""
    I = _ideal(I)
    ring = I.ring
    y = ring.fresh_name("y")
    big = ring.extend(y, first=False, order="grevlex")
    yv = big.var(y)
    gens = [big.embed(g, first=False) for g in I.generators]
    gens.append(big.one - yv * big.embed(ring.convert(f), first=False))
    sys = groebner_basis(gens, budget=budget, ring=big)
    return sys.is_unit(), I.locus | sys.locus


@dataclass(frozen=True)
class BrownawellBound:
    n: int
    m: int
    D: int
    mu: int
    e_prime: int

    def degree_bound(self, e: int) -> int:
        """Bound on deg(B_i P_i) in Q^e = sum B_i P_i."""
        return e * self.D + self.e_prime


def brownawell_bound(n: int, m: int, D: int) -> BrownawellBound:
    """Effective Nullstellensatz exponent for m polynomials of degree <= D in n variables."""
    for name, v in (("n", n), ("m", m), ("D", D)):
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidArgument(f"{name} must be an integer")
    if n < 1 or m < 1 or D < 0:
        raise InvalidArgument("need n >= 1, m >= 1, D >= 0")
    mu = min(m, n)
    return BrownawellBound(n, m, D, mu, (mu + 1) * (n + 2) * (D + 1) ** (mu + 1))


def eliminate(I: Ideal, l: int, budget: int | None = None) -> Ideal:
    """Basis elements free of the first ``l`` variables of a lex Groebner basis."""
    I = _ideal(I)
    ring = I.ring
    if ring.order.kind != "lex":
        raise OrderNotLex(f"elimination needs lex order, ring uses {ring.order.kind}")
    if not 0 <= l <= ring.ngens:
        raise InvalidArgument(f"elimination index {l} outside 0..{ring.ngens}")
    sys = I.groebner(budget=budget)
    kept = [g for g in sys.basis if all(not any(e[:l]) for e in g.terms)]
    return Ideal(ring, kept, sys.locus)


def intersect(I: Ideal, J: Ideal, budget: int | None = None) -> Ideal:
    """I ∩ J = <t I, (1 - t) J> ∩ R, with t the greatest variable in lex."""
    I, J = _ideal(I), _ideal(J)
    ring = I.ring
    t = ring.fresh_name("t")
    big = ring.extend(t, first=True, order="lex")
    tv = big.var(t)
    gens = [tv * big.embed(g) for g in I.generators if g]
    gens += [(big.one - tv) * big.embed(ring.convert(h)) for h in J.generators if h]
    locus = I.locus | J.locus
    if not gens:
        return Ideal(ring, [], locus)
    sys = groebner_basis(gens, budget=budget, ring=big)
    kept = [Poly(ring, {e[1:]: c for e, c in g.terms.items()})
            for g in sys.basis if all(e[0] == 0 for e in g.terms)]
    return Ideal(ring, kept, locus | sys.locus)


def _exact_quotient(k: Poly, g: Poly) -> tuple[Poly, list]:
    res = divide(k, [g])
    if res.remainder:
        raise InexactDivision(f"{k} is not divisible by {g}")
    return res.quotients[0], res.locus_contrib


def quotient(I: Ideal, J: Ideal, budget: int | None = None) -> Ideal:
    """I : J as the intersection over generators g of J of (I ∩ <g>) / g."""
    I, J = _ideal(I), _ideal(J)
    ring = I.ring
    gens = [ring.convert(g) for g in J.generators if g]
    if not gens:
        raise InvalidArgument("quotient by the zero ideal")
    result = None
    for g in gens:
        K = intersect(I, Ideal(ring, [g]), budget)
        qs, raw = [], []
        for k in K.generators:
            q, contrib = _exact_quotient(k, g)
            qs.append(q)
            raw.extend(contrib)
        Q = Ideal(ring, qs, K.locus | raw)
        result = Q if result is None else intersect(result, Q, budget)
    result.locus = result.locus | J.locus
    return result


def saturate(I: Ideal, g: Poly, budget: int | None = None,
             max_steps: int = MAX_SATURATION_STEPS) -> tuple[Ideal, int]:
    """I : g^∞ and the least N with I : g^N = I : g^(N+1)."""
    I = _ideal(I)
    ring = I.ring
    if not g:
        raise InvalidArgument("saturation by the zero polynomial")
    G = Ideal(ring, [g])
    cur = I
    for N in count():
        if N > max_steps:
            raise BudgetExceeded(f"saturation did not stabilize within {max_steps} steps")
        nxt = quotient(cur, G, budget)
        equal, locus = same_ideal(cur, nxt, budget)
        if equal:
            sys = cur.groebner(budget=budget)
            return Ideal(ring, sys.basis, locus), N
        cur = nxt


def primary_split(J: Ideal, f: Poly, g: Poly, budget: int | None = None) -> tuple[Ideal, Ideal, int]:
    """Split J = (J + <g^N>) ∩ (J + <f>) for a witness f g ∈ J, f ∉ J."""
    J = _ideal(J)
    ring = J.ring
    f, g = ring.convert(f), ring.convert(g)
    if not f or f.is_constant():
        raise WitnessInvalid(f"degenerate witness f = {f}")
    fg_in, _ = member(f * g, J, budget)
    if not fg_in:
        raise WitnessInvalid(f"({f})*({g}) is not in the ideal")
    f_in, _ = member(f, J, budget)
    if f_in:
        raise WitnessInvalid(f"{f} already lies in the ideal")
    _, N = saturate(J, g, budget)
    J1 = Ideal(ring, J.generators + [g ** N], J.locus)
    J2 = Ideal(ring, J.generators + [f], J.locus)
    meet = intersect(J1, J2, budget)
    equal, locus = same_ideal(meet, J, budget)
    if not equal:
        raise PostconditionFailed("(J + <g^N>) ∩ (J + <f>) differs from J")
    J1.locus = J1.locus | locus
    J2.locus = J2.locus | locus
    return J1, J2, N


# square-free splitting heuristic


def derivative(p: Poly, i: int) -> Poly:
    terms = {}
    for e, c in p.terms.items():
        if e[i]:
            ne = e[:i] + (e[i] - 1,) + e[i + 1:]
            terms[ne] = c * e[i]
    return Poly(p.ring, terms)


def _monic(p: Poly) -> Poly:
    return p.monic() if p else p


def univariate_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, remainder(a, [b])[0]
    return _monic(a)


def squarefree_decomposition(p: Poly, i: int) -> list[tuple[Poly, int]]:
    """Yun's algorithm for p univariate in variable i: p = lc * prod q_k^k."""
    p = _monic(p)
    dp = derivative(p, i)
    c = univariate_gcd(p, dp)
    w = _exact_quotient(p, c)[0]
    y = _exact_quotient(dp, c)[0]
    z = y - derivative(w, i)
    out = []
    k = 1
    while not w.is_constant():
        h = univariate_gcd(w, z)
        w = _exact_quotient(w, h)[0]
        y = _exact_quotient(z, h)[0]
        z = y - derivative(w, i)
        if not h.is_constant():
            out.append((h, k))
        k += 1
    return out


def _factor_pairs(p: Poly):
    """(q^k, p / q^k) for each irreducible factor q of a parameter-free p."""
    ring = p.ring
    gens = sympy.symbols(ring.vars)
    expr = sympy.Poly.from_dict({e: sympy.Rational(c.numerator, c.denominator) for e, c in p.terms.items()},
                                *gens, domain="QQ")
    _, factors = expr.factor_list()
    if len(factors) < 2:
        return
    for q, k in factors:
        terms = {e: Fraction(int(c.p), int(c.q)) for e, c in (q ** k).as_dict().items()}
        f = ring.from_dict(terms)
        yield f, _exact_quotient(_monic(p), _monic(f))[0]


def _candidate_witnesses(C: Ideal):
    basis = C.groebner().basis
    if not C.ring.field.m:
        for p in basis:
            for f, g in _factor_pairs(p):
                yield f, g
                yield g, f
    for p in basis:
        support = p.support_vars()
        if len(support) != 1:
            continue
        (i,) = support
        factors = squarefree_decomposition(p, i)
        if len(factors) < 2:
            continue
        for q, k in factors:
            f = q ** k
            g = _exact_quotient(_monic(p), f)[0]
            yield f, g
            yield g, f


def _find_split(C: Ideal, budget):
    for f, g in _candidate_witnesses(C):
        try:
            J1, J2, N = primary_split(C, f, g, budget)
        except WitnessInvalid:
            continue
        if not same_ideal(J1, C)[0] and not same_ideal(J2, C)[0]:
            return J1, J2
    return None


def decompose(J: Ideal, witnesses: Sequence[tuple[Poly, Poly]] | None = None,
              budget: int = DEFAULT_SPLIT_BUDGET, pair_budget: int | None = None) -> list[Ideal]:
    """Split J along witnesses into components whose intersection is J.

    With ``witnesses=None`` the candidates come from factorizations of basis
    elements over QQ (parameter-free rings only) and from square-free
    decompositions of basis elements in a single variable.  The components
    are not certified primary.
    """
    J = _ideal(J)
    splits = 0
    if witnesses is not None:
        components = [J]
        for f, g in witnesses:
            for idx, C in enumerate(components):
                try:
                    J1, J2, _ = primary_split(C, f, g, pair_budget)
                except WitnessInvalid:
                    continue
                components[idx:idx + 1] = [J2, J1]
                break
            else:
                raise WitnessInvalid(f"witness ({f}, {g}) applies to no component")
            splits += 1
            if splits > budget:
                raise BudgetExceeded(f"more than {budget} splits")
        return components

    done, work = [], [J]
    while work:
        C = work.pop(0)
        found = _find_split(C, pair_budget)
        if found is None:
            done.append(C)
            continue
        splits += 1
        if splits > budget:
            raise BudgetExceeded(f"more than {budget} splits")
        J1, J2 = found
        work[0:0] = [J2, J1]
    return _prune(done, pair_budget)


def _contains(big: Ideal, small: Ideal, budget) -> bool:
    return all(member(g, big, budget)[0] for g in small.groebner(budget=budget).basis)


def _prune(components: list, budget) -> list:
    """Drop components that contain another one; the intersection is unchanged."""
    kept = []
    for idx, C in enumerate(components):
        redundant = False
        for jdx, D in enumerate(components):
            if jdx == idx or not _contains(C, D, budget):
                continue
            # equal ideals: keep the first copy only
            if jdx < idx or not _contains(D, C, budget):
                redundant = True
                break
        if not redundant:
            kept.append(C)
    return kept
