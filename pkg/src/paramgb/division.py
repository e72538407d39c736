"""Multivariate division with remainder over R(S), and S-polynomials.

Every leading coefficient inverted along the way is reported (numerator and
denominator) so callers can accumulate the exceptional locus.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from heapq import heapify, heappop, heappush
from typing import Sequence

from .errors import EmptyDivisorList, ZeroPolynomial
from .polyring import Poly, monomial_lcm


@dataclass
class DivisionResult:
    quotients: list
    remainder: Poly
    locus_contrib: list = field(default_factory=list)


def _run(h: Poly, G: Sequence[Poly], track: bool):
    if not G:
        raise EmptyDivisorList("division by an empty list of polynomials")
    for g in G:
        if not g:
            raise ZeroPolynomial("division by the zero polynomial")
    ring = h.ring
    neg_key = ring.order.neg_key
    lms = [g.LM for g in G]
    inverses = [None] * len(G)
    p = dict(h.terms)
    heap = [(neg_key(e), e) for e in p]
    heapify(heap)
    rem = {}
    quots = [{} for _ in G] if track else None

    while heap:
        e = heappop(heap)[1]
        c = p.get(e)
        if c is None:
            continue
        for i, lm in enumerate(lms):
            if all(a >= b for a, b in zip(e, lm)):
                break
        else:
            rem[e] = c
            del p[e]
            continue
        inv = inverses[i]
        if inv is None:
            inv = inverses[i] = 1 / G[i].LC
        shift = tuple(a - b for a, b in zip(e, lm))
        factor = c * inv
        if track:
            quots[i][shift] = factor
        del p[e]
        for ge, gc in G[i].terms.items():
            if ge == lm:
                continue
            ne = tuple(a + b for a, b in zip(shift, ge))
            t = factor * gc
            if not t:
                continue
            old = p.get(ne)
            if old is None:
                p[ne] = -t
                heappush(heap, (neg_key(ne), ne))
            else:
                s = old - t
                if s:
                    p[ne] = s
                else:
                    del p[ne]

    fld = ring.field
    contrib = []
    for g, inv in zip(G, inverses):
        if inv is not None:
            contrib.extend(fld.locus_parts(g.LC))
    quotients = [Poly(ring, q) for q in quots] if track else None
    return quotients, Poly(ring, rem), contrib


def divide(h: Poly, G: Sequence[Poly]) -> DivisionResult:
    """Divide ``h`` by the ordered list ``G``.

    The current leading term is always reduced by the first divisor in list
    order whose leading monomial divides it; otherwise it moves to the
    remainder.
    """
    quotients, rem, contrib = _run(h, G, True)
    return DivisionResult(quotients, rem, contrib)


def remainder(h: Poly, G: Sequence[Poly]) -> tuple[Poly, list]:
    """Same remainder as ``divide`` without building the quotients."""
    _, rem, contrib = _run(h, G, False)
    return rem, contrib


def s_polynomial(f: Poly, g: Poly) -> tuple[Poly, list]:
    if not f or not g:
        raise ZeroPolynomial("S-polynomial of the zero polynomial")
    a, b = f.LM, g.LM
    gamma = monomial_lcm(a, b)
    fa = f.mul_term(tuple(x - y for x, y in zip(gamma, a)), 1 / f.LC)
    gb = g.mul_term(tuple(x - y for x, y in zip(gamma, b)), 1 / g.LC)
    fld = f.ring.field
    return fa - gb, fld.locus_parts(f.LC) + fld.locus_parts(g.LC)
