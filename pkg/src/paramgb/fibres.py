"""Specialization at rational parameter points and Hilbert data of fibres.

Hilbert functions follow the affine convention: HF(d) is the dimension of
the space of polynomials of total degree <= d modulo the ideal, which equals
the number of standard monomials of degree <= d for a degree-compatible
order.  Systems computed in lex are recomputed in grevlex first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .coeffs import ParamField
from .errors import (DenominatorVanishes, NotAGroebnerBasis, ParamGBError, PostconditionFailed,
                     SpaceViolation, InvalidArgument)
from .groebner import ExceptionalLocus, GroebnerSystem, groebner_basis, is_groebner, reduce_basis
from .polyring import Poly, PolyRing, monomial_divides

FibrePoint = tuple  # of Fractions


def fibre_point(coords: Sequence, fld: ParamField) -> FibrePoint:
    point = tuple(Fraction(c) for c in coords)
    if len(point) != fld.m:
        raise InvalidArgument(f"fibre point has {len(point)} coordinates, expected {fld.m}")
    if not fld.on_space(point):
        raise SpaceViolation(f"point {tuple(map(str, point))} does not satisfy the space equations")
    return point


def fibre_ring(ring: PolyRing) -> PolyRing:
    return PolyRing(ring.vars, ring.order, ParamField(()))


def specialize_polys(polys: Sequence[Poly], point: FibrePoint, target: PolyRing | None = None) -> list[Poly]:
    """Substitute ``point`` into every coefficient; polynomials that vanish are dropped."""
    out = []
    for p in polys:
        fld = p.ring.field
        target = target or fibre_ring(p.ring)
        terms = {}
        for e, c in p.terms.items():
            v = fld.evaluate(c, point)
            if v:
                terms[e] = v
        if terms:
            out.append(Poly(target, terms))
    return out


def specialize(sys: GroebnerSystem, point) -> tuple[list[Poly], bool]:
    point = fibre_point(point, sys.ring.field)
    polys = specialize_polys(sys.basis, point, fibre_ring(sys.ring))
    return polys, sys.locus.vanishes_at(point)


# Hilbert functions of monomial ideals


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(monomial_divides(h, g) for h in out):
            out.append(g)
    return out


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def hilbert_numerator(gens, n: int) -> list[int]:
    """Numerator N(t) of the graded Hilbert series N(t)/(1-t)^n of k[x]/<gens>.

    Pivot recursion N(M) = N(M + <x_i>) + t * N(M : x_i) on a variable of a
    generator that is not a pure power.
    """
    gens = _minimalize(tuple(g) for g in gens)
    if not gens:
        return [1]
    if any(not any(g) for g in gens):
        return [0]
    mixed = [g for g in gens if sum(1 for e in g if e) > 1]
    if not mixed:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    g = mixed[0]
    i = next(k for k, e in enumerate(g) if e)
    var = tuple(1 if k == i else 0 for k in range(n))
    plus = hilbert_numerator(gens + [var], n)
    colon = hilbert_numerator(
        [tuple(e - 1 if k == i and e else e for k, e in enumerate(h)) for h in gens], n)
    return _poly_add(plus, [0] + colon)


def _affine_hf(numerator, n, d) -> int:
    return sum(c * comb(d - i + n, n) for i, c in enumerate(numerator) if c and d >= i)


def _interpolate(xs, ys) -> list[Fraction]:
    """Coefficients (ascending) of the Lagrange interpolant."""
    coeffs = [Fraction(0)] * len(xs)
    for j, (xj, yj) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for k, xk in enumerate(xs):
            if k != j:
                basis = _poly_mul(basis, [Fraction(-xk), Fraction(1)])
                denom *= xj - xk
        for i, b in enumerate(basis):
            coeffs[i] += b * yj / denom
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _eval(coeffs, d):
    return sum(c * d ** i for i, c in enumerate(coeffs))


def render_hp(coeffs, var: str = "d") -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        a = abs(c)
        body = str(a) if not mono else (mono if a == 1 else f"{a}*{mono}")
        terms.append((c < 0, body))
    if not terms:
        return "0"
    out = "-" + terms[0][1] if terms[0][0] else terms[0][1]
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


@dataclass
class HilbertData:
    hilbert_function: list
    hilbert_polynomial: list  # ascending Fraction coefficients in d
    stabilization_degree: int
    leading_monomials: list = field(default_factory=list)
    locus: ExceptionalLocus | None = None

    def hp(self, d: int) -> Fraction:
        return _eval(self.hilbert_polynomial, d)

    @property
    def dimension(self) -> int:
        """Degree of the Hilbert polynomial (-1 for the empty variety)."""
        return len(self.hilbert_polynomial) - 1

    def hp_string(self) -> str:
        return render_hp(self.hilbert_polynomial)

    def same_polynomial(self, other: "HilbertData") -> bool:
        return self.hilbert_polynomial == other.hilbert_polynomial


def hilbert_from_monomials(lms, n: int) -> HilbertData:
    numerator = hilbert_numerator(lms, n)
    while len(numerator) > 1 and numerator[-1] == 0:
        numerator.pop()
    top = len(numerator) - 1
    xs = list(range(top, top + n + 1))
    hp = _interpolate(xs, [_affine_hf(numerator, n, d) for d in xs])
    # n + 2 further consecutive agreements pin the polynomial down
    for d in range(top + n + 1, top + 2 * n + 3):
        if _eval(hp, d) != _affine_hf(numerator, n, d):
            raise PostconditionFailed("Hilbert function is not polynomial past the numerator degree")
    stab = top
    while stab > 0 and _eval(hp, stab - 1) == _affine_hf(numerator, n, stab - 1):
        stab -= 1
    hf = [_affine_hf(numerator, n, d) for d in range(stab + n + 3)]
    return HilbertData(hf, hp, stab, sorted(set(map(tuple, lms)), reverse=True))


def graded_system(sys: GroebnerSystem, budget: int | None = None) -> GroebnerSystem:
    if sys.ring.order.graded:
        return sys
    ring = sys.ring.with_order("grevlex")
    gens = [ring.convert(g) for g in sys.basis]
    graded = groebner_basis(gens, budget=budget, ring=ring)
    graded.generators = [ring.convert(g) for g in (sys.generators or sys.basis)]
    return graded.with_locus(sys.locus)


def hilbert(sys: GroebnerSystem, budget: int | None = None) -> HilbertData:
    """Affine Hilbert function and polynomial of the ideal of ``sys``, valid off its locus."""
    if not sys.reduced:
        ok, _ = is_groebner(sys.basis)
        if not ok:
            raise NotAGroebnerBasis("hilbert needs a Groebner basis")
    graded = graded_system(sys, budget)
    data = hilbert_from_monomials([g.LM for g in graded.basis if g], graded.ring.ngens)
    data.locus = graded.locus
    return data


def classical_hilbert(polys: Sequence[Poly], ring: PolyRing, budget: int | None = None) -> HilbertData:
    graded_ring = ring.with_order("grevlex")
    sys = groebner_basis([graded_ring.convert(p) for p in polys], budget=budget, ring=graded_ring)
    return hilbert_from_monomials([g.LM for g in sys.basis], ring.ngens)


@dataclass
class SweepEntry:
    point: tuple
    on_locus: bool | None = None
    specialized_basis: list = field(default_factory=list)
    specialized_is_groebner: bool | None = None
    hilbert: HilbertData | None = None
    matches_generic: bool | None = None
    error: str | None = None


@dataclass
class SweepReport:
    generic: HilbertData
    entries: list

    @property
    def off_locus(self):
        return [e for e in self.entries if e.on_locus is False]

    @property
    def on_locus(self):
        return [e for e in self.entries if e.on_locus]


def fibre_sweep(sys: GroebnerSystem, points: Sequence, budget: int | None = None) -> SweepReport:
    """Compare per-fibre Hilbert data with the generic one at each point.

    Errors at a single point are recorded in its entry and do not abort the sweep.
    """
    generic = hilbert(sys, budget)
    graded = graded_system(sys, budget)
    fring = fibre_ring(graded.ring)
    gens = graded.generators or graded.basis
    entries = []
    for raw in points:
        entry = SweepEntry(tuple(Fraction(c) for c in raw))
        try:
            point = fibre_point(raw, sys.ring.field)
            entry.on_locus = graded.locus.vanishes_at(point)
            try:
                spec = specialize_polys(graded.basis, point, fring)
                entry.specialized_basis = spec
                entry.specialized_is_groebner = is_groebner(spec)[0]
            except DenominatorVanishes:
                entry.specialized_is_groebner = None
            entry.hilbert = classical_hilbert(specialize_polys(gens, point, fring), fring, budget)
            entry.matches_generic = entry.hilbert.same_polynomial(generic)
            if not entry.on_locus and not (entry.specialized_is_groebner and entry.matches_generic):
                raise PostconditionFailed("off-locus fibre disagrees with the generic system")
        except ParamGBError as exc:
            entry.error = f"{type(exc).__name__}: {exc}"
        entries.append(entry)
    return SweepReport(generic, entries)
