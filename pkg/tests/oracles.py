"""Independent reference implementations used only by the tests.

Everything here goes through sympy's own Groebner engine or plain brute
force, never through paramgb's algorithms, so agreement is a real check.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

import sympy
from sympy import QQ, Rational

from paramgb.coeffs import ParamRational


# conversions


def coeff_expr(c):
    if isinstance(c, ParamRational):
        return c.num.as_expr() / c.den.as_expr()
    c = Fraction(c)
    return Rational(c.numerator, c.denominator)


def to_expr(p):
    syms = sympy.symbols(p.ring.vars)
    out = sympy.Integer(0)
    for e, c in p.terms.items():
        mono = sympy.Integer(1)
        for s, k in zip(syms, e):
            mono *= s ** k
        out += coeff_expr(c) * mono
    return out


def poly_key(expr, gens):
    """Hashable canonical form of a polynomial with rational-function coefficients."""
    dom = QQ.frac_field(*sorted(expr.free_symbols - set(gens), key=str)) \
        if expr.free_symbols - set(gens) else QQ
    P = sympy.Poly(sympy.together(expr), *gens, domain=dom) if dom is not QQ \
        else sympy.Poly(expr, *gens, domain=QQ)
    return frozenset((m, str(sympy.factor(P.domain.to_sympy(c)))) for m, c in P.terms())


def basis_key(exprs, gens):
    return frozenset(poly_key(e, gens) for e in exprs if sympy.expand(e) != 0)


# classical Groebner computations (sympy)


def reduced_gb(exprs, gens, order="lex"):
    exprs = [e for e in exprs if sympy.expand(e) != 0]
    if not exprs:
        return []
    return list(sympy.groebner(exprs, *gens, order=order, domain=QQ).exprs)


def eliminate(exprs, gens, l):
    G = reduced_gb(exprs, gens, "lex")
    drop = set(gens[:l])
    return [g for g in G if not (g.free_symbols & drop)]


def intersect(F, G, gens):
    t = sympy.Symbol("t_oracle")
    big = [t * f for f in F] + [(1 - t) * g for g in G]
    return reduced_gb(eliminate(big, (t, *gens), 1), gens, "lex")


def quotient(F, G, gens):
    """(F : <G>) as the intersection over g of (F cap <g>) / g."""
    parts = []
    for g in G:
        if sympy.expand(g) == 0:
            continue
        inter = intersect(F, [g], gens)
        parts.append([sympy.cancel(h / g) for h in inter])
    if not parts:
        return [sympy.Integer(1)]
    acc = parts[0]
    for p in parts[1:]:
        acc = intersect(acc, p, gens)
    return reduced_gb(acc, gens, "lex")


def saturate(F, g, gens):
    """Rabinowitsch: (F + <1 - y g>) cap k[x]."""
    y = sympy.Symbol("y_oracle")
    return reduced_gb(eliminate(list(F) + [1 - y * g], (y, *gens), 1), gens, "lex")


def in_ideal(f, F, gens):
    G = reduced_gb(F, gens, "grevlex")
    if not G:
        return sympy.expand(f) == 0
    return sympy.groebner(G, *gens, order="grevlex", domain=QQ).contains(f)


# brute-force Hilbert function


def leading_monomials(exprs, gens):
    G = reduced_gb(exprs, gens, "grevlex")
    return [sympy.Poly(g, *gens).monoms(order="grevlex")[0] for g in G]


def standard_monomial_count(lms, n, d):
    count = 0
    for e in itertools.product(range(d + 1), repeat=n):
        if sum(e) > d:
            continue
        if not any(all(a >= b for a, b in zip(e, lm)) for lm in lms):
            count += 1
    return count


def brute_hilbert_function(exprs, gens, upto):
    lms = leading_monomials(exprs, gens) if exprs else []
    return [standard_monomial_count(lms, len(gens), d) for d in range(upto + 1)]


# orders by definition


def order_cmp(a, b, kind):
    """-1/0/1 straight from the textbook definitions."""
    if a == b:
        return 0
    diff = [x - y for x, y in zip(a, b)]
    if kind == "lex":
        first = next(d for d in diff if d)
        return 1 if first > 0 else -1
    if sum(a) != sum(b):
        return 1 if sum(a) > sum(b) else -1
    if kind == "grlex":
        first = next(d for d in diff if d)
        return 1 if first > 0 else -1
    last = next(d for d in reversed(diff) if d)
    return 1 if last < 0 else -1


# random instances


def random_poly_text(rng: random.Random, vars, params=(), max_deg=2, max_terms=3, coeff_range=3):
    terms = []
    n_terms = rng.randint(1, max_terms)
    for idx in range(n_terms):
        exps = [0] * len(vars)
        # the first term is never constant, later ones rarely are
        deg = rng.randint(1, max_deg) if idx == 0 or rng.random() < 0.8 else 0
        for _ in range(deg):
            exps[rng.randrange(len(vars))] += 1
        mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(vars, exps) if k)
        c = rng.choice([k for k in range(-coeff_range, coeff_range + 1) if k])
        coeff = str(c)
        if params and rng.random() < 0.6:
            p = rng.choice(params)
            shift = rng.randint(-2, 2)
            coeff = f"({c}*{p} + {shift})" if shift else f"{c}*{p}"
        terms.append(f"{coeff}*{mono}" if mono else coeff)
    return " + ".join(terms)


def random_rational(rng: random.Random, num=7, den=5):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))
