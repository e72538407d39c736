"""Canonical text rendering that the parser reads back unchanged.

Products use an explicit ``*`` and powers ``^``; terms appear in decreasing
monomial order and rational numbers as reduced ``a/b``.
"""
from __future__ import annotations

from fractions import Fraction

from .coeffs import ParamRational, qq_to_fraction


def _monomial(names, exps) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def _join(signed_terms) -> str:
    if not signed_terms:
        return "0"
    out = []
    for k, (neg, body) in enumerate(signed_terms):
        if k == 0:
            out.append("-" + body if neg else body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def _scaled(a: Fraction, mono: str) -> str:
    """|coefficient| times monomial, for a nonnegative rational ``a``."""
    if not mono:
        return str(a)
    if a == 1:
        return mono
    return f"{a}*{mono}"


def _param_terms(p):
    names = [str(g) for g in p.ring.gens]
    out = []
    for exps, c in p.terms():
        c = qq_to_fraction(c)
        out.append((c < 0, _scaled(abs(c), _monomial(names, exps))))
    return out


def render_param_poly(p) -> str:
    return _join(_param_terms(p))


def _is_single_power(p) -> bool:
    terms = list(p.terms())
    if len(terms) != 1:
        return False
    exps, c = terms[0]
    return c == 1 and sum(1 for e in exps if e) == 1


def _fraction_body(num_body: str, num_multi: bool, den) -> str:
    if num_multi:
        num_body = f"({num_body})"
    den_s = render_param_poly(den)
    if not _is_single_power(den):
        den_s = f"({den_s})"
    return f"{num_body}/{den_s}"


def _coeff_parts(c, standalone: bool):
    """Split a coefficient into (negative, body) where body renders |c| (or c itself)."""
    if not isinstance(c, ParamRational):
        c = Fraction(c)
        return c < 0, str(abs(c)), False
    terms = _param_terms(c.num)
    multi = len(terms) > 1
    if multi:
        body = _join(terms)
        if not c.den.is_ground:
            return False, _fraction_body(body, True, c.den), False
        return False, f"({body})" if not standalone else body, True
    neg, body = terms[0]
    if not c.den.is_ground:
        return neg, _fraction_body(body, False, c.den), False
    return neg, body, False


def render_coeff(c) -> str:
    neg, body, _ = _coeff_parts(c, True)
    return "-" + body if neg else body


def render_poly(p) -> str:
    signed = []
    single = len(p.terms) == 1
    for exps, c in p.sorted_terms():
        mono = _monomial(p.ring.vars, exps)
        neg, body, _ = _coeff_parts(c, single and not mono)
        if not mono:
            signed.append((neg, body))
        elif body == "1":
            signed.append((neg, mono))
        else:
            signed.append((neg, f"{body}*{mono}"))
    return _join(signed)
