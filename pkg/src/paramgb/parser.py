"""Infix polynomial expressions -> AST -> canonical Poly.

Grammar (EBNF)::

    expr   = term { ("+" | "-") term } ;
    term   = unary { ("*" | "/") unary } ;
    unary  = "-" unary | power ;
    power  = atom [ "^" INT ] ;
    atom   = INT | IDENT | "(" expr ")" ;

``*`` is mandatory between factors.  The right operand of ``/`` may only
mention parameters, so coefficients stay in the parameter fraction field.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from sympy.polys.domains import QQ

from .errors import (DivisionByMainVariable, DivisionByZeroOnSpace, MalformedExpression,
                     UnknownSymbol, ZeroDenominator, InvalidArgument)
from .polyring import Poly, PolyRing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


@dataclass(frozen=True)
class Num:
    value: int
    pos: int = 0


@dataclass(frozen=True)
class Sym:
    name: str
    pos: int = 0


@dataclass(frozen=True)
class Neg:
    operand: "ExprAst"
    pos: int = 0


@dataclass(frozen=True)
class BinOp:
    op: str  # one of + - * /
    left: "ExprAst"
    right: "ExprAst"
    pos: int = 0


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exp: int
    pos: int = 0


ExprAst = Union[Num, Sym, Neg, BinOp, Pow]


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("INT", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("IDENT", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise MalformedExpression(f"unexpected character {ch!r}", start, text)
            tokens.append((ch, ch, start))
        pos = m.end()
    tokens.append(("EOF", None, len(text.rstrip())))
    return tokens


class _Parser:
    def __init__(self, text, params, vars):
        self.text = text
        self.params = set(params)
        self.vars = set(vars)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        what = "end of input" if tok[0] == "EOF" else repr(tok[1])
        raise MalformedExpression(f"{msg}, found {what}", tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "EOF":
            self.error("empty expression")
        node = self.expr()
        if self.peek()[0] != "EOF":
            self.error("expected an operator")
        return node

    def expr(self):
        node = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()
            node = BinOp(op[0], node, self.term(), op[2])
        return node

    def term(self):
        node = self.unary()
        while self.peek()[0] in ("*", "/"):
            op = self.take()
            right = self.unary()
            if op[0] == "/":
                bad = _first_var(right, self.vars)
                if bad is not None:
                    raise DivisionByMainVariable(
                        f"division by an expression in main variable {bad.name!r}", bad.pos, self.text)
            node = BinOp(op[0], node, right, op[2])
        return node

    def unary(self):
        if self.peek()[0] == "-":
            tok = self.take()
            return Neg(self.unary(), tok[2])
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[0] == "^":
            tok = self.take()
            e = self.take()
            if e[0] != "INT":
                self.error("exponent must be a nonnegative integer literal", e)
            return Pow(base, e[1], tok[2])
        return base

    def atom(self):
        tok = self.take()
        kind = tok[0]
        if kind == "INT":
            return Num(tok[1], tok[2])
        if kind == "IDENT":
            if tok[1] not in self.params and tok[1] not in self.vars:
                raise UnknownSymbol(f"undeclared symbol {tok[1]!r}", tok[2], self.text)
            return Sym(tok[1], tok[2])
        if kind == "(":
            node = self.expr()
            if self.peek()[0] != ")":
                self.error("expected ')'")
            self.take()
            return node
        self.error("expected a number, symbol or '('", tok)


def _first_var(node, vars):
    if isinstance(node, Sym):
        return node if node.name in vars else None
    if isinstance(node, Num):
        return None
    if isinstance(node, (Neg,)):
        return _first_var(node.operand, vars)
    if isinstance(node, Pow):
        return _first_var(node.base, vars)
    return _first_var(node.left, vars) or _first_var(node.right, vars)


def parse_poly(text: str, params: Sequence[str] = (), vars: Sequence[str] = ()) -> ExprAst:
    overlap = set(params) & set(vars)
    if overlap:
        raise InvalidArgument(f"symbols declared both as parameter and variable: {sorted(overlap)}")
    return _Parser(text, params, vars).parse()


def lower(ast: ExprAst, ring: PolyRing) -> Poly:
    """Evaluate an AST into the canonical Poly of ``ring``."""
    if isinstance(ast, Num):
        return ring.constant(ast.value)
    if isinstance(ast, Sym):
        if ast.name in ring.vars:
            return ring.var(ast.name)
        return ring.param(ast.name)
    if isinstance(ast, Neg):
        return -lower(ast.operand, ring)
    if isinstance(ast, Pow):
        return lower(ast.base, ring) ** ast.exp
    left = lower(ast.left, ring)
    right = lower(ast.right, ring)
    if ast.op == "+":
        return left + right
    if ast.op == "-":
        return left - right
    if ast.op == "*":
        return left * right
    if not right.is_constant():
        raise DivisionByMainVariable("division by a polynomial in the main variables", ast.pos)
    if not right:
        raise ZeroDenominator("division by a zero parameter expression", ast.pos)
    c = right.terms[ring.zero_exp]
    try:
        return left.scale(1 / c)
    except DivisionByZeroOnSpace as exc:
        raise ZeroDenominator(f"denominator vanishes on the parameter space ({exc})", ast.pos) from exc


def parse(text: str, ring: PolyRing) -> Poly:
    return lower(parse_poly(text, ring.field.params, ring.vars), ring)


def parse_param_poly(text: str, params: Sequence[str], _ring=None):
    """Parse a polynomial in the parameters only (e.g. a space equation) into a ParamPoly."""
    ast = parse_poly(text, params, ())
    return _eval_param(ast, _ring)


def _eval_param(ast, ring):
    if isinstance(ast, Num):
        return ring(ast.value)
    if isinstance(ast, Sym):
        return ring.gens[[str(g) for g in ring.gens].index(ast.name)]
    if isinstance(ast, Neg):
        return -_eval_param(ast.operand, ring)
    if isinstance(ast, Pow):
        return _eval_param(ast.base, ring) ** ast.exp
    left = _eval_param(ast.left, ring)
    right = _eval_param(ast.right, ring)
    if ast.op == "+":
        return left + right
    if ast.op == "-":
        return left - right
    if ast.op == "*":
        return left * right
    if not right.is_ground:
        raise InvalidArgument(f"space equations must be polynomial in the parameters (position {ast.pos})")
    if not right:
        raise ZeroDenominator("division by zero", ast.pos)
    return left.quo_ground(QQ(right.LC))


def parse_point(text: str, m: int | None = None) -> tuple[Fraction, ...]:
    """Comma-separated rationals such as ``"1/2, -3"``."""
    text = text.strip()
    if not text:
        coords = ()
    else:
        try:
            coords = tuple(Fraction(part.strip()) for part in text.split(","))
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedExpression(f"bad rational point {text!r}: {exc}") from exc
    if m is not None and len(coords) != m:
        raise InvalidArgument(f"point {text!r} has {len(coords)} coordinates, expected {m}")
    return coords
