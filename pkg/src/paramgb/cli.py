"""Batch front-end: run a session file, print one JSON document per command.

Session format::

    params: s, t
    space: s^2 + t^2 - 1        # optional, repeatable
    vars: x, y
    order: lex
    ideal I: x^2 + s*y^2, x + y
    groebner I
    member I x^2 + s*y^2
    intersect I J as K

Exit codes: 0 success, 1 input error, 2 budget exhausted.
"""
from __future__ import annotations

import argparse
import csv
import json
import random
import re
import shlex
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import fibres, idealops
from .coeffs import ParamField
from .errors import BudgetExceeded, InputError, ParamGBError, ParseError
from .groebner import ExceptionalLocus
from .idealops import Ideal
from .parser import parse, parse_point, parse_poly
from .polyring import ORDERS, PolyRing
from .printing import render_param_poly

IDEAL_COMMANDS = {"eliminate", "intersect", "quotient", "saturate"}
COMMANDS = {"groebner", "reduce", "member", "radical-member", "eliminate", "intersect",
            "quotient", "saturate", "split", "decompose", "specialize", "hilbert", "sweep",
            "brownawell"}


class SessionError(InputError):
    def __init__(self, message, line=None, column=None, kind=None):
        self.line = line
        self.column = column
        self.kind = kind or type(self).__name__
        super().__init__(message)


@dataclass
class Command:
    name: str
    args: list
    line: int
    text: str
    target: str | None = None


@dataclass
class Session:
    params: list = field(default_factory=list)
    space: list = field(default_factory=list)  # (line, column, text)
    vars: list = field(default_factory=list)
    order: str = "lex"
    ideals: dict = field(default_factory=dict)  # name -> (line, column, [texts])
    commands: list = field(default_factory=list)
    base_dir: Path = Path(".")


def _split_symbols(text):
    return [s.strip() for s in text.split(",") if s.strip()]


def _split_top_level(text):
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


_DIRECTIVE = re.compile(r"(params|space|vars|order)\s*:(.*)\Z")
_IDEAL = re.compile(r"ideal\s+([A-Za-z_][A-Za-z0-9_]*)\s*:(.*)\Z")


def parse_session(text: str, base_dir: Path = Path(".")) -> Session:
    sess = Session(base_dir=base_dir)
    seen_body = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].rstrip()
        line = body.strip()
        if not line:
            continue
        m = _DIRECTIVE.match(line)
        if m:
            key, value = m.group(1), m.group(2).strip()
            if seen_body:
                raise SessionError(f"'{key}:' must precede ideals and commands", lineno, 1)
            if key == "params":
                sess.params = _split_symbols(value)
            elif key == "vars":
                sess.vars = _split_symbols(value)
            elif key == "space":
                for eq in _split_top_level(value):
                    sess.space.append((lineno, raw.find(eq) + 1, eq))
            else:
                if value not in ORDERS:
                    raise SessionError(f"unknown order {value!r}", lineno, raw.find(value) + 1)
                sess.order = value
            continue
        seen_body = True
        m = _IDEAL.match(line)
        if m:
            name = m.group(1)
            sess.ideals[name] = (lineno, raw.find(m.group(2).strip()), _split_top_level(m.group(2)))
            sess.commands.append(Command("ideal", [name], lineno, body))
            continue
        try:
            tokens = shlex.split(line)
        except ValueError as exc:
            raise SessionError(f"cannot tokenize command: {exc}", lineno, 1)
        name, args = tokens[0], tokens[1:]
        if name not in COMMANDS:
            raise SessionError(f"unknown command {name!r}", lineno, 1)
        target = None
        if name in IDEAL_COMMANDS and len(args) >= 2 and args[-2] == "as":
            target = args[-1]
            args = args[:-2]
        sess.commands.append(Command(name, args, lineno, body, target))
    return sess


def _fraction_str(x: Fraction) -> str:
    return str(Fraction(x))


class Runner:
    def __init__(self, sess: Session, order=None, budget=None):
        self.sess = sess
        self.budget = budget
        order = order or sess.order
        for lineno, column, text in sess.space:
            try:
                parse_poly(text, sess.params, ())
            except ParseError as exc:
                col = column + (exc.position or 0)
                raise SessionError(str(exc), lineno, col, type(exc).__name__) from exc
        try:
            fld = ParamField(sess.params, [text for _, _, text in sess.space])
            self.ring = PolyRing(sess.vars, order, fld)
        except ParamGBError as exc:
            raise SessionError(str(exc), sess.space[0][0] if sess.space else 1, 1,
                               type(exc).__name__) from exc
        self.field = fld
        self.space = [render_param_poly(g) for g in fld.space.generators]
        self.ideals = {}

    # helpers

    def poly(self, text, cmd, column=None):
        try:
            return parse(text, self.ring)
        except ParseError as exc:
            col = None
            if exc.position is not None:
                col = (column if column is not None else max(cmd.text.find(text), 0)) + exc.position + 1
            raise SessionError(str(exc), cmd.line, col, type(exc).__name__) from exc

    def ideal(self, name, cmd):
        if name not in self.ideals:
            raise SessionError(f"ideal {name!r} is not defined", cmd.line, max(cmd.text.find(name), 0) + 1)
        return self.ideals[name]

    def need(self, cmd, n, usage):
        if len(cmd.args) < n:
            raise SessionError(f"usage: {usage}", cmd.line, 1)

    def base(self, cmd, locus):
        return {"command": cmd.name, "line": cmd.line,
                "locus": locus.strings() if isinstance(locus, ExceptionalLocus) else list(locus),
                "space": list(self.space)}

    def strs(self, polys):
        return [str(p) for p in polys]

    def store(self, cmd, ideal, default):
        name = cmd.target or default
        if name:
            self.ideals[name] = ideal
        return name

    # commands

    def run(self, cmd):
        handler = getattr(self, "cmd_" + cmd.name.replace("-", "_"))
        return handler(cmd)

    def cmd_ideal(self, cmd):
        name = cmd.args[0]
        _, _, texts = self.sess.ideals[name]
        self.ideals[name] = Ideal(self.ring, [self.poly(t, cmd, column=cmd.text.find(t)) for t in texts])
        return None

    def cmd_groebner(self, cmd):
        self.need(cmd, 1, "groebner <ideal>")
        sys_ = self.ideal(cmd.args[0], cmd).groebner(budget=self.budget)
        out = self.base(cmd, sys_.locus)
        out.update(ideal=cmd.args[0], basis=self.strs(sys_.basis), reduced=sys_.reduced,
                   order=self.ring.order.kind)
        return out

    def _poly_arg(self, cmd, start):
        text = " ".join(cmd.args[start:])
        return text, self.poly(text, cmd)

    def cmd_reduce(self, cmd):
        self.need(cmd, 2, "reduce <ideal> <poly>")
        text, f = self._poly_arg(cmd, 1)
        r, locus = idealops.normal_form(f, self.ideal(cmd.args[0], cmd), self.budget)
        out = self.base(cmd, locus)
        out.update(ideal=cmd.args[0], poly=str(f), normal_form=str(r))
        return out

    def cmd_member(self, cmd):
        self.need(cmd, 2, "member <ideal> <poly>")
        text, f = self._poly_arg(cmd, 1)
        ok, locus = idealops.member(f, self.ideal(cmd.args[0], cmd), self.budget)
        out = self.base(cmd, locus)
        out.update(ideal=cmd.args[0], poly=str(f), member=ok)
        return out

    def cmd_radical_member(self, cmd):
        self.need(cmd, 2, "radical-member <ideal> <poly>")
        text, f = self._poly_arg(cmd, 1)
        ok, locus = idealops.radical_member(f, self.ideal(cmd.args[0], cmd), self.budget)
        out = self.base(cmd, locus)
        out.update(ideal=cmd.args[0], poly=str(f), radical_member=ok)
        return out

    def _ideal_result(self, cmd, ideal, extra=None):
        sys_ = ideal.groebner(budget=self.budget)
        out = self.base(cmd, sys_.locus)
        out.update(basis=self.strs(sys_.basis))
        name = self.store(cmd, ideal, None)
        if name:
            out["result"] = name
        if extra:
            out.update(extra)
        return out

    def cmd_eliminate(self, cmd):
        self.need(cmd, 2, "eliminate <ideal> <l> [as <name>]")
        try:
            l = int(cmd.args[1])
        except ValueError:
            raise SessionError(f"elimination index must be an integer, got {cmd.args[1]!r}", cmd.line, 1)
        E = idealops.eliminate(self.ideal(cmd.args[0], cmd), l, self.budget)
        # the kept elements already form the reduced basis of the elimination ideal
        out = self.base(cmd, E.locus)
        out.update(ideal=cmd.args[0], l=l, basis=self.strs(E.generators))
        name = self.store(cmd, E, None)
        if name:
            out["result"] = name
        return out

    def cmd_intersect(self, cmd):
        self.need(cmd, 2, "intersect <A> <B> [as <name>]")
        A, B = (self.ideal(n, cmd) for n in cmd.args[:2])
        return self._ideal_result(cmd, idealops.intersect(A, B, self.budget), {"ideals": cmd.args[:2]})

    def cmd_quotient(self, cmd):
        self.need(cmd, 2, "quotient <A> <B> [as <name>]")
        A, B = (self.ideal(n, cmd) for n in cmd.args[:2])
        return self._ideal_result(cmd, idealops.quotient(A, B, self.budget), {"ideals": cmd.args[:2]})

    def cmd_saturate(self, cmd):
        self.need(cmd, 2, "saturate <ideal> <poly> [as <name>]")
        text, g = self._poly_arg(cmd, 1)
        S, N = idealops.saturate(self.ideal(cmd.args[0], cmd), g, self.budget)
        return self._ideal_result(cmd, S, {"ideal": cmd.args[0], "poly": str(g), "N": N})

    def cmd_split(self, cmd):
        self.need(cmd, 3, "split <ideal> <f> <g>")
        if len(cmd.args) != 3:
            raise SessionError("split takes exactly <ideal> <f> <g>; quote polynomials containing spaces",
                               cmd.line, 1)
        f = self.poly(cmd.args[1], cmd)
        g = self.poly(cmd.args[2], cmd)
        J1, J2, N = idealops.primary_split(self.ideal(cmd.args[0], cmd), f, g, self.budget)
        s1, s2 = J1.groebner(), J2.groebner()
        out = self.base(cmd, s1.locus | s2.locus)
        out.update(ideal=cmd.args[0], f=str(f), g=str(g), N=N,
                   J1=self.strs(s1.basis), J2=self.strs(s2.basis))
        return out

    def cmd_decompose(self, cmd):
        self.need(cmd, 1, "decompose <ideal>")
        comps = idealops.decompose(self.ideal(cmd.args[0], cmd), pair_budget=self.budget)
        systems = [c.groebner() for c in comps]
        locus = ExceptionalLocus(self.field)
        for s in systems:
            locus = locus | s.locus
        out = self.base(cmd, locus)
        out.update(ideal=cmd.args[0], components=[self.strs(s.basis) for s in systems],
                   certified_primary=False)
        return out

    def cmd_specialize(self, cmd):
        self.need(cmd, 1, "specialize <ideal> <point>")
        point = self._point(" ".join(cmd.args[1:]), cmd)
        sys_ = self.ideal(cmd.args[0], cmd).groebner(budget=self.budget)
        polys, on_locus = fibres.specialize(sys_, point)
        out = self.base(cmd, sys_.locus)
        out.update(ideal=cmd.args[0], point=[_fraction_str(c) for c in point],
                   basis=self.strs(polys), on_locus=on_locus)
        return out

    def _point(self, text, cmd):
        try:
            return parse_point(text, self.field.m)
        except ParamGBError as exc:
            raise SessionError(str(exc), cmd.line, max(cmd.text.find(text), 0) + 1,
                               type(exc).__name__) from exc

    def _hilbert_json(self, h):
        return {"hp": h.hp_string(), "hilbert_function": h.hilbert_function,
                "stabilization_degree": h.stabilization_degree, "dimension": h.dimension}

    def cmd_hilbert(self, cmd):
        self.need(cmd, 1, "hilbert <ideal>")
        h = fibres.hilbert(self.ideal(cmd.args[0], cmd).groebner(budget=self.budget), self.budget)
        out = self.base(cmd, h.locus)
        out.update(ideal=cmd.args[0], **self._hilbert_json(h))
        return out

    def cmd_sweep(self, cmd):
        self.need(cmd, 2, "sweep <ideal> <points-file>")
        path = Path(cmd.args[1])
        if not path.is_absolute():
            path = self.sess.base_dir / path
        points = read_points(path, self.field.m, cmd)
        rep = fibres.fibre_sweep(self.ideal(cmd.args[0], cmd).groebner(budget=self.budget),
                                 points, self.budget)
        out = self.base(cmd, rep.generic.locus)
        rows = []
        for e in rep.entries:
            row = {"point": [_fraction_str(c) for c in e.point], "on_locus": e.on_locus,
                   "specialized_is_groebner": e.specialized_is_groebner,
                   "matches_generic": e.matches_generic, "error": e.error}
            if e.hilbert is not None:
                row.update(self._hilbert_json(e.hilbert))
            rows.append(row)
        out.update(ideal=cmd.args[0], generic=self._hilbert_json(rep.generic), points=rows)
        return out

    def cmd_brownawell(self, cmd):
        self.need(cmd, 3, "brownawell <n> <m> <D>")
        try:
            n, m, D = (int(a) for a in cmd.args[:3])
        except ValueError:
            raise SessionError("brownawell takes three integers", cmd.line, 1)
        b = idealops.brownawell_bound(n, m, D)
        out = self.base(cmd, [])
        out.update(n=n, m=m, D=D, mu=b.mu, e_prime=b.e_prime,
                   degree_bound=f"{D}*e + {b.e_prime}")
        return out


def read_points(path: Path, m: int, cmd=None) -> list:
    try:
        handle = open(path, newline="")
    except OSError as exc:
        raise SessionError(f"cannot read points file: {exc}", cmd.line if cmd else None, 1)
    points = []
    with handle:
        for k, row in enumerate(csv.reader(handle), 1):
            cells = [c.strip() for c in row if c.strip()]
            if not cells or cells[0].startswith("#"):
                continue
            try:
                points.append(parse_point(",".join(cells), m))
            except ParamGBError as exc:
                raise SessionError(f"{path.name}:{k}: {exc}", cmd.line if cmd else None, 1)
    return points


SWEEP_CSV_FIELDS = ["point", "on_locus", "specialized_is_groebner", "hp", "dimension",
                    "stabilization_degree", "matches_generic", "error"]


def write_sweep_csv(result: dict, handle):
    writer = csv.DictWriter(handle, fieldnames=SWEEP_CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for row in result["points"]:
        writer.writerow({k: (" ".join(row[k]) if k == "point" else row.get(k)) for k in SWEEP_CSV_FIELDS})


def format_text(result: dict) -> str:
    head = result["command"]
    lines = [f"[line {result['line']}] {head}"]
    for k in sorted(result):
        if k in ("command", "line"):
            continue
        lines.append(f"  {k}: {json.dumps(result[k], sort_keys=True)}")
    return "\n".join(lines)


def run(session_path, out_dir=None, order=None, budget=None, fmt="json",
        stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    path = Path(session_path)

    def diagnose(kind, message, line=None, column=None):
        stderr.write(json.dumps({"error": kind, "message": message, "file": str(path),
                                 "line": line, "column": column}, sort_keys=True) + "\n")

    try:
        text = path.read_text()
    except OSError as exc:
        diagnose("IOError", str(exc))
        return 1
    if out_dir is not None:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
    cmd = None
    try:
        sess = parse_session(text, path.parent)
        if not sess.commands:
            return 0
        runner = Runner(sess, order=order, budget=budget)
        index = 0
        for cmd in sess.commands:
            result = runner.run(cmd)
            if result is None:
                continue
            index += 1
            if out_dir is not None:
                stem = f"{index:03d}-{cmd.name}"
                (out_dir / f"{stem}.json").write_text(json.dumps(result, sort_keys=True, indent=2) + "\n")
                if cmd.name == "sweep":
                    with open(out_dir / f"{stem}.csv", "w", newline="") as fh:
                        write_sweep_csv(result, fh)
            elif fmt == "text":
                stdout.write(format_text(result) + "\n")
            else:
                stdout.write(json.dumps(result, sort_keys=True) + "\n")
    except SessionError as exc:
        diagnose(exc.kind, str(exc), exc.line, exc.column)
        return 1
    except BudgetExceeded as exc:
        diagnose("BudgetExceeded", str(exc), cmd.line if cmd else None, 1)
        return 2
    except ParamGBError as exc:
        diagnose(type(exc).__name__, str(exc), cmd.line if cmd else None, 1)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="paramgb", description=__doc__.split("\n")[0])
    ap.add_argument("session", help="session file")
    ap.add_argument("--out", metavar="DIR", help="write one JSON file per command (and CSV for sweeps) here")
    ap.add_argument("--order", choices=ORDERS, help="override the session's monomial order")
    ap.add_argument("--budget", type=int, metavar="N", help="Buchberger pair budget per completion")
    ap.add_argument("--seed", type=int, metavar="N", help="seed for randomized checks (commands are deterministic)")
    ap.add_argument("--format", choices=("json", "text"), default="json")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    return run(args.session, out_dir=args.out, order=args.order, budget=args.budget, fmt=args.format)


if __name__ == "__main__":
    sys.exit(main())
