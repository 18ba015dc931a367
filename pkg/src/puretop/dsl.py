"""The catalogue language: declarations of rings, modules, maps, bilinear forms and checks.

    ring R = F3[u,v,w]/(u*w - v^2);
    ring P = PRODUCT(A, B);
    module M = R^2/((x, 0), (0, y)) degrees=(0, 1);
    module C = R/(x - y);
    map a: R -> S { u -> x^2, v -> x*y, w -> y^2 } gens=(1, x, y) relations=auto one=(1, 0, 0);
    bilinear q on M = ((y));
    check split a expect=Split cite="...";

``parse`` returns a tuple of declarations after resolving every name, so a
program that parses is well formed; ``format_program`` prints it back in
canonical form and ``parse(format_program(p)) == p``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .coeffs import coeff_ring_from_name
from .errors import DSLError
from .expr import BinOp, Neg, Num, Pow, Tup, Var, TokenStream, format_expr, parse_expr, tokenize

CHECK_OPS = {
    "split": "map", "contract": "map", "tensorinj": "map", "descent": "map",
    "fsplit": "ring", "kunz": "ring", "frobalg": "bilinear",
}
REQUIRED = {"contract": ("ideal", "elem"), "tensorinj": ("module",), "descent": ("module",)}
OPTION_KINDS = {"ideal": "exprs", "elem": "expr", "module": "name", "expect": "word",
                "cite": "str", "obstruction": "str"}


# ---------------------------------------------------------------- AST


@dataclass(frozen=True)
class RingDecl:
    name: str
    coeff: str
    variables: tuple
    relations: tuple = ()
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class ProductDecl:
    name: str
    factors: tuple
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class ModuleDecl:
    name: str
    ring: str
    rank: int
    relations: tuple = ()  # columns of length ``rank``
    cyclic: bool = False  # written R/(g1, …)
    degrees: Optional[tuple] = None
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class MapDecl:
    name: str
    source: str
    target: str
    images: tuple  # ((var, expr), …)
    gens: Optional[tuple] = None
    relations: Optional[tuple] = None  # None: derived automatically
    one: Optional[tuple] = None
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class BilinearDecl:
    name: str
    module: str
    matrix: tuple
    pos: tuple = field(default=(0, 0), compare=False)


@dataclass(frozen=True)
class CheckDecl:
    op: str
    target: str
    options: tuple = ()  # ((key, value), …) in source order

    pos: tuple = field(default=(0, 0), compare=False)

    def option(self, key, default=None):
        for k, v in self.options:
            if k == key:
                return v
        return default


# ---------------------------------------------------------------- parser


def _name(ts, what="a name"):
    return ts.expect_kind("NAME", what).text


def _expr_list(ts):
    """'(' expr, … ')' — possibly empty; parsed without tuple grouping at the outer level."""
    ts.expect("(")
    items = []
    if not ts.at(")"):
        items.append(parse_expr(ts))
        while ts.accept(","):
            items.append(parse_expr(ts))
    ts.expect(")")
    return tuple(items)


def _columns(ts):
    """'(' '(' e, … ')' , … ')' — a list of columns."""
    ts.expect("(")
    cols = []
    if not ts.at(")"):
        cols.append(_expr_list(ts))
        while ts.accept(","):
            cols.append(_expr_list(ts))
    ts.expect(")")
    return tuple(cols)


def _int_list(ts):
    ts.expect("(")
    out = []
    if not ts.at(")"):
        out.append(_signed_int(ts))
        while ts.accept(","):
            out.append(_signed_int(ts))
    ts.expect(")")
    return tuple(out)


def _signed_int(ts):
    neg = ts.accept("-")
    v = int(ts.expect_kind("NUM", "an integer").text)
    return -v if neg else v


def _parse_ring(ts, pos):
    name = _name(ts, "a ring name")
    ts.expect("=")
    if ts.at("PRODUCT"):
        ts.next()
        ts.expect("(")
        factors = [_name(ts, "a ring name")]
        while ts.accept(","):
            factors.append(_name(ts, "a ring name"))
        ts.expect(")")
        return ProductDecl(name, tuple(factors), pos)
    t = ts.peek()
    coeff = _name(ts, "a coefficient ring (Q, Fp or Zn)")
    try:
        coeff_ring_from_name(coeff)
    except ValueError:
        raise DSLError(f"unknown coefficient ring {coeff!r}", t.line, t.column) from None
    variables = []
    if ts.accept("["):
        if not ts.at("]"):
            variables.append(_name(ts, "a variable"))
            while ts.accept(","):
                variables.append(_name(ts, "a variable"))
        ts.expect("]")
    rels = ()
    if ts.accept("/"):
        rels = _expr_list(ts)
    return RingDecl(name, coeff, tuple(variables), rels, pos)


def _parse_module(ts, pos):
    name = _name(ts, "a module name")
    ts.expect("=")
    ring = _name(ts, "a ring name")
    rank, cyclic, rels = 1, False, ()
    if ts.accept("^"):
        rank = int(ts.expect_kind("NUM", "a rank").text)
        if ts.accept("/"):
            rels = _columns(ts)
    elif ts.accept("/"):
        cyclic = True
        rels = tuple((g,) for g in _expr_list(ts))
    degrees = None
    while ts.peek().kind == "NAME":
        t = ts.next()
        if t.text != "degrees":
            raise DSLError(f"unknown module option {t.text!r}", t.line, t.column)
        ts.expect("=")
        degrees = _int_list(ts)
    return ModuleDecl(name, ring, rank, rels, cyclic, degrees, pos)


def _parse_map(ts, pos):
    name = _name(ts, "a map name")
    ts.expect(":")
    source = _name(ts, "a source ring")
    ts.expect("->")
    target = _name(ts, "a target ring")
    ts.expect("{")
    images = []
    if not ts.at("}"):
        while True:
            v = _name(ts, "a source variable")
            ts.expect("->")
            images.append((v, parse_expr(ts)))
            if not ts.accept(","):
                break
    ts.expect("}")
    gens = relations = one = None
    while ts.peek().kind == "NAME":
        t = ts.next()
        ts.expect("=")
        if t.text == "gens":
            gens = _expr_list(ts)
        elif t.text == "relations":
            if ts.at("auto"):
                ts.next()
                relations = None
            else:
                relations = _columns(ts)
        elif t.text == "one":
            one = _expr_list(ts)
        else:
            raise DSLError(f"unknown map option {t.text!r}", t.line, t.column)
    return MapDecl(name, source, target, tuple(images), gens, relations, one, pos)


def _parse_bilinear(ts, pos):
    name = _name(ts, "a form name")
    t = ts.peek()
    if _name(ts, "'on'") != "on":
        raise DSLError("expected 'on'", t.line, t.column)
    module = _name(ts, "a module name")
    ts.expect("=")
    return BilinearDecl(name, module, _columns(ts), pos)


def _parse_check(ts, pos):
    t = ts.peek()
    op = _name(ts, "a check name")
    if op not in CHECK_OPS:
        raise DSLError(f"unknown check {op!r}", t.line, t.column)
    target = _name(ts, "the checked object")
    options = []
    while ts.peek().kind == "NAME":
        k = ts.next()
        if k.text not in OPTION_KINDS:
            raise DSLError(f"unknown check option {k.text!r}", k.line, k.column)
        ts.expect("=")
        kind = OPTION_KINDS[k.text]
        if kind == "exprs":
            v = _expr_list(ts)
        elif kind == "expr":
            v = parse_expr(ts)
        elif kind == "name":
            v = _name(ts)
        elif kind == "str":
            v = ts.expect_kind("STR", "a quoted string").text
        else:
            w = ts.peek()
            if w.kind == "STR":
                v = ts.next().text
            else:
                v = _name(ts, "a verdict")
        options.append((k.text, v))
    return CheckDecl(op, target, tuple(options), pos)


_PARSERS = {"ring": _parse_ring, "module": _parse_module, "map": _parse_map,
            "bilinear": _parse_bilinear, "check": _parse_check}


def parse(text: str) -> tuple:
    """Parse and resolve a program; raises DSLError at the first problem."""
    ts = TokenStream(tokenize(text))
    decls = []
    while ts.peek().kind != "EOF":
        t = ts.peek()
        if t.kind != "NAME" or t.text not in _PARSERS:
            raise DSLError(f"expected a declaration, found {t.text!r}", t.line, t.column)
        ts.next()
        decls.append(_PARSERS[t.text](ts, (t.line, t.column)))
        ts.expect(";")
    prog = tuple(decls)
    resolve(prog)
    return prog


# ---------------------------------------------------------------- resolution


def expr_vars(e) -> set:
    if isinstance(e, Var):
        return {e.name}
    if isinstance(e, Num):
        return set()
    if isinstance(e, (Neg,)):
        return expr_vars(e.arg)
    if isinstance(e, Pow):
        return expr_vars(e.base)
    if isinstance(e, BinOp):
        return expr_vars(e.left) | expr_vars(e.right)
    if isinstance(e, Tup):
        out = set()
        for i in e.items:
            out |= expr_vars(i)
        return out
    raise TypeError(e)


class _Scope:
    def __init__(self):
        self.kinds = {}
        self.decls = {}

    def add(self, d, kind):
        name = d.name
        if name in self.kinds:
            raise DSLError(f"{name!r} is already declared", *d.pos)
        self.kinds[name] = kind
        self.decls[name] = d

    def get(self, name, kind, pos):
        if name not in self.kinds:
            raise DSLError(f"unknown identifier {name!r}", *pos)
        if self.kinds[name] != kind:
            raise DSLError(f"{name!r} is a {self.kinds[name]}, not a {kind}", *pos)
        return self.decls[name]

    def ring_element(self, ring_name, e, pos):
        d = self.decls[ring_name]
        if isinstance(d, ProductDecl):
            if isinstance(e, Num):
                return
            if not isinstance(e, Tup) or len(e.items) != len(d.factors):
                raise DSLError(f"element of {ring_name} needs {len(d.factors)} entries", *pos)
            for f, item in zip(d.factors, e.items):
                self.ring_element(f, item, pos)
            return
        if isinstance(e, Tup):
            raise DSLError(f"tuple used as an element of {ring_name}", *pos)
        bad = expr_vars(e) - set(d.variables)
        if bad:
            raise DSLError(f"unknown identifier {sorted(bad)[0]!r} in ring {ring_name}", *pos)


def resolve(prog) -> dict:
    """Name resolution and arity checks; returns the scope's declarations."""
    sc = _Scope()
    for d in prog:
        if isinstance(d, RingDecl):
            if len(set(d.variables)) != len(d.variables):
                raise DSLError("repeated variable", *d.pos)
            sc.add(d, "ring")
            for g in d.relations:
                sc.ring_element(d.name, g, d.pos)
        elif isinstance(d, ProductDecl):
            for f in d.factors:
                if isinstance(sc.get(f, "ring", d.pos), ProductDecl):
                    raise DSLError("nested products are not supported", *d.pos)
            if len(d.factors) < 2:
                raise DSLError("a product needs at least two factors", *d.pos)
            sc.add(d, "ring")
        elif isinstance(d, ModuleDecl):
            r = sc.get(d.ring, "ring", d.pos)
            if isinstance(r, ProductDecl):
                raise DSLError("modules over product rings are not supported", *d.pos)
            for col in d.relations:
                if len(col) != d.rank:
                    raise DSLError(f"relation of length {len(col)} for rank {d.rank}", *d.pos)
                for g in col:
                    sc.ring_element(d.ring, g, d.pos)
            if d.degrees is not None and len(d.degrees) != d.rank:
                raise DSLError("one degree per generator required", *d.pos)
            sc.add(d, "module")
        elif isinstance(d, MapDecl):
            src = sc.get(d.source, "ring", d.pos)
            sc.get(d.target, "ring", d.pos)
            if isinstance(src, ProductDecl):
                raise DSLError("product sources are not supported", *d.pos)
            seen = [v for v, _ in d.images]
            for v in seen:
                if v not in src.variables:
                    raise DSLError(f"unknown identifier {v!r} in ring {d.source}", *d.pos)
            if len(set(seen)) != len(seen) or set(seen) != set(src.variables):
                raise DSLError(f"map needs exactly one image per variable of {d.source}", *d.pos)
            for _, e in d.images:
                sc.ring_element(d.target, e, d.pos)
            for g in d.gens or ():
                sc.ring_element(d.target, g, d.pos)
            n = len(d.gens) if d.gens is not None else None
            if (d.relations is not None or d.one is not None) and n is None:
                raise DSLError("relations and one need gens", *d.pos)
            for col in d.relations or ():
                if len(col) != n:
                    raise DSLError(f"relation of length {len(col)} for {n} generators", *d.pos)
                for g in col:
                    sc.ring_element(d.source, g, d.pos)
            if d.one is not None:
                if len(d.one) != n:
                    raise DSLError(f"one needs {n} coordinates", *d.pos)
                for g in d.one:
                    sc.ring_element(d.source, g, d.pos)
            sc.add(d, "map")
        elif isinstance(d, BilinearDecl):
            m = sc.get(d.module, "module", d.pos)
            if len(d.matrix) != m.rank or any(len(row) != m.rank for row in d.matrix):
                raise DSLError(f"bilinear form needs a {m.rank}x{m.rank} matrix", *d.pos)
            for row in d.matrix:
                for g in row:
                    sc.ring_element(m.ring, g, d.pos)
            sc.add(d, "bilinear")
        elif isinstance(d, CheckDecl):
            sc.get(d.target, CHECK_OPS[d.op], d.pos)
            keys = [k for k, _ in d.options]
            if len(set(keys)) != len(keys):
                raise DSLError("repeated check option", *d.pos)
            for k in REQUIRED.get(d.op, ()):
                if k not in keys:
                    raise DSLError(f"check {d.op} needs {k}=", *d.pos)
            if d.option("module") is not None:
                sc.get(d.option("module"), "module", d.pos)
            if d.op == "contract":
                src = sc.decls[d.target].source
                for g in d.option("ideal"):
                    sc.ring_element(src, g, d.pos)
                sc.ring_element(src, d.option("elem"), d.pos)
    return sc.decls


# ---------------------------------------------------------------- printer

_WORD = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


def _fe(items):
    return "(" + ", ".join(format_expr(e) for e in items) + ")"


def _fcols(cols):
    return "(" + ", ".join(_fe(c) for c in cols) + ")"


def format_decl(d) -> str:
    if isinstance(d, RingDecl):
        s = f"ring {d.name} = {d.coeff}[{','.join(d.variables)}]"
        if d.relations:
            s += "/" + _fe(d.relations)
    elif isinstance(d, ProductDecl):
        s = f"ring {d.name} = PRODUCT({', '.join(d.factors)})"
    elif isinstance(d, ModuleDecl):
        if d.cyclic:
            s = f"module {d.name} = {d.ring}/" + _fe([c[0] for c in d.relations])
        else:
            s = f"module {d.name} = {d.ring}^{d.rank}"
            if d.relations:
                s += "/" + _fcols(d.relations)
        if d.degrees is not None:
            s += " degrees=(" + ", ".join(str(x) for x in d.degrees) + ")"
    elif isinstance(d, MapDecl):
        imgs = ", ".join(f"{v} -> {format_expr(e)}" for v, e in d.images)
        s = f"map {d.name}: {d.source} -> {d.target} {{ {imgs} }}" if imgs else \
            f"map {d.name}: {d.source} -> {d.target} {{ }}"
        if d.gens is not None:
            s += " gens=" + _fe(d.gens)
        if d.relations is not None:
            s += " relations=" + _fcols(d.relations)
        if d.one is not None:
            s += " one=" + _fe(d.one)
    elif isinstance(d, BilinearDecl):
        s = f"bilinear {d.name} on {d.module} = " + _fcols(d.matrix)
    elif isinstance(d, CheckDecl):
        s = f"check {d.op} {d.target}"
        for k, v in d.options:
            kind = OPTION_KINDS[k]
            if kind == "exprs":
                s += f" {k}=" + _fe(v)
            elif kind == "expr":
                s += f" {k}={format_expr(v)}"
            elif kind == "name" or (kind == "word" and _WORD.match(v)):
                s += f" {k}={v}"
            else:
                s += f' {k}="{v}"'
    else:
        raise TypeError(d)
    return s + ";"


def format_program(prog) -> str:
    return "".join(format_decl(d) + "\n" for d in prog)
