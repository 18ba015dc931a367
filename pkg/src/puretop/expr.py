"""Tokenizer and arithmetic-expression syntax shared by the DSL and ``PolyRing.parse``."""
from dataclasses import dataclass
import re

from .errors import DSLError


@dataclass(frozen=True)
class Token:
    kind: str  # NAME, NUM, STR, OP, EOF
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<str>"[^"\n]*")
  | (?P<op>->|[-+*^/(){}\[\],;=:])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, col = 1, 1
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise DSLError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        chunk = m.group()
        if kind == "nl":
            line, col = line + 1, 1
        else:
            if kind == "num":
                tokens.append(Token("NUM", chunk, line, col))
            elif kind == "name":
                tokens.append(Token("NAME", chunk, line, col))
            elif kind == "str":
                tokens.append(Token("STR", chunk[1:-1], line, col))
            elif kind == "op":
                tokens.append(Token("OP", chunk, line, col))
            col += len(chunk)
        pos = m.end()
    tokens.append(Token("EOF", "", line, col))
    return tokens


# ---------------------------------------------------------------- AST

@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: object


@dataclass(frozen=True)
class BinOp:
    op: str  # + - * /
    left: object
    right: object


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Tup:
    """Element of a product ring, one entry per factor."""
    items: tuple


_PREC = {"+": 1, "-": 1, "*": 2, "/": 2}


def format_expr(e, prec: int = 0) -> str:
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Tup):
        return "(" + ", ".join(format_expr(i) for i in e.items) + ")"
    if isinstance(e, Neg):
        s = "-" + format_expr(e.arg, 3)
        return f"({s})" if prec > 1 else s
    if isinstance(e, Pow):
        s = f"{format_expr(e.base, 4)}^{e.exponent}"
        return f"({s})" if prec > 3 else s
    if isinstance(e, BinOp):
        p = _PREC[e.op]
        # right operand binds tighter to keep - and / left associative
        sep = f" {e.op} " if p == 1 else e.op
        s = format_expr(e.left, p) + sep + format_expr(e.right, p + 1)
        return f"({s})" if p < prec else s
    raise TypeError(f"not an expression: {e!r}")


class TokenStream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self, k: int = 0) -> Token:
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def next(self) -> Token:
        t = self.tokens[self.i]
        if t.kind != "EOF":
            self.i += 1
        return t

    def at(self, text: str) -> bool:
        t = self.peek()
        return t.kind in ("OP", "NAME") and t.text == text

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.next()
            return True
        return False

    def expect(self, text: str) -> Token:
        t = self.peek()
        if not self.at(text):
            raise DSLError(f"expected {text!r}, found {t.text or 'end of input'!r}", t.line, t.column)
        return self.next()

    def expect_kind(self, kind: str, what: str) -> Token:
        t = self.peek()
        if t.kind != kind:
            raise DSLError(f"expected {what}, found {t.text or 'end of input'!r}", t.line, t.column)
        return self.next()

    def error(self, message: str):
        t = self.peek()
        return DSLError(message, t.line, t.column)


def parse_expr(ts: TokenStream):
    e = _term(ts)
    while ts.at("+") or ts.at("-"):
        op = ts.next().text
        e = BinOp(op, e, _term(ts))
    return e


def _term(ts):
    e = _unary(ts)
    while ts.at("*") or ts.at("/"):
        op = ts.next().text
        e = BinOp(op, e, _unary(ts))
    return e


def _unary(ts):
    if ts.accept("-"):
        return Neg(_unary(ts))
    if ts.accept("+"):
        return _unary(ts)
    return _power(ts)


def _power(ts):
    base = _atom(ts)
    if ts.accept("^"):
        t = ts.expect_kind("NUM", "integer exponent")
        return Pow(base, int(t.text))
    return base


def _atom(ts):
    t = ts.peek()
    if t.kind == "NUM":
        ts.next()
        return Num(int(t.text))
    if t.kind == "NAME":
        ts.next()
        return Var(t.text)
    if ts.accept("("):
        first = parse_expr(ts)
        if ts.accept(","):
            items = [first, parse_expr(ts)]
            while ts.accept(","):
                items.append(parse_expr(ts))
            ts.expect(")")
            return Tup(tuple(items))
        ts.expect(")")
        return first
    raise DSLError(f"expected an expression, found {t.text or 'end of input'!r}", t.line, t.column)


def parse_expression_text(text: str):
    ts = TokenStream(tokenize(text))
    e = parse_expr(ts)
    if ts.peek().kind != "EOF":
        raise ts.error(f"trailing input {ts.peek().text!r}")
    return e


def evaluate(e, var, num):
    """Fold an expression with callbacks ``var(name)`` and ``num(n, d=1)``.

    Values must support ``+ - *`` and ``** int``; ``/`` is only allowed by an
    integer literal and is delegated to ``value * num_inverse``.
    """
    def go(x):
        if isinstance(x, Num):
            return num(x.value)
        if isinstance(x, Var):
            return var(x.name)
        if isinstance(x, Neg):
            return -go(x.arg)
        if isinstance(x, Pow):
            return go(x.base) ** x.exponent
        if isinstance(x, Tup):
            raise DSLError("tuple expression used where a single ring element was expected")
        if isinstance(x, BinOp):
            a = go(x.left)
            if x.op == "/":
                if not isinstance(x.right, Num):
                    raise DSLError("division is only allowed by integer literals")
                return a * num(1, x.right.value)
            b = go(x.right)
            if x.op == "+":
                return a + b
            if x.op == "-":
                return a - b
            return a * b
        raise TypeError(x)
    return go(e)
