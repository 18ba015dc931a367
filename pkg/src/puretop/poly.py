"""Dense-exponent multivariate polynomials over exact coefficient rings."""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .coeffs import CoeffRing, format_coeff
from .errors import LengthMismatch, RingMismatch
from .expr import evaluate, parse_expression_text

MAX_VARS = 16

Monomial = tuple  # tuple[int, ...]


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


@dataclass(frozen=True)
class MonomialOrder:
    """``lex``, ``grevlex`` or ``block``.

    A block order cuts the variables at the indices in ``split`` and compares
    block by block, each by grevlex; earlier blocks are eliminated first.
    """
    kind: str = "grevlex"
    split: tuple = ()

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "block"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if isinstance(self.split, int):
            object.__setattr__(self, "split", (self.split,))

    def key(self, e: Monomial):
        if self.kind == "grevlex":
            return _grevlex_key(e)
        if self.kind == "lex":
            return e
        cuts = (0,) + self.split + (len(e),)
        return tuple(_grevlex_key(e[a:b]) for a, b in zip(cuts, cuts[1:]))

    def __str__(self):
        if self.kind == "block":
            return "block(" + ",".join(map(str, self.split)) + ")"
        return self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


def block_order(*splits: int) -> MonomialOrder:
    return MonomialOrder("block", tuple(splits))


def monomial_cmp(m1: Monomial, m2: Monomial, order: MonomialOrder = GREVLEX) -> int:
    if len(m1) != len(m2):
        raise LengthMismatch(f"monomials of lengths {len(m1)} and {len(m2)}")
    k1, k2 = order.key(tuple(m1)), order.key(tuple(m2))
    return (k1 > k2) - (k1 < k2)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(b, a):
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_degree(e, weights=None) -> int:
    if weights is None:
        return sum(e)
    return sum(x * w for x, w in zip(e, weights))


@dataclass(frozen=True)
class PolyRing:
    names: tuple
    coeff: CoeffRing
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) > MAX_VARS:
            raise ValueError(f"at most {MAX_VARS} variables supported")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"repeated variable names in {self.names}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.names, self.coeff, order)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.const(1)

    def const(self, c) -> "Poly":
        return Poly(self, {(0,) * self.nvars: self.coeff(c)})

    def monomial(self, exps, c=1) -> "Poly":
        return Poly(self, {tuple(exps): self.coeff(c)})

    def gen(self, i: int) -> "Poly":
        e = [0] * self.nvars
        e[i] = 1
        return self.monomial(e)

    def var(self, name: str) -> "Poly":
        return self.gen(self.names.index(name))

    def gens(self) -> list:
        return [self.gen(i) for i in range(self.nvars)]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def from_expr(self, e) -> "Poly":
        def var(name):
            if name not in self.names:
                raise KeyError(f"unknown variable {name!r} in ring {self.names}")
            return self.var(name)

        def num(n, d=1):
            return self.const(self.coeff(Fraction(n, d)) if d != 1 else n)
        return evaluate(e, var, num)

    def parse(self, text: str) -> "Poly":
        return self.from_expr(parse_expression_text(text))

    def __call__(self, x) -> "Poly":
        if isinstance(x, Poly):
            if x.ring != self:
                raise RingMismatch(f"{x} lives in {x.ring}, not {self}")
            return x
        if isinstance(x, str):
            return self.parse(x)
        return self.const(x)

    def __str__(self):
        return f"{self.coeff.name}[{','.join(self.names)}]"


class Poly:
    """Immutable polynomial; terms are stored sorted by the ring's order, largest first."""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict, _normalized: bool = False):
        self.ring = ring
        if not _normalized:
            cz = ring.coeff
            terms = {m: c for m, c in ((tuple(m), cz(c)) for m, c in terms.items()) if not cz.is_zero(c)}
            for m in terms:
                if len(m) != ring.nvars:
                    raise LengthMismatch(f"monomial {m} in a ring with {ring.nvars} variables")
        key = ring.order.key
        self._terms = dict(sorted(terms.items(), key=lambda t: key(t[0]), reverse=True))
        self._hash = None

    # -- basic access
    @property
    def terms(self) -> dict:
        return self._terms

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def lm(self):
        return next(iter(self._terms))

    @property
    def lc(self):
        return self._terms[self.lm]

    def coefficient(self, mono):
        return self._terms.get(tuple(mono), self.ring.coeff.zero)

    def constant_term(self):
        return self.coefficient((0,) * self.ring.nvars)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def degree(self, weights=None) -> int:
        if not self._terms:
            return -1
        return max(mono_degree(m, weights) for m in self._terms)

    def is_homogeneous(self, weights=None) -> bool:
        return len({mono_degree(m, weights) for m in self._terms}) <= 1

    def support_vars(self) -> set:
        return {i for m in self._terms for i, x in enumerate(m) if x}

    # -- arithmetic
    def _check(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise RingMismatch(f"{self.ring} vs {other.ring}")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._check(other)
        add = self.ring.coeff.add
        t = dict(self._terms)
        for m, c in other._terms.items():
            t[m] = add(t[m], c) if m in t else c
        return Poly(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.coeff.neg
        return Poly(self.ring, {m: neg(c) for m, c in self._terms.items()}, _normalized=True)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        cz = self.ring.coeff
        t = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mono_mul(m1, m2)
                c = cz.mul(c1, c2)
                t[m] = cz.add(t[m], c) if m in t else c
        return Poly(self.ring, t)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c):
        cz = self.ring.coeff
        return Poly(self.ring, {m: cz.mul(v, c) for m, v in self._terms.items()})

    def mul_term(self, mono, c):
        cz = self.ring.coeff
        return Poly(self.ring, {mono_mul(m, mono): cz.mul(v, c) for m, v in self._terms.items()})

    def monic(self):
        if not self._terms:
            return self
        return self.scale(self.ring.coeff.inv(self.lc))

    def subs(self, images: Sequence["Poly"], target: PolyRing = None) -> "Poly":
        """Evaluate at ``images`` (one polynomial per variable, all in ``target``)."""
        if len(images) != self.ring.nvars:
            raise LengthMismatch(f"need {self.ring.nvars} images, got {len(images)}")
        if target is None:
            target = images[0].ring if images else self.ring
        result = target.zero()
        cache = {}
        for m, c in self._terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    if (i, e) not in cache:
                        cache[(i, e)] = images[i] ** e
                    term = term * cache[(i, e)]
            result = result + term
        return result

    def embed(self, ring: PolyRing, positions: Sequence[int]) -> "Poly":
        """Move into ``ring`` sending variable i to variable ``positions[i]``."""
        t = {}
        for m, c in self._terms.items():
            e = [0] * ring.nvars
            for i, x in enumerate(m):
                if x:
                    e[positions[i]] += x
            t[tuple(e)] = c
        return Poly(ring, t)

    def derivative(self, i: int) -> "Poly":
        cz = self.ring.coeff
        t = {}
        for m, c in self._terms.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                t[tuple(e)] = cz.mul(c, cz(m[i]))
        return Poly(self.ring, t)

    def evaluate_at_zero(self):
        return self.constant_term()

    # -- comparison
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, tuple(self._terms.items())))
        return self._hash

    def __str__(self):
        if not self._terms:
            return "0"
        names = self.ring.names
        out = []
        for m, c in self._terms.items():
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(m) if e
            )
            neg = isinstance(c, Fraction) and c < 0
            a = -c if neg else c
            cs = format_coeff(a)
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            else:
                body = f"{cs}*{mono}"
            out.append(("-" if neg else "+", body))
        s = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"Poly({self})"
