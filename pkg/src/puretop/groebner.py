"""Buchberger's algorithm and the ideal/module toolkit built on it.

One engine serves ideals and submodules of free modules: a term is a pair
``(position, monomial)`` and an element is a dict from terms to
coefficients.  Ideals use position 0 throughout.  Module orders are given as
sort keys on ``(position, monomial)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Callable, Sequence

from .errors import RingMismatch, UnsupportedCoefficients
from .poly import (
    GREVLEX,
    MonomialOrder,
    Poly,
    PolyRing,
    block_order,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
)

# ---------------------------------------------------------------- engine


class _Elem:
    __slots__ = ("terms", "lt", "lc", "sugar")

    def __init__(self, terms, lt, lc, sugar):
        self.terms = terms
        self.lt = lt
        self.lc = lc
        self.sugar = sugar


def _lead(terms, key):
    return max(terms, key=key)


def _sub_multiple(p, g, q, f, cz):
    """p -= f * x^q * g, in place."""
    for (pos, m), v in g.items():
        t = (pos, mono_mul(m, q))
        c = cz.sub(p[t], cz.mul(f, v)) if t in p else cz.neg(cz.mul(f, v))
        if cz.is_zero(c):
            p.pop(t, None)
        else:
            p[t] = c


class _Basis:
    """Leading-term index for reduction."""

    def __init__(self, cz, key):
        self.cz = cz
        self.key = key
        self.by_pos: dict = {}

    def add(self, e: _Elem):
        self.by_pos.setdefault(e.lt[0], []).append(e)

    def divisor(self, t):
        for e in self.by_pos.get(t[0], ()):
            if mono_divides(e.lt[1], t[1]):
                return e
        return None

    def reduce(self, p: dict, full: bool = True) -> dict:
        cz, key = self.cz, self.key
        p = dict(p)
        rem = {}
        while p:
            t = _lead(p, key)
            g = self.divisor(t)
            if g is None:
                if not full:
                    rem.update(p)
                    return rem
                rem[t] = p.pop(t)
                continue
            f = cz.div(p[t], g.lc)
            _sub_multiple(p, g.terms, mono_div(t[1], g.lt[1]), f, cz)
        return rem


def _make_elem(terms, key, cz, sugar=None):
    lt = _lead(terms, key)
    inv = cz.inv(terms[lt])
    terms = {t: cz.mul(c, inv) for t, c in terms.items()}
    if sugar is None:
        sugar = max(sum(m) for _, m in terms)
    return _Elem(terms, lt, cz.one, sugar)


def buchberger(gens: Sequence[dict], key: Callable, cz, ideal_case: bool = False) -> list[dict]:
    """Reduced Gröbner basis of the span of ``gens`` (dicts ``{(pos, mono): c}``).

    Sugar selection with lexicographic tie-break on pair indices; Buchberger's
    product criterion (ideals only) and chain criterion.
    """
    if not cz.is_field:
        raise UnsupportedCoefficients(f"Gröbner bases need field coefficients, not {cz.name}")
    basis = _Basis(cz, key)
    G: list[_Elem] = []
    pairs: set = set()

    def add(e):
        idx = len(G)
        G.append(e)
        basis.add(e)
        for i in range(idx):
            if G[i] is not None and G[i].lt[0] == e.lt[0]:
                pairs.add((i, idx))

    for g in gens:
        g = {t: c for t, c in g.items() if not cz.is_zero(c)}
        if not g:
            continue
        r = basis.reduce(g)
        if r:
            add(_make_elem(r, key, cz, sugar=max(sum(m) for _, m in g)))

    def pair_sugar(ij):
        i, j = ij
        a, b = G[i], G[j]
        l = mono_lcm(a.lt[1], b.lt[1])
        return max(a.sugar + sum(l) - sum(a.lt[1]), b.sugar + sum(l) - sum(b.lt[1]))

    while pairs:
        ij = min(pairs, key=lambda p: (pair_sugar(p), p))
        pairs.discard(ij)
        i, j = ij
        a, b = G[i], G[j]
        l = mono_lcm(a.lt[1], b.lt[1])
        if ideal_case and all(x == 0 or y == 0 for x, y in zip(a.lt[1], b.lt[1])):
            continue
        chain = False
        for k, c in enumerate(G):
            if k in (i, j) or c.lt[0] != a.lt[0]:
                continue
            if mono_divides(c.lt[1], l) and (min(i, k), max(i, k)) not in pairs \
                    and (min(j, k), max(j, k)) not in pairs:
                chain = True
                break
        if chain:
            continue
        s = dict()
        for t, v in a.terms.items():
            s[(t[0], mono_mul(t[1], mono_div(l, a.lt[1])))] = v
        _sub_multiple(s, b.terms, mono_div(l, b.lt[1]), cz.one, cz)
        if not s:
            continue
        r = basis.reduce(s)
        if r:
            add(_make_elem(r, key, cz, sugar=pair_sugar(ij)))

    # interreduce: minimal basis, then tail reduction
    G.sort(key=lambda e: key(e.lt))
    minimal: list[_Elem] = []
    for idx, e in enumerate(G):
        if any(o.lt[0] == e.lt[0] and mono_divides(o.lt[1], e.lt[1]) for o in G[:idx]):
            continue
        minimal.append(e)
    out = []
    for e in minimal:
        others = _Basis(cz, key)
        for o in minimal:
            if o is not e:
                others.add(o)
        tail = {t: c for t, c in e.terms.items() if t != e.lt}
        r = others.reduce(tail)
        r[e.lt] = cz.one
        out.append(r)
    out.sort(key=lambda d: key(_lead(d, key)), reverse=True)
    return out


def _poly_key(order: MonomialOrder):
    k = order.key
    return lambda t: k(t[1])


def _raw(f: Poly, pos: int = 0) -> dict:
    return {(pos, m): c for m, c in f.items()}


def _unraw(ring: PolyRing, d: dict) -> Poly:
    return Poly(ring, {m: c for (_, m), c in d.items()})


# ---------------------------------------------------------------- ideals


@dataclass(frozen=True, eq=False)
class Ideal:
    """Ideal of a polynomial ring, with a write-once Gröbner-basis cache per order."""
    ring: PolyRing
    generators: tuple
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __init__(self, ring: PolyRing, generators=()):
        gens = []
        for g in generators:
            g = ring(g)
            if g:
                gens.append(g)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "generators", tuple(gens))
        object.__setattr__(self, "_cache", {})

    def basis(self, order: MonomialOrder = None) -> tuple:
        order = order or self.ring.order
        if order not in self._cache:
            key = _poly_key(order)
            gb = buchberger([_raw(g) for g in self.generators], key, self.ring.coeff, ideal_case=True)
            self._cache[order] = tuple(_unraw(self.ring, d) for d in gb)
        return self._cache[order]

    @property
    def cached_groebner(self):
        return self._cache.get(self.ring.order)

    def reducer(self, order: MonomialOrder = None) -> _Basis:
        order = order or self.ring.order
        b = _Basis(self.ring.coeff, _poly_key(order))
        for g in self.basis(order):
            b.add(_make_elem(_raw(g), b.key, b.cz))
        return b

    def normal_form(self, f: Poly) -> Poly:
        f = self.ring(f)
        if not self.generators:
            return f
        key = ("reducer", self.ring.order)
        if key not in self._cache:
            self._cache[key] = self.reducer()
        return _unraw(self.ring, self._cache[key].reduce(_raw(f)))

    def contains(self, f) -> bool:
        return self.normal_form(f).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        return self.contains_ideal(other) and other.contains_ideal(self)

    def is_unit_ideal(self) -> bool:
        return self.contains(self.ring.one())

    def __add__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        return Ideal(self.ring, [a * b for a in self.generators for b in other.generators])

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"Ideal{self}"


def groebner_basis(I: Ideal, order: MonomialOrder = None) -> Ideal:
    order = order or I.ring.order
    gb = I.basis(order)
    J = Ideal(I.ring, gb)
    J._cache[order] = gb
    return J


def normal_form(f: Poly, I: Ideal) -> Poly:
    return I.normal_form(f)


def ideal_member(f: Poly, I: Ideal) -> bool:
    return I.contains(f)


def division_normal_form(f: Poly, basis: Sequence[Poly]) -> Poly:
    """Remainder of f on division by ``basis`` (no Gröbner completion)."""
    ring = f.ring
    key = _poly_key(ring.order)
    b = _Basis(ring.coeff, key)
    for g in basis:
        if g:
            b.add(_make_elem(_raw(g), key, ring.coeff))
    return _unraw(ring, b.reduce(_raw(f)))


def is_groebner_basis(basis: Sequence[Poly]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    basis = [g for g in basis if g]
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            f, g = basis[i], basis[j]
            ring = f.ring
            lcm = mono_lcm(f.lm, g.lm)
            sp = (f.mul_term(mono_div(lcm, f.lm), ring.coeff.inv(f.lc))
                  - g.mul_term(mono_div(lcm, g.lm), ring.coeff.inv(g.lc)))
            if division_normal_form(sp, basis):
                return False
    return True


def eliminate(I: Ideal, keep: Sequence[str]) -> Ideal:
    """Generators of I intersected with the subring on the ``keep`` variables."""
    ring = I.ring
    keep = [ring.index(k) if isinstance(k, str) else k for k in keep]
    drop = [i for i in range(ring.nvars) if i not in keep]
    perm = drop + keep
    names = tuple(ring.names[i] for i in perm)
    elim_ring = PolyRing(names, ring.coeff, block_order(len(drop)))
    where = {old: new for new, old in enumerate(perm)}
    moved = Ideal(elim_ring, [g.embed(elim_ring, [where[i] for i in range(ring.nvars)])
                              for g in I.generators])
    back = [perm[i] for i in range(ring.nvars)]
    out = []
    for g in moved.basis():
        if not (g.support_vars() & set(range(len(drop)))):
            out.append(g.embed(ring, back))
    return Ideal(ring, out)


def intersect(I: Ideal, J: Ideal) -> Ideal:
    """I ∩ J by eliminating t from t·I + (1 − t)·J."""
    ring = I.ring
    if J.ring != ring:
        raise RingMismatch(f"{I.ring} vs {J.ring}")
    big = PolyRing(("_t",) + ring.names, ring.coeff, block_order(1))
    shift = list(range(1, ring.nvars + 1))
    t = big.gen(0)
    gens = [t * g.embed(big, shift) for g in I.generators]
    gens += [(1 - t) * g.embed(big, shift) for g in J.generators]
    E = eliminate(Ideal(big, gens), big.names[1:])
    return Ideal(ring, [_drop_first(g, ring) for g in E.generators])


def _drop_first(g: Poly, ring: PolyRing) -> Poly:
    return Poly(ring, {m[1:]: c for m, c in g.items()})


def find_grading(relations: Sequence[Poly], nvars: int, max_weight: int = 8):
    """Smallest positive weights making every relation homogeneous, or None."""
    rels = [r for r in relations if r]
    if not rels:
        return (1,) * nvars
    best = None
    for total in range(nvars, nvars * max_weight + 1):
        for w in _compositions(total, nvars, max_weight):
            if all(r.is_homogeneous(w) for r in rels):
                return w
    return best


def _compositions(total, parts, cap):
    if parts == 1:
        if 1 <= total <= cap:
            yield (total,)
        return
    for first in range(1, min(cap, total - parts + 1) + 1):
        for rest in _compositions(total - first, parts - 1, cap):
            yield (first,) + rest


class QuotientRing:
    """R = k[x₁..x_d]/I with a fixed monomial order and optional positive grading."""

    def __init__(self, ring: PolyRing, relations=(), weights=None, name: str = None):
        self.ring = ring
        self.ideal = relations if isinstance(relations, Ideal) else Ideal(ring, relations)
        self.name = name
        if weights is not None:
            weights = tuple(int(w) for w in weights)
            if len(weights) != ring.nvars or any(w <= 0 for w in weights):
                raise ValueError(f"weights {weights} must be positive, one per variable")
            for g in self.ideal.generators:
                if not g.is_homogeneous(weights):
                    from .errors import NotGraded
                    raise NotGraded(f"relation {g} is not homogeneous for weights {weights}")
        self.weights = weights

    @classmethod
    def polynomial(cls, names, coeff, relations=(), weights=None, order=GREVLEX, name=None):
        ring = PolyRing(tuple(names), coeff, order)
        rels = [ring(r) for r in relations]
        return cls(ring, rels, weights, name)

    @property
    def coeff(self):
        return self.ring.coeff

    @property
    def names(self):
        return self.ring.names

    @property
    def nvars(self):
        return self.ring.nvars

    @property
    def relations(self) -> Ideal:
        return self.ideal

    def graded(self) -> "QuotientRing":
        """Same ring with a grading attached (auto-detected when absent)."""
        if self.weights is not None:
            return self
        w = find_grading(self.ideal.generators, self.nvars)
        if w is None:
            from .errors import NotGraded
            raise NotGraded(f"no positive grading makes the relations of {self} homogeneous")
        return QuotientRing(self.ring, self.ideal, w, self.name)

    def with_weights(self, weights) -> "QuotientRing":
        return QuotientRing(self.ring, self.ideal, weights, self.name)

    def __call__(self, x) -> Poly:
        return self.nf(self.ring(x))

    def nf(self, f: Poly) -> Poly:
        return self.ideal.normal_form(f)

    def is_zero(self, f) -> bool:
        return self.nf(self.ring(f)).is_zero()

    def eq(self, a, b) -> bool:
        return self.is_zero(self.ring(a) - self.ring(b))

    def one(self) -> Poly:
        return self.ring.one()

    def zero(self) -> Poly:
        return self.ring.zero()

    def gens(self):
        return self.ring.gens()

    def parse(self, text) -> Poly:
        return self.nf(self.ring.parse(text))

    def from_expr(self, e) -> Poly:
        return self.nf(self.ring.from_expr(e))

    def ideal_of(self, gens) -> Ideal:
        """Ideal of the ambient polynomial ring generated by ``gens`` and the relations."""
        return Ideal(self.ring, list(gens) + list(self.ideal.generators))

    def contains(self, f, gens) -> bool:
        return self.ideal_of(gens).contains(f)

    def standard_monomials(self, max_degree: int):
        """Monomials of (standard) degree < max_degree outside the leading ideal."""
        lts = [g.lm for g in self.ideal.basis()]
        out = []
        for e in iproduct(range(max_degree), repeat=self.nvars):
            if sum(e) < max_degree and not any(mono_divides(l, e) for l in lts):
                out.append(e)
        return out

    def hilbert_function(self, degree: int) -> int:
        w = self.graded().weights
        lts = [g.lm for g in self.ideal.basis()]
        return sum(1 for e in monomials_of_degree(w, degree)
                   if not any(mono_divides(l, e) for l in lts))

    def __str__(self):
        rel = ", ".join(str(g) for g in self.ideal.generators)
        return f"{self.ring}/({rel})" if rel else str(self.ring)

    def __repr__(self):
        return f"QuotientRing({self})"


def monomials_of_degree(weights, degree):
    """All exponent vectors of weighted degree ``degree``."""
    n = len(weights)

    def go(i, left):
        if i == n:
            if left == 0:
                yield ()
            return
        w = weights[i]
        for e in range(left // w + 1):
            for rest in go(i + 1, left - e * w):
                yield (e,) + rest
    if degree < 0:
        return []
    return list(go(0, degree))


class ProductRing:
    """A finite product of quotient rings; elements are tuples, one entry per factor."""

    def __init__(self, factors: Sequence[QuotientRing], name: str = None):
        self.factors = tuple(factors)
        self.name = name
        coeffs = {f.coeff for f in self.factors}
        if len(coeffs) != 1:
            raise RingMismatch("factors of a product must share one coefficient ring")

    @property
    def coeff(self):
        return self.factors[0].coeff

    def nf(self, x):
        return tuple(f.nf(f.ring(c)) for f, c in zip(self.factors, x))

    def is_zero(self, x) -> bool:
        return all(f.is_zero(c) for f, c in zip(self.factors, x))

    def eq(self, a, b) -> bool:
        return all(f.eq(x, y) for f, x, y in zip(self.factors, a, b))

    def one(self):
        return tuple(f.one() for f in self.factors)

    def zero(self):
        return tuple(f.zero() for f in self.factors)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def mul(self, a, b):
        return tuple(f.nf(x * y) for f, x, y in zip(self.factors, a, b))

    def __str__(self):
        return " x ".join(f"({f})" for f in self.factors)


# ---------------------------------------------------------------- modules

Column = tuple  # tuple[Poly, ...] of length = rank


def _module_key(order: MonomialOrder, image_rank: int = None):
    """TOP order; with ``image_rank`` the first positions form an eliminated block."""
    k = order.key
    if image_rank is None:
        return lambda t: (k(t[1]), -t[0])
    return lambda t: (t[0] < image_rank, k(t[1]), -t[0])


def _col_raw(col, offset=0) -> dict:
    d = {}
    for i, f in enumerate(col):
        for m, c in f.items():
            d[(i + offset, m)] = c
    return d


def _raw_to_col(ring: PolyRing, d: dict, rank: int, offset: int = 0) -> tuple:
    parts = [dict() for _ in range(rank)]
    for (pos, m), c in d.items():
        parts[pos - offset][m] = c
    return tuple(Poly(ring, p) for p in parts)


class Submodule:
    """Submodule of R^n (R a QuotientRing) spanned by columns, plus I·R^n."""

    def __init__(self, R: QuotientRing, rank: int, columns: Sequence[Column]):
        self.R = R
        self.rank = rank
        self.columns = tuple(tuple(R.ring(x) for x in c) for c in columns)
        for c in self.columns:
            if len(c) != rank:
                raise ValueError(f"column of length {len(c)} in a rank-{rank} module")
        self._reducer = None

    def _gens_raw(self):
        gens = [_col_raw(c) for c in self.columns]
        for g in self.R.ideal.basis() if self.R.ideal.generators else ():
            for i in range(self.rank):
                gens.append(_raw(g, i))
        return gens

    @property
    def reducer(self) -> _Basis:
        if self._reducer is None:
            key = _module_key(self.R.ring.order)
            gb = buchberger(self._gens_raw(), key, self.R.coeff)
            b = _Basis(self.R.coeff, key)
            for d in gb:
                b.add(_make_elem(d, key, self.R.coeff))
            self._reducer = b
        return self._reducer

    def reduce(self, vec) -> tuple:
        d = self.reducer.reduce(_col_raw([self.R.ring(x) for x in vec]))
        return _raw_to_col(self.R.ring, d, self.rank)

    def contains(self, vec) -> bool:
        return all(x.is_zero() for x in self.reduce(vec))

    def leading_terms(self):
        return [e.lt for es in self.reducer.by_pos.values() for e in es]

    def is_everything(self) -> bool:
        one = self.R.ring.one()
        zero = self.R.ring.zero()
        return all(self.contains(tuple(one if j == i else zero for j in range(self.rank)))
                   for i in range(self.rank))


def syzygies(columns: Sequence[Column], R: QuotientRing, nrows: int = None) -> list[Column]:
    """Generators of {v : Σ v_j·columns[j] = 0 in R^n}.

    Relations of R enter as extra generators I·e_i (augmentation); the syzygy
    part is read off an elimination order on the image block.
    """
    cols = [tuple(R.ring(x) for x in c) for c in columns]
    k = len(cols)
    n = nrows if nrows is not None else (len(cols[0]) if cols else 0)
    if k == 0:
        return []
    ring = R.ring
    gens = []
    for j, c in enumerate(cols):
        d = _col_raw(c)
        d[(n + j, (0,) * ring.nvars)] = R.coeff.one
        gens.append(d)
    if R.ideal.generators:
        for g in R.ideal.basis():
            for i in range(n):
                gens.append(_raw(g, i))
    key = _module_key(ring.order, image_rank=n)
    gb = buchberger(gens, key, R.coeff)
    out = []
    seen = set()
    for d in gb:
        if _lead(d, key)[0] < n:
            continue
        v = tuple(R.nf(x) for x in _raw_to_col(ring, d, k, offset=n))
        if any(x for x in v) and v not in seen:
            seen.add(v)
            out.append(v)
    return out


def lift(target: Column, columns: Sequence[Column], R: QuotientRing):
    """Coefficients c with Σ c_j·columns[j] = target in R^n, or None if impossible."""
    ring = R.ring
    target = tuple(ring(x) for x in target)
    n = len(target)
    cols = [tuple(ring(x) for x in c) for c in columns]
    k = len(cols)
    gens = []
    for j, c in enumerate(cols):
        d = _col_raw(c)
        d[(n + j, (0,) * ring.nvars)] = R.coeff.one
        gens.append(d)
    if R.ideal.generators:
        for g in R.ideal.basis():
            for i in range(n):
                gens.append(_raw(g, i))
    key = _module_key(ring.order, image_rank=n)
    gb = buchberger(gens, key, R.coeff)
    basis = _Basis(R.coeff, key)
    for d in gb:
        e = _make_elem(d, key, R.coeff)
        if e.lt[0] < n:
            basis.add(e)
    cz = R.coeff
    p = _col_raw(target)
    while True:
        image = [t for t in p if t[0] < n]
        if not image:
            break
        t = max(image, key=key)
        g = basis.divisor(t)
        if g is None:
            return None
        _sub_multiple(p, g.terms, mono_div(t[1], g.lt[1]), cz.div(p[t], g.lc), cz)
    # invariant: image(p) - Σ track_j·columns[j] = target
    coeffs = _raw_to_col(ring, p, k, offset=n)
    return tuple(R.nf(-c) for c in coeffs)


def ideal_lift(f: Poly, gens: Sequence[Poly], R: QuotientRing):
    """Coefficients a with Σ a_i·gens[i] = f in R, or None."""
    return lift((f,), [(g,) for g in gens], R)


def annihilator_of_element(h: Poly, R: QuotientRing) -> Ideal:
    """(0 :_R h) as an ideal of the ambient ring (relations included)."""
    gens = [v[0] for v in syzygies([(h,)], R, nrows=1)]
    return R.ideal_of(gens)


def colon_unit_vector(i: int, M: Submodule) -> Ideal:
    """{r : r·e_i ∈ M}."""
    R = M.R
    e = tuple(R.ring.one() if j == i else R.ring.zero() for j in range(M.rank))
    syz = syzygies([e] + list(M.columns), R, nrows=M.rank)
    return R.ideal_of([v[0] for v in syz])


# ---------------------------------------------------------------- ring maps


def contract(phi, J) -> Ideal:
    """φ⁻¹(J) as an ideal of the source presentation.

    ``phi`` exposes ``source`` (QuotientRing), ``target`` (QuotientRing or
    ProductRing) and ``images`` (per source variable: a Poly, or a tuple for
    product targets).  For products, ``J`` is a sequence of ideals, one per
    factor, and the componentwise contractions are intersected.
    """
    src = phi.source
    if isinstance(phi.target, ProductRing):
        parts = []
        for idx, factor in enumerate(phi.target.factors):
            imgs = [img[idx] for img in phi.images]
            parts.append(_contract_one(src, factor, imgs, J[idx]))
        out = parts[0]
        for p in parts[1:]:
            out = intersect(out, p)
        return src.ideal_of(out.generators)
    return _contract_one(src, phi.target, phi.images, J)


def _contract_one(src: QuotientRing, tgt: QuotientRing, images, J) -> Ideal:
    nt, ns = tgt.nvars, src.nvars
    names = tuple(f"_t{i}" for i in range(nt)) + tuple(f"_s{i}" for i in range(ns))
    graph = PolyRing(names, src.coeff, block_order(nt))
    tpos = list(range(nt))
    gens = [g.embed(graph, tpos) for g in tgt.ideal.generators]
    jgens = J.generators if isinstance(J, Ideal) else J
    gens += [tgt.ring(g).embed(graph, tpos) for g in jgens]
    for i, img in enumerate(images):
        gens.append(graph.gen(nt + i) - tgt.ring(img).embed(graph, tpos))
    E = eliminate(Ideal(graph, gens), names[nt:])
    out = [Poly(src.ring, {m[nt:]: c for m, c in g.items()}) for g in E.generators]
    return src.ideal_of(out)
