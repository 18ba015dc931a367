"""Turn parsed declarations into rings, modules, maps and Frobenius-type specs."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coeffs import coeff_ring_from_name
from .dsl import BilinearDecl, MapDecl, ModuleDecl, ProductDecl, RingDecl
from .errors import DSLError, PuretopError
from .expr import Tup, evaluate
from .finite import FiniteModule, FiniteRing, FiniteRingMap
from .frobalg import FiniteModuleSpec, FrobAlgSpec
from .groebner import ProductRing, QuotientRing
from .modules import ModulePresentation
from .purity import RingMapSpec, with_presentation


class _FElem:
    """An element of a finite ring, with operator overloading for expression folding."""
    __slots__ = ("R", "i")

    def __init__(self, R, i):
        self.R, self.i = R, int(i)

    def _lift(self, o):
        return o if isinstance(o, _FElem) else _FElem(self.R, self.R.from_int(o))

    def __add__(self, o):
        return _FElem(self.R, self.R.ring.add[self.i, self._lift(o).i])

    def __sub__(self, o):
        return _FElem(self.R, self.R.ring.sub(self.i, self._lift(o).i))

    def __mul__(self, o):
        return _FElem(self.R, self.R.ring.mul[self.i, self._lift(o).i])

    def __neg__(self):
        return _FElem(self.R, self.R.ring.neg[self.i])

    def __pow__(self, k):
        out = _FElem(self.R, self.R.ring.one)
        for _ in range(k):
            out = out * self
        return out


@dataclass(eq=False)
class FiniteRingDecl:
    """A finite ring built from Z/n[t]/(monic f) or Z/n, with its named generators."""
    ring: FiniteRing
    variables: tuple
    var_elems: tuple
    factors: tuple = ()

    def from_int(self, n: int) -> int:
        R = self.ring
        out = 0
        for _ in range(n % R.char):
            out = R.add[out, R.one]
        return int(out)

    def element(self, e) -> int:
        if self.factors:
            if isinstance(e, Tup):
                parts = [f.element(x) for f, x in zip(self.factors, e.items)]
            else:
                parts = [f.element(e) for f in self.factors]
            idx = 0
            for f, p in zip(self.factors, parts):
                idx = idx * f.ring.size + p
            return idx
        where = dict(zip(self.variables, self.var_elems))
        v = evaluate(e, lambda nm: _FElem(self, where[nm]), lambda n, d=1: _div(self, n, d))
        return v.i if isinstance(v, _FElem) else self.from_int(v)


def _div(R: FiniteRingDecl, n, d):
    if d != 1:
        raise DSLError("division is not available in finite rings")
    return _FElem(R, R.from_int(n))


def _finite_ring(d: RingDecl) -> FiniteRingDecl:
    n = coeff_ring_from_name(d.coeff).modulus
    if not d.variables:
        if d.relations:
            raise DSLError("relations on Z/n itself are not supported", *d.pos)
        return FiniteRingDecl(FiniteRing.zmod(n), (), ())
    if len(d.variables) != 1 or len(d.relations) != 1:
        raise DSLError("finite rings must be Z/n or Z/n[t]/(monic f)", *d.pos)
    from .coeffs import QQ
    from .poly import PolyRing
    ring = PolyRing(d.variables, QQ)
    f = ring.from_expr(d.relations[0])
    cs = dict(f.items())
    deg = max((m[0] for m in cs), default=0)
    if deg == 0 or any(c.denominator != 1 for c in cs.values()) or int(cs[(deg,)]) % n != 1:
        raise DSLError("the relation must be monic with integer coefficients", *d.pos)
    coeffs = [int(cs.get((i,), 0)) % n for i in range(deg)]
    R = FiniteRing.extension(n, coeffs, d.variables[0])
    t = R.from_coords([0, 1] + [0] * (deg - 2)) if deg > 1 else R.from_coords([(-coeffs[0]) % n])
    R.name = d.name
    return FiniteRingDecl(R, d.variables, (t,))


class Environment:
    """Built objects by name."""

    def __init__(self, prog):
        self.decls = {}
        self.objects = {}
        for d in prog:
            if hasattr(d, "name"):
                self.decls[d.name] = d
                try:
                    self.objects[d.name] = self._build(d)
                except PuretopError as e:
                    if isinstance(e, DSLError) and e.line is not None:
                        raise
                    raise DSLError(str(e), *d.pos) from None

    def __getitem__(self, name):
        return self.objects[name]

    def is_finite(self, name) -> bool:
        return isinstance(self.objects[name], FiniteRingDecl)

    # -- rings
    def _build(self, d):
        if isinstance(d, RingDecl):
            cz = coeff_ring_from_name(d.coeff)
            if cz.kind == "Zn":
                return _finite_ring(d)
            ring = QuotientRing.polynomial(d.variables, cz, name=d.name)
            rels = [ring.ring.from_expr(g) for g in d.relations]
            return QuotientRing(ring.ring, rels, name=d.name)
        if isinstance(d, ProductDecl):
            fs = [self.objects[f] for f in d.factors]
            if all(isinstance(f, FiniteRingDecl) for f in fs):
                R = fs[0].ring
                for f in fs[1:]:
                    R = FiniteRing.product(R, f.ring)
                R.name = d.name
                return FiniteRingDecl(R, (), (), tuple(fs))
            if any(isinstance(f, FiniteRingDecl) for f in fs):
                raise DSLError("cannot mix finite and polynomial factors", *d.pos)
            return ProductRing(fs, name=d.name)
        if isinstance(d, ModuleDecl):
            return self._module(d)
        if isinstance(d, MapDecl):
            return self._map(d)
        if isinstance(d, BilinearDecl):
            return self._bilinear(d)
        raise TypeError(d)

    def element(self, ring_name, e):
        R = self.objects[ring_name]
        if isinstance(R, FiniteRingDecl):
            return R.element(e)
        if isinstance(R, ProductRing):
            items = e.items if isinstance(e, Tup) else (e,) * len(R.factors)
            return tuple(f.from_expr(x) for f, x in zip(R.factors, items))
        return R.from_expr(e)

    def _module(self, d: ModuleDecl):
        R = self.objects[d.ring]
        if isinstance(R, FiniteRingDecl):
            rels = tuple(tuple(R.element(g) for g in col) for col in d.relations)
            return FiniteModuleSpec(R.ring, d.rank, rels)
        cols = tuple(tuple(R.from_expr(g) for g in col) for col in d.relations)
        return ModulePresentation(R, d.rank, cols, d.degrees)

    def _map(self, d: MapDecl):
        src, tgt = self.objects[d.source], self.objects[d.target]
        imgs = dict(d.images)
        if isinstance(src, FiniteRingDecl) or isinstance(tgt, FiniteRingDecl):
            if not (isinstance(src, FiniteRingDecl) and isinstance(tgt, FiniteRingDecl)):
                raise DSLError("finite rings map only to finite rings", *d.pos)
            return _finite_map(src, tgt, [tgt.element(imgs[v]) for v in src.variables], d.name)
        images = [self.element(d.target, imgs[v]) for v in src.names]
        alpha = RingMapSpec(src, tgt, images, name=d.name)
        if d.gens is None:
            return alpha
        gens = [self.element(d.target, g) for g in d.gens]
        rels = None if d.relations is None else [tuple(src.from_expr(g) for g in col)
                                                  for col in d.relations]
        one = None if d.one is None else tuple(src.from_expr(g) for g in d.one)
        return with_presentation(alpha, gens, rels, one)

    def _bilinear(self, d: BilinearDecl):
        M = self.objects[d.module]
        mdecl = self.decls[d.module]
        R = self.objects[mdecl.ring]
        if isinstance(R, FiniteRingDecl):
            b = tuple(tuple(R.element(g) for g in row) for row in d.matrix)
            return FrobAlgSpec(R.ring, M, b, name=d.name)
        b = tuple(tuple(R.from_expr(g) for g in row) for row in d.matrix)
        return FrobAlgSpec(R, M, b, name=d.name)


def _finite_map(src: FiniteRingDecl, tgt: FiniteRingDecl, var_images, name) -> FiniteRingMap:
    """The unital map determined by the images of the source generators."""
    R, S = src.ring, tgt.ring
    table = np.zeros(R.size, dtype=np.int64)
    if not src.variables:
        # Z/n: k ↦ k·1
        acc = 0
        for k in range(R.size):
            table[k] = acc
            acc = S.add[acc, S.one]
    else:
        t = var_images[0]
        powers = [S.one]
        for _ in range(1, R.coords.shape[1]):
            powers.append(int(S.mul[powers[-1], t]))
        for x in range(R.size):
            acc = 0
            for c, pw in zip(R.coords[x], powers):
                for _ in range(int(c)):
                    acc = S.add[acc, pw]
            table[x] = acc
    return FiniteRingMap(R, S, table, name=name)


def finite_module(spec: FiniteModuleSpec) -> FiniteModule:
    return spec.build()[0]
