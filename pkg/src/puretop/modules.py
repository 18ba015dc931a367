"""Finitely presented modules coker(D: R^m → R^n) over quotient rings.

Matrices are stored column-wise: ``relations[k]`` is the k-th column of D,
a tuple of n ring elements.  A map between presented modules is a list of
columns too, one per source generator, giving its image in the target's
generators.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import IncompatibleMap, NotGraded, RingMismatch
from .groebner import (
    Ideal,
    QuotientRing,
    Submodule,
    colon_unit_vector,
    intersect,
    monomials_of_degree,
    syzygies,
)
from .poly import mono_degree, mono_divides


def unit_vector(R: QuotientRing, n: int, i: int) -> tuple:
    one, zero = R.ring.one(), R.ring.zero()
    return tuple(one if j == i else zero for j in range(n))


def column_degree(col, gen_degrees, weights) -> Optional[int]:
    """Degree of a homogeneous column (None for the zero column); raises NotGraded."""
    deg = None
    for f, d in zip(col, gen_degrees):
        if f.is_zero():
            continue
        if not f.is_homogeneous(weights):
            raise NotGraded(f"entry {f} is not homogeneous")
        e = f.degree(weights) + d
        if deg is None:
            deg = e
        elif deg != e:
            raise NotGraded(f"column {tuple(str(x) for x in col)} mixes degrees {deg} and {e}")
    return deg


def combine(columns: Sequence[tuple], coeffs: Sequence, R: QuotientRing, rank: int) -> tuple:
    """Σ coeffs[j]·columns[j]."""
    acc = [R.ring.zero()] * rank
    for c, col in zip(coeffs, columns):
        if c.is_zero():
            continue
        for i in range(rank):
            if col[i]:
                acc[i] = acc[i] + c * col[i]
    return tuple(R.nf(x) for x in acc)


@dataclass(frozen=True, eq=False)
class ModulePresentation:
    ring: QuotientRing
    n_generators: int
    relations: tuple = ()
    generator_degrees: Optional[tuple] = None
    #: generators as vectors of an ambient module (set for kernels)
    embedding: Optional[tuple] = None

    def __post_init__(self):
        R = self.ring
        cols = []
        for col in self.relations:
            col = tuple(R.nf(R.ring(x)) for x in col)
            if len(col) != self.n_generators:
                raise ValueError(f"relation of length {len(col)} for {self.n_generators} generators")
            if any(x for x in col):
                cols.append(col)
        object.__setattr__(self, "relations", tuple(cols))
        if self.generator_degrees is not None:
            degs = tuple(int(d) for d in self.generator_degrees)
            if len(degs) != self.n_generators:
                raise ValueError("one degree per generator required")
            object.__setattr__(self, "generator_degrees", degs)
            w = R.graded().weights
            for col in cols:
                column_degree(col, degs, w)
        object.__setattr__(self, "_sub", None)

    @classmethod
    def free(cls, R: QuotientRing, n: int, degrees=None) -> "ModulePresentation":
        return cls(R, n, (), degrees)

    @classmethod
    def cyclic(cls, R: QuotientRing, ideal_gens, degree=None) -> "ModulePresentation":
        """R/(ideal_gens)."""
        return cls(R, 1, tuple((R.ring(g),) for g in ideal_gens),
                   None if degree is None else (degree,))

    @property
    def submodule(self) -> Submodule:
        if self._sub is None:
            object.__setattr__(self, "_sub", Submodule(self.ring, self.n_generators, self.relations))
        return self._sub

    def contains(self, vec) -> bool:
        """Is ``vec`` (coordinates on the generators) zero in the module?"""
        return self.submodule.contains(vec)

    def reduce(self, vec) -> tuple:
        return self.submodule.reduce(vec)

    def is_zero(self) -> bool:
        return self.n_generators == 0 or self.submodule.is_everything()

    def graded_data(self):
        w = self.ring.graded().weights
        degs = self.generator_degrees
        if degs is None:
            degs = (0,) * self.n_generators
            for col in self.relations:
                column_degree(col, degs, w)
        return w, degs

    def hilbert_function(self, degree: int) -> int:
        w, degs = self.graded_data()
        lts = self.submodule.leading_terms() if self.n_generators else []
        by_pos = {}
        for pos, m in lts:
            by_pos.setdefault(pos, []).append(m)
        total = 0
        for i, d in enumerate(degs):
            ls = by_pos.get(i, [])
            for e in monomials_of_degree(w, degree - d):
                if not any(mono_divides(l, e) for l in ls):
                    total += 1
        return total

    def hilbert_sample(self, degrees=range(9)) -> tuple:
        return tuple(self.hilbert_function(d) for d in degrees)

    def __str__(self):
        rels = "; ".join("(" + ", ".join(str(x) for x in c) + ")" for c in self.relations)
        return f"coker[{self.n_generators} gens | {rels}] over {self.ring}"


def hom_to_ring(M: ModulePresentation) -> list[tuple]:
    """Generators of Hom_R(M, R) as row vectors v with vᵀD = 0."""
    R, n = M.ring, M.n_generators
    if not M.relations:
        return [unit_vector(R, n, i) for i in range(n)]
    m = len(M.relations)
    rows_as_cols = [tuple(M.relations[k][i] for k in range(m)) for i in range(n)]
    return syzygies(rows_as_cols, R, nrows=m)


def apply_functional(v, vec, R: QuotientRing):
    acc = R.ring.zero()
    for a, b in zip(v, vec):
        acc = acc + a * b
    return R.nf(acc)


def apply_map(f: Sequence[tuple], vec, R: QuotientRing, target_rank: int) -> tuple:
    return combine(f, [R.ring(x) for x in vec], R, target_rank)


def check_map(f, M: ModulePresentation, N: ModulePresentation):
    if M.ring is not N.ring and M.ring.ring != N.ring.ring:
        raise RingMismatch("modules over different rings")
    if len(f) != M.n_generators or any(len(c) != N.n_generators for c in f):
        raise IncompatibleMap("map matrix has the wrong shape")
    for col in M.relations:
        if not N.contains(apply_map(f, col, M.ring, N.n_generators)):
            raise IncompatibleMap(f"relation {tuple(str(x) for x in col)} does not map to 0")


def kernel_of_map(f: Sequence[tuple], M: ModulePresentation, N: ModulePresentation) -> ModulePresentation:
    """Presentation of ker(f: M → N); ``embedding`` holds the generators as vectors of M."""
    check_map(f, M, N)
    R, nM, nN = M.ring, M.n_generators, N.n_generators
    if nM == 0:
        return ModulePresentation(R, 0, (), () if M.generator_degrees is not None else None, ())
    cols = [tuple(R.ring(x) for x in c) for c in f] + list(N.relations)
    syz = syzygies(cols, R, nrows=nN) if nN else [unit_vector(R, nM, i) for i in range(nM)]
    K = []
    seen = set()
    for v in syz:
        k = tuple(R.nf(x) for x in v[:nM])
        if k in seen or M.contains(k):
            continue
        seen.add(k)
        K.append(k)
    degs = None
    if M.generator_degrees is not None:
        w, gd = M.graded_data()
        degs = tuple(column_degree(k, gd, w) for k in K)
    if not K:
        return ModulePresentation(R, 0, (), () if degs is not None else None, ())
    rel = syzygies(K + list(M.relations), R, nrows=nM)
    rels = [tuple(v[:len(K)]) for v in rel]
    return ModulePresentation(R, len(K), tuple(rels), degs, tuple(K))


def minimal_presentation_graded(M: ModulePresentation):
    """Minimal graded presentation and whether M is free.

    Generators are pruned with relations carrying a unit entry (Nakayama);
    remaining relations are reduced to a minimal generating set in degree order.
    """
    R = M.ring
    if R.weights is None:
        R = R.graded()
    w, degs = M.graded_data()
    cols = [list(c) for c in M.relations]
    gens = list(range(M.n_generators))
    degs = list(degs)
    while True:
        hit = None
        for ci, col in enumerate(cols):
            for i, x in enumerate(col):
                if x and x.is_constant():
                    hit = (ci, i)
                    break
            if hit:
                break
        if hit is None:
            break
        ci, i = hit
        pivot = cols[ci]
        inv = R.coeff.inv(pivot[i].constant_term())
        new_cols = []
        for cj, col in enumerate(cols):
            if cj == ci:
                continue
            if col[i]:
                factor = col[i].scale(inv)
                col = [R.nf(a - factor * b) for a, b in zip(col, pivot)]
            new_cols.append(col[:i] + col[i + 1:])
        cols = [c for c in new_cols if any(x for x in c)]
        del gens[i]
        del degs[i]
    n = len(gens)
    cols = [tuple(c) for c in cols]
    cols.sort(key=lambda c: column_degree(c, degs, w))
    kept: list = []
    for c in cols:
        if not Submodule(R, n, kept).contains(c):
            kept.append(c)
    out = ModulePresentation(R, n, tuple(kept), tuple(degs))
    return out, not out.relations


def annihilator(M: ModulePresentation) -> Ideal:
    """Ann_R(M) as an ideal of the ambient polynomial ring."""
    R = M.ring
    if M.n_generators == 0:
        return R.ideal_of([R.ring.one()])
    sub = M.submodule
    out = colon_unit_vector(0, sub)
    for i in range(1, M.n_generators):
        out = intersect(out, colon_unit_vector(i, sub))
    return R.ideal_of(out.generators)


def tensor_product(M: ModulePresentation, N: ModulePresentation) -> ModulePresentation:
    """M ⊗_R N with generators g_i ⊗ h_j indexed i·n_N + j."""
    R = M.ring
    nM, nN = M.n_generators, N.n_generators
    zero = R.ring.zero()
    rels = []
    for col in M.relations:
        for j in range(nN):
            v = [zero] * (nM * nN)
            for i in range(nM):
                v[i * nN + j] = col[i]
            rels.append(tuple(v))
    for col in N.relations:
        for i in range(nM):
            v = [zero] * (nM * nN)
            for j in range(nN):
                v[i * nN + j] = col[j]
            rels.append(tuple(v))
    degs = None
    if M.generator_degrees is not None and N.generator_degrees is not None:
        degs = tuple(a + b for a in M.generator_degrees for b in N.generator_degrees)
    return ModulePresentation(R, nM * nN, tuple(rels), degs)
