"""Extensions S = R ⊕ M with (r, m)(r′, m′) = (rr′ + b(m, m′), rm′ + r′m).

``b`` is a symmetric bilinear form M × M → R given on generators.  S is a
ring when b is well defined and b(ℓ, m)·n = b(m, n)·ℓ for all ℓ, m, n; R is
then a direct summand of S.  The obstruction data are I = Ann_R M,
J = Ann_R I and an element m with q(m) = b(m, m) outside J².
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import (
    AssociativityFailed,
    BilinearNotWellDefined,
    RingAxiomFailed,
    SymmetryFailed,
)
from .finite import FiniteModule, FiniteRing, FiniteRingMap, _digits, _encode
from .groebner import Ideal, QuotientRing, annihilator_of_element, intersect
from .modules import ModulePresentation, annihilator, unit_vector
from .poly import PolyRing
from .purity import FinitePresentation, RingMapSpec


@dataclass(frozen=True, eq=False)
class FiniteModuleSpec:
    """R^k / (relations) over a finite ring, remembering the generators."""
    ring: FiniteRing
    rank: int
    relations: tuple = ()

    def build(self):
        M = FiniteModule.quotient_of_free(self.ring, self.rank, list(self.relations))
        N = self.ring.size
        gens = [int(M.coset_of[self.ring.one * N ** i]) for i in range(self.rank)]
        return M, gens


@dataclass(frozen=True, eq=False)
class FrobAlgSpec:
    R: object  # QuotientRing or FiniteRing
    M: object  # ModulePresentation or FiniteModuleSpec
    b: tuple  # b[i][j] = b(g_i, g_j)
    name: Optional[str] = None

    @property
    def is_finite(self) -> bool:
        return isinstance(self.R, FiniteRing)

    @property
    def rank(self) -> int:
        return self.M.rank if self.is_finite else self.M.n_generators

    def check(self):
        """Raise SymmetryFailed / BilinearNotWellDefined / AssociativityFailed."""
        if self.is_finite:
            _FiniteExtension(self)
        else:
            _check_poly(self)


def _bmatrix(spec: FrobAlgSpec):
    R = spec.R
    n = spec.rank
    if len(spec.b) != n or any(len(row) != n for row in spec.b):
        raise BilinearNotWellDefined(f"b needs an {n}x{n} table of values")
    return [[R.nf(R.ring(x)) for x in row] for row in spec.b]


def _check_poly(spec: FrobAlgSpec):
    R, M = spec.R, spec.M
    n = M.n_generators
    B = _bmatrix(spec)
    for i in range(n):
        for j in range(i + 1, n):
            if not R.eq(B[i][j], B[j][i]):
                raise SymmetryFailed(f"b(g{i + 1}, g{j + 1}) = {B[i][j]} but b(g{j + 1}, g{i + 1}) = {B[j][i]}")
    for col in M.relations:
        for j in range(n):
            v = R.nf(sum((c * B[i][j] for i, c in enumerate(col)), R.ring.zero()))
            if v:
                raise BilinearNotWellDefined(
                    f"relation ({', '.join(map(str, col))}) pairs to {v} with generator {j + 1}")
    # b(g_i, g_j)·g_k = b(g_j, g_k)·g_i in M
    for i in range(n):
        for j in range(n):
            for k in range(n):
                vec = [R.ring.zero()] * n
                vec[k] = vec[k] + B[i][j]
                vec[i] = vec[i] - B[j][k]
                if not M.contains(tuple(vec)):
                    raise AssociativityFailed(
                        f"b(g{i + 1},g{j + 1})·g{k + 1} != b(g{j + 1},g{k + 1})·g{i + 1}")
    return B


def _module_var_names(R: QuotientRing, n: int):
    base = "m"
    while any(nm.startswith(base) for nm in R.names):
        base = "_" + base
    return [f"{base}{i + 1}" for i in range(n)]


def build_extension(spec: FrobAlgSpec):
    """R → S with S = R ⊕ M; Gröbner rings give a RingMapSpec, finite rings a FiniteRingMap."""
    if spec.is_finite:
        return _FiniteExtension(spec).map
    B = _check_poly(spec)
    R, M = spec.R, spec.M
    n = M.n_generators
    znames = _module_var_names(R, n)
    ring = PolyRing(R.names + tuple(znames), R.coeff)
    xpos = list(range(R.nvars))
    z = [ring.gen(R.nvars + i) for i in range(n)]
    rels = [g.embed(ring, xpos) for g in R.ideal.generators]
    for col in M.relations:
        rels.append(sum((c.embed(ring, xpos) * z[i] for i, c in enumerate(col)), ring.zero()))
    for i in range(n):
        for j in range(i, n):
            rels.append(z[i] * z[j] - B[i][j].embed(ring, xpos))
    S = QuotientRing(ring, rels, name=spec.name)
    images = [ring.gen(i) for i in range(R.nvars)]
    zero = R.ring.zero()
    D = tuple((zero,) + tuple(col) for col in M.relations)
    one = unit_vector(R, n + 1, 0)
    fp = FinitePresentation(D, one, (ring.one(),) + tuple(z))
    return RingMapSpec(R, S, images, fp, name=spec.name)


class _FiniteExtension:
    def __init__(self, spec: FrobAlgSpec):
        R = spec.R
        M, gens = spec.M.build()
        n = len(gens)
        self.module, self.gens = M, gens
        B = np.asarray(spec.b, dtype=np.int64).reshape(n, n) if n else np.zeros((0, 0), dtype=np.int64)
        if not (B == B.T).all():
            raise SymmetryFailed("b is not symmetric on generators")
        C, val = M.combos(gens)
        _, first = np.unique(val, return_index=True)
        reps = C[first] if n else np.zeros((M.size, 0), dtype=np.int64)
        mM = M.size
        table = np.zeros((mM, mM), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                term = R.mul[R.mul[reps[:, i][:, None], reps[:, j][None, :]], B[i, j]]
                table = R.add[table, term]
        # well defined and bilinear on all elements
        if not ((table[M.add] == R.add[table[:, None, :], table[None, :, :]]).all()
                and (table[M.act] == R.mul[np.arange(R.size)[:, None, None], table[None, :, :]]).all()):
            raise BilinearNotWellDefined("b does not extend to a bilinear form on M")
        self.b_table = table
        N = R.size
        idx = np.arange(N * mM)
        r, m = idx // mM, idx % mM
        add = R.add[r[:, None], r[None]] * mM + M.add[m[:, None], m[None]]
        rr = R.add[R.mul[r[:, None], r[None]], table[m[:, None], m[None]]]
        mm = M.add[M.act[r[:, None], m[None]], M.act[r[None], m[:, None]]]
        mul = rr * mM + mm
        labels = [f"({R.labels[a]}, {M.labels[c]})" for a, c in zip(r, m)]
        try:
            S = FiniteRing(add, mul, R.one * mM, labels, name=spec.name or f"{R} + M")
        except RingAxiomFailed as e:
            raise AssociativityFailed(f"R ⊕ M is not a ring: {e}") from None
        self.ring = S
        self.map = FiniteRingMap(R, S, np.arange(N) * mM, name=spec.name)


# ---------------------------------------------------------------- obstruction


@dataclass(frozen=True, eq=False)
class ObstructionReport:
    I: tuple
    J: tuple
    J2: tuple
    witness: Optional[tuple]  # coefficients on the module generators
    q_value: Optional[object]
    searched: int
    q_in_J: bool = True

    @property
    def hypothesis_verified(self) -> bool:
        return self.witness is not None

    def summary(self) -> str:
        def fmt(gens):
            return "(" + ", ".join(str(g) for g in gens) + ")" if gens else "(0)"
        w = ("none" if self.witness is None else
             "(" + ", ".join(str(c) for c in self.witness) + f") with q = {self.q_value}")
        return f"I = {fmt(self.I)}, J = {fmt(self.J)}, J^2 = {fmt(self.J2)}, witness {w}"


def default_search_set(n: int):
    """Generators and pairwise sums, as coefficient vectors."""
    out = []
    for i in range(n):
        out.append(tuple(1 if k == i else 0 for k in range(n)))
    for i in range(n):
        for j in range(i + 1, n):
            out.append(tuple(1 if k in (i, j) else 0 for k in range(n)))
    return out


def obstruction_check(spec: FrobAlgSpec, search_set: Sequence = None) -> ObstructionReport:
    n = spec.rank
    search = list(search_set) if search_set is not None else default_search_set(n)
    if spec.is_finite:
        return _obstruction_finite(spec, search)
    R = spec.R
    B = _check_poly(spec)
    I = annihilator(spec.M)
    I_gens = [g for g in I.basis() if not R.ideal.contains(g)]
    J = R.ideal_of([R.ring.one()])
    for g in I_gens:
        J = intersect(J, annihilator_of_element(g, R))
    J_gens = [g for g in R.ideal_of(J.generators).basis() if not R.ideal.contains(g)]
    J2 = R.ideal_of([a * b for a in J_gens for b in J_gens])
    J2_gens = [g for g in J2.basis() if not R.ideal.contains(g)]
    J_full = R.ideal_of(J_gens)
    witness, qv, q_in_J = None, None, True
    for m in search:
        c = [R.ring(x) for x in m]
        q = R.nf(sum((c[i] * c[j] * B[i][j] for i in range(n) for j in range(n)), R.ring.zero()))
        q_in_J = q_in_J and J_full.contains(q)
        if witness is None and not J2.contains(q):
            witness, qv = tuple(R.nf(x) for x in c), q
    return ObstructionReport(tuple(I_gens), tuple(J_gens), tuple(J2_gens), witness, qv,
                             len(search), q_in_J)


def ideal_generators(R: FiniteRing, elements) -> tuple:
    """Greedy generators of an ideal of a finite ring given as a set."""
    els = sorted(set(elements))
    gens, span = [], {0}
    for e in els:
        if e not in span:
            gens.append(e)
            span = set(R.ideal_span(gens))
    return tuple(R.labels[g] for g in gens)


def _obstruction_finite(spec: FrobAlgSpec, search) -> ObstructionReport:
    R = spec.R
    ext = _FiniteExtension(spec)
    M, gens = ext.module, ext.gens
    I = [r for r in range(R.size) if (M.act[r] == 0).all()]
    J = [r for r in range(R.size) if all(R.mul[r, i] == 0 for i in I)]
    J2 = R.ideal_span(sorted({int(R.mul[a, b]) for a in J for b in J}))
    witness, qv, q_in_J = None, None, True
    for coeffs in search:
        m = 0
        for c, g in zip(coeffs, gens):
            m = M.add[m, M.act[c % R.size, g]]
        q = int(ext.b_table[m, m])
        q_in_J = q_in_J and q in J
        if witness is None and q not in J2:
            witness, qv = tuple(R.labels[c % R.size] for c in coeffs), R.labels[q]
    return ObstructionReport(ideal_generators(R, I), ideal_generators(R, J),
                             ideal_generators(R, J2), witness, qv, len(search), q_in_J)
