"""Frobenius pushforward F_*R over F_p, F-splitting and the Kunz freeness check.

F_*R is R viewed as an R-module through r ↦ r^p.  For R = k[x]/I it is
generated by the monomials x^a with 0 ≤ a_i < p; each product g·x^a
(g a relation) is rewritten as Σ_b c_b(x)^p·x^b, and (c_b)_b is a relation
column.  Over F_p the p-th root of a scalar is the scalar itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Optional

from .errors import JacobianUnsupported, NotGraded, TooLarge, UnsupportedCoefficients
from .groebner import Ideal, QuotientRing
from .modules import ModulePresentation, minimal_presentation_graded
from .poly import Poly
from .purity import FinitePresentation, RingMapSpec, SplitVerdict, split_test

MAX_P = 5
MAX_VARS = 4


@dataclass(frozen=True, eq=False)
class FrobeniusPushforward:
    ring: QuotientRing
    basis: tuple  # exponent vectors a with 0 <= a_i < p
    presentation: ModulePresentation

    @property
    def p(self) -> int:
        return self.ring.coeff.characteristic

    def generator(self, a) -> Poly:
        return self.ring.ring.monomial(a)


def _check_bounds(R: QuotientRing):
    cz = R.coeff
    if cz.kind != "Fp":
        raise UnsupportedCoefficients(f"Frobenius tools need a prime field, not {cz.name}")
    if cz.characteristic > MAX_P or R.nvars > MAX_VARS:
        raise TooLarge(f"pushforward limited to p <= {MAX_P} and <= {MAX_VARS} variables")


def rewrite_in_basis(f: Poly, p: int, basis) -> tuple:
    """Coefficients c_b with f = Σ_b c_b(x)^p·x^b (p-th roots over F_p are trivial)."""
    ring = f.ring
    where = {b: i for i, b in enumerate(basis)}
    parts = [dict() for _ in basis]
    for m, c in f.items():
        b = tuple(e % p for e in m)
        q = tuple(e // p for e in m)
        d = parts[where[b]]
        d[q] = ring.coeff.add(d.get(q, ring.coeff.zero), ring.coeff.pth_root(c))
    return tuple(Poly(ring, d) for d in parts)


def pushforward(R: QuotientRing) -> FrobeniusPushforward:
    _check_bounds(R)
    p = R.coeff.characteristic
    basis = tuple(tuple(reversed(a)) for a in iproduct(range(p), repeat=R.nvars))
    basis = tuple(sorted(basis, key=lambda a: (sum(a), a)))
    cols = []
    for g in R.ideal.generators:
        for a in basis:
            cols.append(rewrite_in_basis(g * R.ring.monomial(a), p, basis))
    weights, degs = None, None
    src = R
    try:
        G = R.graded()
        weights = tuple(p * w for w in G.weights)
        degs = tuple(sum(x * w for x, w in zip(a, G.weights)) for a in basis)
        src = G.with_weights(weights)
    except NotGraded:  # ungraded rings get an ungraded presentation
        pass
    pres = ModulePresentation(src, len(basis), tuple(cols), degs)
    return FrobeniusPushforward(R, basis, pres)


def frobenius_map(R: QuotientRing) -> RingMapSpec:
    """Frobenius R → R with the pushforward presentation attached."""
    F = pushforward(R)
    p = F.p
    target = R.graded() if F.presentation.generator_degrees is not None else R
    images = [target.ring.gen(i) ** p for i in range(R.nvars)]
    one = tuple(R.ring.one() if not any(a) else R.ring.zero() for a in F.basis)
    fp = FinitePresentation(F.presentation.relations, one,
                            tuple(R.ring.monomial(a) for a in F.basis))
    return RingMapSpec(F.presentation.ring, target, images, fp, name="Frobenius")


def f_split_test(R: QuotientRing) -> SplitVerdict:
    return split_test(frobenius_map(R))


# ---------------------------------------------------------------- Kunz / Jacobian


def krull_dimension(R: QuotientRing) -> int:
    """Dimension of k[x]/in(I): largest set of variables carrying no leading monomial."""
    if R.ideal.is_unit_ideal():
        return -1
    lts = [g.lm for g in R.ideal.basis()]
    n = R.nvars
    best = 0
    for mask in range(1 << n):
        S = {i for i in range(n) if mask >> i & 1}
        if len(S) > best and not any(all(i in S for i, e in enumerate(l) if e) for l in lts):
            best = len(S)
    return best


def minimal_generators(R: QuotientRing) -> list:
    """A minimal generating set of a homogeneous ideal (degree order, drop redundant)."""
    w = R.graded().weights
    gens = sorted(R.ideal.generators, key=lambda g: (g.degree(w), str(g)))
    kept = []
    for g in gens:
        if not Ideal(R.ring, kept).contains(g):
            kept.append(g)
    return kept


def _rank_mod_p(rows, p) -> int:
    rows = [[x % p for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


@dataclass(frozen=True)
class KunzReport:
    is_free: bool
    regular_expected: Optional[bool]
    consistent: Optional[bool]
    note: str = ""


def jacobian_regular_at_origin(R: QuotientRing) -> bool:
    """Jacobian criterion at the irrelevant ideal for complete intersections."""
    gens = minimal_generators(R)
    height = R.nvars - krull_dimension(R)
    if len(gens) != height:
        raise JacobianUnsupported(
            f"{len(gens)} minimal generators but height {height}: not a complete intersection")
    if not gens:
        return True
    p = R.coeff.characteristic
    rows = [[int(g.derivative(j).constant_term()) for j in range(R.nvars)] for g in gens]
    return _rank_mod_p(rows, p) == len(gens)


def kunz_check(R: QuotientRing) -> KunzReport:
    F = pushforward(R)
    _, free = minimal_presentation_graded(F.presentation)
    try:
        regular = jacobian_regular_at_origin(R.graded())
    except JacobianUnsupported as e:
        return KunzReport(free, None, None, str(e))
    return KunzReport(free, regular, free == regular)


def in_frobenius_power_of_max(f: Poly, p: int) -> bool:
    """f ∈ (x_1^p, …, x_d^p)?"""
    return all(any(e >= p for e in m) for m in f.terms)


def fedder_f_pure(R: QuotientRing) -> bool:
    """Fedder's criterion at the origin for complete intersections: (f_1⋯f_c)^{p−1} ∉ m^[p]."""
    gens = minimal_generators(R)
    if len(gens) != R.nvars - krull_dimension(R):
        raise JacobianUnsupported("Fedder oracle implemented for complete intersections only")
    p = R.coeff.characteristic
    prod = R.ring.one()
    for g in gens:
        prod = prod * g
    return not in_frobenius_power_of_max(prod ** (p - 1), p)
