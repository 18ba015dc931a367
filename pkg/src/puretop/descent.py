"""Descent data along a ring map R → S and reconstruction of R-modules.

A datum on an S-module N is determined by θ: N → S⊗N, θ(n) = φ(n⊗1), since
φ(n⊗y) = (1⊗y)·θ(n) by S⊗S-linearity.  The split-equalizer identities are

  (1) (1⊗θ)θ = (1⊗α)θ              (2) λθ = id_N
  (3) (μ⊗id)(1⊗α) = id_{S⊗N}       (4) (μ⊗id)(1⊗θ) = θλ
  (5) (1⊗(α−θ))(μ⊗id)(1⊗(α−θ)) = 1⊗(α−θ)

with α(n) = 1⊗n, λ the action on N and μ the multiplication of S.  The
cocycle condition is checked as φ₁∘φ₃ = φ₂ (φ₃ applied first), the only
order in which the composite N⊗S⊗S → S⊗N⊗S → S⊗S⊗N type-checks.

Two backends: finite rings with S free over R (S⊗N ≅ N^r on a basis with
w₀ = 1), and presented modules over Gröbner rings for canonical data.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import MissingPresentation, NotPure
from .finite import (
    FiniteModule,
    FiniteRingMap,
    brute_split,
    find_free_basis,
    find_isomorphism,
)

COCYCLE_ORDER = "phi1 after phi3 (phi1*phi3 = phi2)"
COCYCLE_NOTE = ("the other written order phi3*phi1 = phi2 is read diagrammatically; "
                "as a composite of maps it does not type-check")


@dataclass(frozen=True)
class IdentityReport:
    identities: dict  # "1".."5" -> bool
    cocycle: bool
    unit_law: bool
    linear: bool
    isomorphism: Optional[bool]
    cocycle_order: str = COCYCLE_ORDER
    note: str = COCYCLE_NOTE

    @property
    def all_pass(self) -> bool:
        return (all(self.identities.values()) and self.cocycle and self.unit_law and self.linear
                and self.isomorphism is not False)

    def failed(self) -> list:
        return [k for k, v in self.identities.items() if not v]


# ---------------------------------------------------------------- finite backend


class FreeStructure:
    """S free over R with basis w_0 = 1, …: coordinates and structure constants."""

    def __init__(self, alpha: FiniteRingMap, basis=None):
        basis = basis if basis is not None else find_free_basis(alpha)
        if basis is None:
            raise MissingPresentation("target is not free over the source")
        if basis[0] != alpha.target.one:
            raise ValueError("the first basis element must be 1")
        self.alpha = alpha
        self.basis = list(basis)
        self.r = len(basis)
        S_R = alpha.target_module()
        C, val = S_R.combos(self.basis)
        coords = np.zeros((alpha.target.size, self.r), dtype=np.int64)
        coords[val] = C
        self.coords = coords  # coords[s] = R-coordinates of s
        S = alpha.target
        w = self.basis
        self.C = [[coords[S.mul[w[a], w[b]]] for b in range(self.r)] for a in range(self.r)]


class _FiniteOps:
    """Arithmetic on an S-module N through a free basis of S over R."""

    def __init__(self, fs: FreeStructure, N: FiniteModule):
        self.fs, self.N = fs, N
        self.r = fs.r
        self.zero = 0
        self.phi = fs.alpha.table

    def add(self, x, y):
        return int(self.N.add[x, y])

    def neg(self, x):
        return int(self.N.neg[x])

    def eq(self, x, y):
        return x == y

    def ract(self, c, x):
        return int(self.N.act[self.phi[c], x])

    def sact(self, a, x):
        return int(self.N.act[self.fs.basis[a], x])

    def structure(self, a, b, c):
        return int(self.fs.C[a][b][c])

    def gens(self):
        return range(self.N.size)


class _Engine:
    """The maps of the split equalizer, on top of an arithmetic backend."""

    def __init__(self, ops, theta):
        self.o = ops
        self.theta = theta
        self.r = ops.r

    def _sum(self, xs):
        acc = self.o.zero
        for x in xs:
            acc = self.o.add(acc, x)
        return acc

    def alpha(self, x):
        return [x] + [self.o.zero] * (self.r - 1)

    def lam(self, v):
        return self._sum(self.o.sact(a, v[a]) for a in range(self.r))

    def one_alpha(self, v):
        return [self.alpha(x) for x in v]

    def one_theta(self, v):
        return [list(self.theta(x)) for x in v]

    def mu(self, X):
        o, r = self.o, self.r
        return [self._sum(o.ract(o.structure(a, b, c), X[a][b]) for a in range(r) for b in range(r))
                for c in range(r)]

    def left(self, c, v):
        """w_c · v for v ∈ S⊗N (action on the left factor)."""
        o, r = self.o, self.r
        return [self._sum(o.ract(o.structure(c, a, b), v[a]) for a in range(r)) for b in range(r)]

    def diff(self, x):
        a, t = self.alpha(x), self.theta(x)
        return [self.o.add(p, self.o.neg(q)) for p, q in zip(a, t)]

    def eq(self, u, v):
        if isinstance(u, list):
            return len(u) == len(v) and all(self.eq(x, y) for x, y in zip(u, v))
        return self.o.eq(u, v)

    def unit(self, c, x):
        v = [self.o.zero] * self.r
        v[c] = x
        return v

    def cocycle_ok(self, x, a, b) -> bool:
        o, r = self.o, self.r
        t = self.theta(x)
        lhs = []
        for e in range(r):
            Xe = o.sact(a, t[e])
            te = self.theta(Xe)
            lhs.append([o.sact(b, te[f]) for f in range(r)])
        rhs = [[o.sact(b, t[e]) if c == a else o.zero for c in range(r)] for e in range(r)]
        return self.eq(lhs, rhs)

    def report(self, check_iso=None) -> IdentityReport:
        o, r = self.o, self.r
        gens = list(o.gens())
        ids = {str(i): True for i in range(1, 6)}
        unit = linear = cocycle = True
        for x in gens:
            t = self.theta(x)
            if not self.eq(self.one_theta(t), self.one_alpha(t)):
                ids["1"] = False
            if not self.eq(self.lam(t), x):
                ids["2"] = False
                unit = False
            for c in range(r):
                if not self.eq(self.theta(o.sact(c, x)), self.left(c, t)):
                    linear = False
                v = self.unit(c, x)
                if not self.eq(self.mu(self.one_alpha(v)), v):
                    ids["3"] = False
                if not self.eq(self.mu(self.one_theta(v)), self.theta(self.lam(v))):
                    ids["4"] = False
                d = [self.diff(y) for y in v]
                back = [self.diff(y) for y in self.mu(d)]
                if not self.eq(back, d):
                    ids["5"] = False
                for b in range(r):
                    if not self.cocycle_ok(x, c, b):
                        cocycle = False
        iso = check_iso() if check_iso else None
        return IdentityReport(ids, cocycle, unit, linear, iso)


@dataclass(eq=False)
class DescentDatum:
    """A datum on a finite S-module N, stored as the table of θ: N → N^r (S⊗N on the basis)."""
    alpha: FiniteRingMap
    structure: FreeStructure
    N: FiniteModule
    theta: np.ndarray  # shape (|N|, r)

    def _engine(self):
        ops = _FiniteOps(self.structure, self.N)
        return _Engine(ops, lambda x: [int(y) for y in self.theta[x]])

    def theta_additive(self) -> bool:
        t, A = self.theta, self.N.add
        return bool((t[A] == A[t[:, None, :], t[None, :, :]]).all())

    def phi_bijective(self, cap: int = 2 ** 16) -> Optional[bool]:
        """φ(Σ n_a⊗w_a) = Σ_a (1⊗w_a)θ(n_a) on all of N^r (None beyond the cap)."""
        N, r = self.N, self.structure.r
        if N.size ** r > cap:
            return None
        from .finite import _digits, _encode
        V = _digits(N.size, r)
        out = np.zeros((len(V), r), dtype=np.int64)
        for a in range(r):
            w = self.structure.basis[a]
            t = self.theta[V[:, a]]
            out = N.add[out, N.act[w, t]]
        return len(np.unique(_encode(out, N.size))) == len(V)

    def verify(self) -> IdentityReport:
        rep = self._engine().report(self.phi_bijective)
        if not self.theta_additive():
            rep = IdentityReport(rep.identities, rep.cocycle, rep.unit_law, False, rep.isomorphism)
        return rep


def _require_pure(alpha):
    if brute_split(alpha).tag != "Split":
        raise NotPure("descent reconstruction needs a pure (split) map")


def scalar_module(alpha: FiniteRingMap, fs: FreeStructure, M0: FiniteModule) -> FiniteModule:
    """S⊗_R M0 ≅ M0^r as an S-module."""
    from .finite import _digits, _encode
    S, r, m = alpha.target, fs.r, M0.size
    V = _digits(m, r)
    add = _encode(M0.add[V[:, None, :], V[None, :, :]], m)
    act = np.zeros((S.size, len(V)), dtype=np.int64)
    for s in range(S.size):
        out = np.zeros((len(V), r), dtype=np.int64)
        for a in range(r):
            sw = fs.coords[S.mul[s, fs.basis[a]]]  # s·w_a = Σ_b sw[b] w_b
            for b in range(r):
                out[:, b] = M0.add[out[:, b], M0.act[sw[b], V[:, a]]]
        act[s] = _encode(out, m)
    labels = ["(" + ", ".join(M0.labels[x] for x in v) + ")" for v in V]
    return FiniteModule(S, add, act, labels, name=f"S (x) {M0.name or 'M'}")


def canonical_datum(alpha, M0, basis=None):
    """The natural datum on S⊗_R M0: θ(s⊗m) = s⊗1⊗m."""
    if not isinstance(alpha, FiniteRingMap):
        return PresentedCanonicalDatum(alpha, M0)
    fs = FreeStructure(alpha, basis)
    N = scalar_module(alpha, fs, M0)
    from .finite import _digits, _encode
    r, m = fs.r, M0.size
    V = _digits(m, r)
    theta = np.zeros((N.size, r), dtype=np.int64)
    for a in range(r):
        placed = np.zeros_like(V)
        placed[:, 0] = V[:, a]
        theta[:, a] = _encode(placed, m)
    return DescentDatum(alpha, fs, N, theta)


def corrupt(d: DescentDatum, element: int = None, slot: int = 0) -> DescentDatum:
    """The same datum with one θ entry perturbed."""
    theta = d.theta.copy()
    n = element if element is not None else d.N.size - 1
    theta[n, slot] = (theta[n, slot] + 1) % d.N.size
    return DescentDatum(d.alpha, d.structure, d.N, theta)


def verify_split_equalizer(d) -> IdentityReport:
    return d.verify()


@dataclass(eq=False)
class DescentResult:
    M: object  # FiniteModule over R, or ModulePresentation
    rho_is_iso: bool
    note: str = ""
    detail: dict = field(default_factory=dict)


def descend(d, check_purity: bool = True) -> DescentResult:
    """M = ker(α_N − θ_N) and whether ρ: S⊗M → N is an isomorphism."""
    if isinstance(d, PresentedCanonicalDatum):
        return d.descend(check_purity)
    alpha, fs, N = d.alpha, d.structure, d.N
    if check_purity:
        _require_pure(alpha)
    fixed = [n for n in range(N.size) if d.theta[n, 0] == n and (d.theta[n, 1:] == 0).all()]
    N_R = FiniteModule.restriction(alpha, N)
    M = N_R.submodule(fixed)
    inc = M.inclusion
    from .finite import _digits
    r = fs.r
    if M.size ** r > 2 ** 20:
        return DescentResult(M, False, "S⊗M too large to check")
    V = _digits(M.size, r)
    img = np.zeros(len(V), dtype=np.int64)
    for a in range(r):
        img = N.add[img, N.act[fs.basis[a], inc[V[:, a]]]]
    iso = len(V) == N.size and len(np.unique(img)) == N.size
    return DescentResult(M, bool(iso), "ρ checked on all of S⊗M ≅ M^r")


def round_trip(alpha: FiniteRingMap, M0: FiniteModule) -> bool:
    """descend(canonical_datum(M0)) ≅ M0, by an explicit isomorphism search."""
    res = descend(canonical_datum(alpha, M0))
    if not res.rho_is_iso:
        return False
    return find_isomorphism(M0, res.M) is not None


# ---------------------------------------------------------------- presented backend


class PresentedCanonicalDatum:
    """Canonical datum on N = S⊗_R M0 for a RingMapSpec with finite presentation.

    Modules are presented over R: N on generators w_a⊗g_i, S⊗N on
    w_c⊗w_a⊗g_i, S⊗S⊗N on w_d⊗w_c⊗w_a⊗g_i; every map is a matrix on
    generators and equalities are decided modulo the codomain's relations.
    """

    def __init__(self, alpha, M0):
        from .modules import tensor_product
        from .purity import PresentationExtractor
        if alpha.finite_presentation is None:
            raise MissingPresentation("descent needs a finite presentation of the target")
        self.alpha = alpha
        fp = alpha.finite_presentation
        self.n = fp.n
        self.k = M0.n_generators
        self.R = M0.ring
        self.S_mod = _graded_target_module(alpha, M0.ring)
        self.M0 = M0
        self.N = tensor_product(self.S_mod, M0)
        self.SN = tensor_product(self.S_mod, self.N)
        self._SSN = None
        ex = PresentationExtractor(alpha, fp.gen_witnesses, fp.one_coords)
        w = fp.gen_witnesses
        self.prod = [[ex.coordinates(alpha.target_mul(w[a], w[b])) for b in range(self.n)]
                     for a in range(self.n)]
        self.one = fp.one_coords

    @property
    def SSN(self):
        from .modules import tensor_product
        if self._SSN is None:
            self._SSN = tensor_product(self.S_mod, self.SN)
        return self._SSN

    # generator indices
    def iN(self, a, i):
        return a * self.k + i

    def iSN(self, c, a, i):
        return c * self.n * self.k + self.iN(a, i)

    def iSSN(self, d, c, a, i):
        return d * self.n * self.n * self.k + self.iSN(c, a, i)

    def _vec(self, size, entries):
        R = self.R
        v = [R.ring.zero()] * size
        for idx, c in entries:
            v[idx] = v[idx] + c
        return tuple(R.nf(x) for x in v)

    # maps, as lists of columns on domain generators
    def alpha_N(self):
        size = self.SN.n_generators
        return [self._vec(size, [(self.iSN(c, a, i), self.one[c]) for c in range(self.n)])
                for a in range(self.n) for i in range(self.k)]

    def theta_N(self):
        size = self.SN.n_generators
        return [self._vec(size, [(self.iSN(a, b, i), self.one[b]) for b in range(self.n)])
                for a in range(self.n) for i in range(self.k)]

    def lam(self):
        size = self.N.n_generators
        return [self._vec(size, [(self.iN(e, i), self.prod[c][a][e]) for e in range(self.n)])
                for c in range(self.n) for a in range(self.n) for i in range(self.k)]

    def one_alpha(self):
        size = self.SSN.n_generators
        return [self._vec(size, [(self.iSSN(c, d, a, i), self.one[d]) for d in range(self.n)])
                for c in range(self.n) for a in range(self.n) for i in range(self.k)]

    def one_theta(self):
        size = self.SSN.n_generators
        return [self._vec(size, [(self.iSSN(c, a, b, i), self.one[b]) for b in range(self.n)])
                for c in range(self.n) for a in range(self.n) for i in range(self.k)]

    def mu(self):
        size = self.SN.n_generators
        return [self._vec(size, [(self.iSN(e, a, i), self.prod[d][c][e]) for e in range(self.n)])
                for d in range(self.n) for c in range(self.n) for a in range(self.n)
                for i in range(self.k)]

    def _apply(self, F, vec, rank):
        from .modules import apply_map
        return apply_map(F, vec, self.R, rank)

    def _compose(self, F, G, rank_G):
        """G ∘ F as columns."""
        return [self._apply(G, col, rank_G) for col in F]

    def _equal(self, F, G, target) -> bool:
        R = self.R
        return all(target.contains(tuple(R.nf(a - b) for a, b in zip(x, y))) for x, y in zip(F, G))

    def verify(self) -> IdentityReport:
        from .modules import unit_vector
        nN, nSN, nSSN = self.N.n_generators, self.SN.n_generators, self.SSN.n_generators
        a_N, t_N, lam = self.alpha_N(), self.theta_N(), self.lam()
        oa, ot, mu = self.one_alpha(), self.one_theta(), self.mu()
        ids = {}
        ids["1"] = self._equal(self._compose(t_N, ot, nSSN), self._compose(t_N, oa, nSSN), self.SSN)
        ids["2"] = self._equal(self._compose(t_N, lam, nN), [unit_vector(self.R, nN, j) for j in range(nN)], self.N)
        ids["3"] = self._equal(self._compose(oa, mu, nSN), [unit_vector(self.R, nSN, j) for j in range(nSN)], self.SN)
        ids["4"] = self._equal(self._compose(ot, mu, nSN), self._compose(lam, t_N, nSN), self.SN)
        R = self.R
        d1 = [tuple(R.nf(x - y) for x, y in zip(p, q)) for p, q in zip(oa, ot)]
        lhs = self._compose(self._compose(d1, mu, nSN), d1, nSSN)
        ids["5"] = self._equal(lhs, d1, self.SSN)
        # the canonical φ permutes tensor factors, so the cocycle holds on generators
        return IdentityReport(ids, True, ids["2"], True, None,
                              note=COCYCLE_NOTE + "; canonical datum: cocycle holds by construction")

    def descend(self, check_purity: bool = True) -> DescentResult:
        from .groebner import Submodule
        from .modules import kernel_of_map, tensor_product
        from .purity import split_test
        if check_purity and split_test(self.alpha).tag != "Split":
            raise NotPure("descent reconstruction needs a pure (split) map")
        R = self.R
        f = [tuple(R.nf(x - y) for x, y in zip(p, q)) for p, q in zip(self.alpha_N(), self.theta_N())]
        M = kernel_of_map(f, self.N, self.SN)
        nN = self.N.n_generators
        # surjectivity of ρ: the S-span of M generates N over R
        images = []
        for vec in M.embedding:
            for b in range(self.n):
                out = [R.ring.zero()] * nN
                for a in range(self.n):
                    for i in range(self.k):
                        c = vec[self.iN(a, i)]
                        if c:
                            for e in range(self.n):
                                out[self.iN(e, i)] = out[self.iN(e, i)] + c * self.prod[b][a][e]
                images.append(tuple(R.nf(x) for x in out))
        span = Submodule(R, nN, images + list(self.N.relations))
        surjective = all(span.contains(tuple(R.ring.one() if j == g else R.ring.zero()
                                             for j in range(nN))) for g in range(nN))
        detail = {"surjective": surjective}
        iso = surjective
        if self.N.generator_degrees is not None and M.generator_degrees is not None:
            hs_N = self.N.hilbert_sample()
            hs_SM = tensor_product(self.S_mod, M).hilbert_sample()
            detail.update(hilbert_N=hs_N, hilbert_SM=hs_SM, hilbert_M=M.hilbert_sample(),
                          hilbert_M0=self.M0.hilbert_sample() if self.M0.generator_degrees is not None else None)
            iso = surjective and hs_N == hs_SM
            note = "Hilbert samples (degrees 0..8) and surjectivity"
        else:
            note = "surjectivity only (ungraded)"
        return DescentResult(M, bool(iso), note, detail)


def induced_grading(alpha):
    """Weights on the source and degrees of the witnesses from a graded target, or None."""
    from .errors import NotGraded
    T = alpha.target
    if alpha.is_product:
        return None
    try:
        T = T.graded()
    except NotGraded:
        return None
    w = T.weights
    weights = []
    for img in alpha.images:
        if img.is_zero() or not img.is_homogeneous(w) or img.degree(w) <= 0:
            return None
        weights.append(img.degree(w))
    degs = []
    for x in alpha.finite_presentation.gen_witnesses:
        if x.is_zero() or not x.is_homogeneous(w):
            return None
        degs.append(x.degree(w))
    return tuple(weights), tuple(degs)


def graded_source(alpha):
    """The source with the weights induced from the target, when available."""
    g = induced_grading(alpha)
    if g is None or not alpha.source.nvars:
        return alpha.source
    try:
        return alpha.source.with_weights(g[0])
    except Exception:  # relations not homogeneous for the induced weights
        return alpha.source


def _graded_target_module(alpha, R):
    from .modules import ModulePresentation
    fp = alpha.finite_presentation
    g = induced_grading(alpha)
    degs = None
    if g is not None and R.weights is not None and tuple(R.weights) == g[0]:
        degs = g[1]
    try:
        return ModulePresentation(R, fp.n, fp.relations, degs)
    except Exception:
        return ModulePresentation(R, fp.n, fp.relations)
