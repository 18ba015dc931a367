"""Finite commutative rings and modules by tables; brute-force ground truth.

Elements are integers ``0..N-1`` indexing numpy addition/multiplication
tables; index 0 is always zero.  Rings built from a Z/n-basis encode the
coordinate vector v as Σ v_i·n^i, so the coordinates of element ``a`` are
its base-n digits.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Optional, Sequence

import numpy as np

from .errors import IncompatibleMap, RingAxiomFailed, TooLarge
from .purity import SplitVerdict

CARRIER_CAP = 256
SEARCH_CAP = 2 ** 20


def _digits(N_per: int, k: int, count: int = None) -> np.ndarray:
    """All vectors in range(N_per)^k, row i encoding i = Σ v_j·N_per^j."""
    count = N_per ** k if count is None else count
    idx = np.arange(count, dtype=np.int64)
    out = np.empty((count, k), dtype=np.int64)
    for j in range(k):
        out[:, j] = idx % N_per
        idx //= N_per
    return out


def _encode(vecs: np.ndarray, N_per: int) -> np.ndarray:
    vecs = np.asarray(vecs, dtype=np.int64)
    w = N_per ** np.arange(vecs.shape[-1], dtype=np.int64)
    return vecs @ w


class FiniteRing:
    """A finite commutative ring; ring axioms are checked exhaustively on construction."""

    def __init__(self, add, mul, one: int, labels: Sequence[str] = None, *,
                 char: int = None, coords: np.ndarray = None, name: str = None):
        add = np.asarray(add, dtype=np.int64)
        mul = np.asarray(mul, dtype=np.int64)
        N = add.shape[0]
        if N > CARRIER_CAP:
            raise TooLarge(f"ring with {N} elements exceeds the cap of {CARRIER_CAP}")
        self.size = N
        self.add = add
        self.mul = mul
        self.zero = 0
        self.one = int(one)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(N))
        self.char = char
        self.coords = coords
        self.name = name
        self._verify()
        self.neg = np.argmax(add == 0, axis=1)

    def _verify(self):
        a, m, N = self.add, self.mul, self.size
        if a.shape != (N, N) or m.shape != (N, N):
            raise RingAxiomFailed("tables must be square")
        if ((a < 0) | (a >= N)).any() or ((m < 0) | (m >= N)).any():
            raise RingAxiomFailed("table entries out of range")
        r = np.arange(N)
        if not (a[0] == r).all():
            raise RingAxiomFailed("0 is not the additive identity")
        if not (m[self.one] == r).all():
            raise RingAxiomFailed("'one' is not the multiplicative identity")
        if not ((a == a.T).all() and (m == m.T).all()):
            raise RingAxiomFailed("operations are not commutative")
        if not (a == 0).any(axis=1).all():
            raise RingAxiomFailed("missing additive inverses")
        I = r[:, None, None]
        if not (a[a] == a[I, a[None]]).all():
            raise RingAxiomFailed("addition is not associative")
        if not (m[m] == m[I, m[None]]).all():
            raise RingAxiomFailed("multiplication is not associative")
        if not (m[I, a[None]] == a[m[:, :, None], m[:, None, :]]).all():
            raise RingAxiomFailed("multiplication does not distribute over addition")

    # -- constructors
    @classmethod
    def zmod(cls, n: int) -> "FiniteRing":
        r = np.arange(n)
        return cls((r[:, None] + r) % n, (r[:, None] * r) % n, 1 % n,
                   [str(i) for i in range(n)], char=n, coords=r[:, None], name=f"Z{n}")

    @classmethod
    def algebra(cls, n: int, structure: np.ndarray, basis_names: Sequence[str], name: str = None):
        """Free Z/n-algebra on a basis b_0 = 1, b_1, … with b_i b_j = Σ_k structure[i,j,k] b_k."""
        C = np.asarray(structure, dtype=np.int64) % n
        r = C.shape[0]
        N = n ** r
        if N > CARRIER_CAP:
            raise TooLarge(f"{n}^{r} elements exceeds the cap of {CARRIER_CAP}")
        V = _digits(n, r)
        add = _encode((V[:, None, :] + V[None, :, :]) % n, n)
        W = np.einsum("ai,ijk->ajk", V, C)
        P = np.einsum("bj,ajk->abk", V, W) % n
        mul = _encode(P, n)
        labels = [_vec_label(v, basis_names) for v in V]
        return cls(add, mul, 1, labels, char=n, coords=V, name=name)

    @classmethod
    def product(cls, A: "FiniteRing", B: "FiniteRing") -> "FiniteRing":
        nA, nB = A.size, B.size
        i = np.arange(nA * nB)
        a, b = i // nB, i % nB
        add = A.add[a[:, None], a[None]] * nB + B.add[b[:, None], b[None]]
        mul = A.mul[a[:, None], a[None]] * nB + B.mul[b[:, None], b[None]]
        labels = [f"({A.labels[x]}, {B.labels[y]})" for x, y in zip(a, b)]
        coords = char = None
        if A.char == B.char and A.coords is not None and B.coords is not None:
            char = A.char
            coords = np.concatenate([A.coords[a], B.coords[b]], axis=1)
        return cls(add, mul, A.one * nB + B.one, labels, char=char, coords=coords,
                   name=f"{A.name}x{B.name}")

    @classmethod
    def extension(cls, base_n: int, monic_coeffs: Sequence[int], var: str = "t") -> "FiniteRing":
        """Z/n[t]/(t^d + c_{d-1} t^{d-1} + … + c_0), ``monic_coeffs`` = (c_0, …, c_{d-1})."""
        d = len(monic_coeffs)
        C = np.zeros((d, d, d), dtype=np.int64)
        for i in range(d):
            for j in range(d):
                v = np.zeros(2 * d, dtype=np.int64)
                v[i + j] = 1
                for e in range(2 * d - 1, d - 1, -1):
                    c = v[e]
                    if c:
                        v[e] = 0
                        for k in range(d):
                            v[e - d + k] -= c * monic_coeffs[k]
                C[i, j] = v[:d] % base_n
        names = ["1"] + [var if i == 1 else f"{var}^{i}" for i in range(1, d)]
        return cls.algebra(base_n, C, names, name=f"Z{base_n}[{var}]")

    # -- element helpers
    def elements(self) -> range:
        return range(self.size)

    def sub(self, a, b):
        return self.add[a, self.neg[b]]

    def from_coords(self, vec) -> int:
        return int(_encode(np.asarray(vec) % self.char, self.char))

    def units(self) -> list:
        return [a for a in range(self.size) if (self.mul[a] == self.one).any()]

    def ideal_span(self, gens) -> frozenset:
        return frozenset(module_span(self.add, self.mul, gens))

    def label(self, a) -> str:
        return self.labels[a]

    def __str__(self):
        return self.name or f"FiniteRing({self.size})"


def _vec_label(v, names) -> str:
    parts = []
    for c, nm in zip(v, names):
        if c:
            parts.append(str(c) if nm == "1" else (nm if c == 1 else f"{c}*{nm}"))
    return " + ".join(parts) if parts else "0"


def module_span(add, act, gens) -> list:
    """R-span of ``gens`` in a module with tables ``add`` and ``act`` (act[r, m])."""
    span = np.array([0], dtype=np.int64)
    for g in gens:
        mults = np.unique(act[:, g])
        span = np.unique(add[span[:, None], mults[None, :]].ravel())
    return sorted(int(x) for x in span)


# ---------------------------------------------------------------- modules


class FiniteModule:
    """A module over a finite ring by tables: ``add[m, m']`` and ``act[r, m]``."""

    def __init__(self, ring: FiniteRing, add, act, labels=None, name: str = None):
        self.ring = ring
        self.add = np.asarray(add, dtype=np.int64)
        self.act = np.asarray(act, dtype=np.int64)
        self.size = self.add.shape[0]
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(self.size))
        self.name = name
        self.neg = np.argmax(self.add == 0, axis=1)
        self._pres = None

    def check_axioms(self) -> bool:
        R, a, s = self.ring, self.add, self.act
        m = np.arange(self.size)
        ok = (a[0] == m).all() and (a == a.T).all() and (s[R.one] == m).all()
        ok = ok and (a[a] == a[m[:, None, None], a[None]]).all()
        ok = ok and (s[:, a] == a[s[:, :, None], s[:, None, :]]).all()
        ok = ok and (s[R.add] == a[s[:, None, :], s[None, :, :]]).all()
        ok = ok and (s[R.mul] == s[np.arange(R.size)[:, None, None], s[None, :, :]]).all()
        return bool(ok)

    @classmethod
    def ring_as_module(cls, R: FiniteRing) -> "FiniteModule":
        return cls(R, R.add, R.mul, R.labels, name=str(R))

    @classmethod
    def restriction(cls, phi: "FiniteRingMap", M: "FiniteModule" = None) -> "FiniteModule":
        """An S-module (default S itself) viewed over R through φ."""
        S = phi.target
        if M is None:
            return cls(phi.source, S.add, S.mul[phi.table], S.labels, name=str(S))
        return cls(phi.source, M.add, M.act[phi.table], M.labels, name=M.name)

    @classmethod
    def quotient_of_free(cls, R: FiniteRing, k: int, relations: Sequence[Sequence[int]],
                         cap: int = 2 ** 16) -> "FiniteModule":
        """R^k / (R-span of the relation vectors)."""
        N = R.size
        if N ** k > cap:
            raise TooLarge(f"R^{k} has {N ** k} elements")
        add, act = free_tables(R, k)
        K = module_span(add, act, [int(_encode(np.asarray(v), N)) for v in relations])
        return cls.quotient(R, add, act, K, k)

    @classmethod
    def quotient(cls, R, add, act, K, k=None) -> "FiniteModule":
        """Quotient of a table module by a submodule given as an element list."""
        size = add.shape[0]
        K = np.asarray(K, dtype=np.int64)
        coset = np.full(size, -1, dtype=np.int64)
        reps = []
        for v in range(size):
            if coset[v] < 0:
                coset[add[v, K]] = len(reps)
                reps.append(v)
        reps = np.asarray(reps, dtype=np.int64)
        qadd = coset[add[reps[:, None], reps[None, :]]]
        qact = coset[act[:, reps]]
        if k is not None:
            V = _digits(R.size, k, size)
            labels = ["(" + ", ".join(R.labels[x] for x in V[r]) + ")" for r in reps]
        else:
            labels = [str(r) for r in reps]
        M = cls(R, qadd, qact, labels)
        M.coset_of = coset
        return M

    def submodule(self, elements) -> "FiniteModule":
        """The submodule on an element list closed under the operations."""
        els = np.asarray(sorted(set(int(e) for e in elements)), dtype=np.int64)
        where = np.full(self.size, -1, dtype=np.int64)
        where[els] = np.arange(len(els))
        add = where[self.add[els[:, None], els[None, :]]]
        act = where[self.act[:, els]]
        if (add < 0).any() or (act < 0).any():
            raise ValueError("element list is not a submodule")
        M = FiniteModule(self.ring, add, act, [self.labels[e] for e in els])
        M.inclusion = els
        return M

    def span(self, gens) -> list:
        return module_span(self.add, self.act, gens)

    def generators(self, seed=()) -> list:
        """Greedy generating set, starting from ``seed``."""
        gens = list(seed)
        span = set(self.span(gens))
        while len(span) < self.size:
            # the element enlarging the span most keeps presentations small
            best, best_span = None, span
            for m in range(self.size):
                if m not in span:
                    cand = set(self.span(gens + [m]))
                    if len(cand) > len(best_span):
                        best, best_span = m, cand
                        if len(cand) == self.size:
                            break
            gens.append(best)
            span = best_span
        return gens

    def combos(self, gens):
        """All coefficient tuples in R^g with their values Σ r_i·g_i."""
        g = len(gens)
        N = self.ring.size
        if N ** g > SEARCH_CAP:
            raise TooLarge(f"{N}^{g} coefficient tuples exceed the search cap")
        C = _digits(N, g)
        val = np.zeros(len(C), dtype=np.int64)
        for i, x in enumerate(gens):
            val = self.add[val, self.act[C[:, i], x]]
        return C, val

    def presentation(self):
        """(generators, kernel vectors of R^g → M, a preimage for each element)."""
        if self._pres is None:
            gens = self.generators([])
            C, val = self.combos(gens)
            kernel = C[val == 0]
            _, first = np.unique(val, return_index=True)
            self._pres = (gens, kernel, C[first])
        return self._pres

    def __str__(self):
        return self.name or f"module of size {self.size} over {self.ring}"


def free_tables(R: FiniteRing, k: int):
    """Tables of R^k (vectors encoded in base |R|)."""
    N = R.size
    V = _digits(N, k)
    add = _encode(R.add[V[:, None, :], V[None, :, :]], N)
    act = _encode(R.mul[np.arange(N)[:, None, None], V[None, :, :]], N)
    return add, act


def linear_maps(D: FiniteModule, C: FiniteModule, seed=(), constraints=None, first_only=False,
                gens=None):
    """R-linear maps D → C, as tables, optionally with prescribed values.

    Maps are parametrised by their values on a generating set of D; a tuple of
    values extends iff it kills every relation among the generators.  Returns
    (tables, values-at-generators, generators).
    """
    if D.ring is not C.ring and D.ring.size != C.ring.size:
        raise IncompatibleMap("modules over different rings")
    gens = list(gens) if gens is not None else D.generators(seed)
    Cmat, val = D.combos(gens)
    kernel = Cmat[val == 0]
    _, first = np.unique(val, return_index=True)
    reps = Cmat[first]
    g = len(gens)
    if C.size ** g > SEARCH_CAP:
        raise TooLarge(f"{C.size}^{g} candidate maps exceed the search cap")
    cand = _digits(C.size, g)
    if constraints:
        for d, c in constraints.items():
            cand = cand[_eval(C, reps[d], cand) == c]
    for row in kernel:
        if not cand.size:
            break
        if row.any():
            cand = cand[_eval(C, row, cand) == 0]
    if first_only:
        cand = cand[:1]
    tables = [_eval_all(C, reps, v) for v in cand]
    return tables, cand, gens


def _eval(C: FiniteModule, coeffs, cand):
    out = np.zeros(len(cand), dtype=np.int64)
    for i, r in enumerate(coeffs):
        out = C.add[out, C.act[r, cand[:, i]]]
    return out


def _eval_all(C: FiniteModule, reps, v):
    out = np.zeros(len(reps), dtype=np.int64)
    for i in range(reps.shape[1]):
        out = C.add[out, C.act[reps[:, i], v[i]]]
    return out


def is_linear(D: FiniteModule, C: FiniteModule, table) -> bool:
    t = np.asarray(table)
    return bool((t[D.add] == C.add[t[:, None], t[None, :]]).all()
                and (t[D.act] == C.act[np.arange(D.ring.size)[:, None], t[None, :]]).all())


def find_isomorphism(A: FiniteModule, B: FiniteModule):
    """An R-linear bijection A → B, or None."""
    if A.size != B.size:
        return None
    tables, _, _ = linear_maps(A, B)
    for t in tables:
        if len(np.unique(t)) == A.size:
            return t
    return None


# ---------------------------------------------------------------- ring maps


class FiniteRingMap:
    def __init__(self, source: FiniteRing, target: FiniteRing, table, name: str = None):
        self.source, self.target = source, target
        self.table = np.asarray(table, dtype=np.int64)
        self.name = name
        R, S, f = source, target, self.table
        if f.shape != (R.size,):
            raise IncompatibleMap("map table needs one entry per source element")
        if f[R.one] != S.one or f[0] != 0:
            raise IncompatibleMap("map does not preserve 0 and 1")
        if not (f[R.add] == S.add[f[:, None], f[None, :]]).all():
            raise IncompatibleMap("map is not additive")
        if not (f[R.mul] == S.mul[f[:, None], f[None, :]]).all():
            raise IncompatibleMap("map is not multiplicative")

    @classmethod
    def identity(cls, R: FiniteRing) -> "FiniteRingMap":
        return cls(R, R, np.arange(R.size))

    def compose(self, other: "FiniteRingMap") -> "FiniteRingMap":
        """other ∘ self."""
        return FiniteRingMap(self.source, other.target, other.table[self.table])

    def target_module(self) -> FiniteModule:
        return FiniteModule.restriction(self)

    def is_injective(self) -> bool:
        return len(np.unique(self.table)) == self.source.size

    def verify_verdict(self, verdict: SplitVerdict) -> bool:
        R = self.source
        if verdict.tag == "Split":
            t = np.asarray(verdict.retraction)
            return bool(t.shape == (self.target.size,) and t[self.target.one] == R.one
                        and is_linear(self.target_module(), FiniteModule.ring_as_module(R), t))
        if verdict.tag == "NoSplit":
            J = [R.labels.index(x) for x in verdict.certificate]
            return R.one not in J and set(J) == set(R.ideal_span(J))
        return False


def brute_split(alpha: FiniteRingMap) -> SplitVerdict:
    """Exhaustive search for an R-linear σ: S → R with σ(1) = 1."""
    R = alpha.source
    S_R = alpha.target_module()
    R_R = FiniteModule.ring_as_module(R)
    gens = S_R.generators([alpha.target.one])
    # J_e = {σ(1)}: values of all R-linear maps at the generator 1
    _, values, _ = linear_maps(S_R, R_R, gens=gens)
    J = sorted(set(int(v[0]) for v in values))
    if R.one in J:
        v = next(v for v in values if v[0] == R.one)
        Cmat, val = S_R.combos(gens)
        _, first = np.unique(val, return_index=True)
        table = _eval_all(R_R, Cmat[first], v)
        return SplitVerdict("Split", retraction=tuple(int(x) for x in table))
    return SplitVerdict("NoSplit", certificate=tuple(R.labels[j] for j in J),
                        note="{" + ", ".join(R.labels[j] for j in J) + "}")


def tensor_with(alpha: FiniteRingMap, M: FiniteModule):
    """S ⊗_R M as an S-module, with the map m ↦ 1⊗m as a table."""
    S = alpha.target
    gens, kernel, reps = M.presentation()
    g = len(gens)
    if S.size ** g > SEARCH_CAP:
        raise TooLarge(f"S^{g} has too many elements")
    add, act = free_tables(S, g)
    L = module_span(add, act, [int(_encode(alpha.table[row], S.size)) for row in kernel])
    T = FiniteModule.quotient(S, add, act, L, g)
    unit = T.coset_of[_encode(alpha.table[reps], S.size)]
    return T, unit


def span_vectors(S: FiniteRing, gens) -> np.ndarray:
    """Encoded elements of the S-submodule of S^g spanned by the rows of ``gens``."""
    gens = np.asarray(gens, dtype=np.int64)
    g = gens.shape[1]
    L = np.zeros((1, g), dtype=np.int64)
    codes = np.zeros(1, dtype=np.int64)
    for v in gens:
        if np.isin(_encode(v, S.size), codes):
            continue
        mults = np.unique(S.mul[:, v], axis=0)
        L = S.add[L[:, None, :], mults[None, :, :]].reshape(-1, g)
        L = np.unique(L, axis=0)
        codes = _encode(L, S.size)
    return np.unique(codes)


def tensor_injective(alpha: FiniteRingMap, M: FiniteModule) -> bool:
    """m ↦ 1⊗m is injective iff only m = 0 lands in the relations of S^g."""
    gens, kernel, reps = M.presentation()
    if not len(gens):
        return True
    S = alpha.target
    L = span_vectors(S, alpha.table[kernel]) if len(kernel) else np.zeros(1, dtype=np.int64)
    images = _encode(alpha.table[reps], S.size)
    return int(np.isin(images, L).sum()) == 1


def dual_module(R: FiniteRing) -> FiniteModule:
    """Hom_Z(R, Z/n) for R free over Z/n: the injective cogenerator of finite R-modules."""
    if R.coords is None or R.char is None:
        raise TooLarge("dual module needs a Z/n-basis of the ring")
    n, V = R.char, R.coords
    r = V.shape[1]
    X = _digits(n, r)
    add = _encode((X[:, None, :] + X[None, :, :]) % n, n)
    basis = [R.from_coords(np.eye(r, dtype=np.int64)[j]) for j in range(r)]
    # (s·χ)_j = χ(s·b_j) = Σ_k coords(s b_j)_k χ_k
    A = np.stack([V[R.mul[:, b]] for b in basis], axis=1)  # (N, r, r)
    act = _encode(np.einsum("sjk,mk->smj", A, X) % n, n)
    return FiniteModule(R, add, act, name=f"dual of {R}")


def probe_modules(R: FiniteRing, bound: int = 64, max_ideals: int = 256) -> list:
    """Modules used by ``brute_pure``: R, every R/I, the dual of R and small R²/Rv."""
    mods = [FiniteModule.ring_as_module(R)]
    ideals = {R.ideal_span([a]) for a in range(R.size)}
    frontier = set(ideals)
    while frontier and len(ideals) < max_ideals:
        new = set()
        for I in frontier:
            for J in list(ideals):
                K = R.ideal_span(sorted(I | J)) if not (I <= J or J <= I) else None
                if K is not None and K not in ideals:
                    new.add(K)
        ideals |= new
        frontier = new
    for I in sorted(ideals, key=lambda s: (len(s), sorted(s))):
        if len(I) > 1:
            M = FiniteModule.quotient(R, R.add, R.mul, sorted(I), 1)
            M.name = "R/(" + ", ".join(R.labels[i] for i in sorted(I)[:4]) + ")"
            mods.append(M)
    if R.coords is not None:
        mods.append(dual_module(R))
    if R.size ** 2 <= 4096:
        for v in iproduct(range(R.size), repeat=2):
            if any(v):
                M = FiniteModule.quotient_of_free(R, 2, [v])
                if M.size <= bound:
                    mods.append(M)
    return mods


def brute_pure(alpha: FiniteRingMap, bound: int = 64, witness: bool = False):
    """Is M → S⊗M injective for every test module M (see ``probe_modules``)?"""
    for M in probe_modules(alpha.source, bound):
        if not tensor_injective(alpha, M):
            return (False, M) if witness else False
    return (True, None) if witness else True


def find_free_basis(alpha: FiniteRingMap):
    """A basis 1 = w_0, w_1, … of S over R when S is free, else None."""
    R, S = alpha.source, alpha.target
    r = round(np.log(S.size) / np.log(R.size)) if R.size > 1 else 0
    if R.size ** r != S.size:
        return None
    S_R = alpha.target_module()
    others = [s for s in range(S.size) if s != S.one]
    for extra in _combinations(others, r - 1):
        basis = [S.one] + list(extra)
        _, val = S_R.combos(basis)
        if len(np.unique(val)) == S.size:
            return basis
    return None


def _combinations(items, k):
    from itertools import combinations
    return combinations(items, k)


def image_retraction_exists(alpha: FiniteRingMap, M: FiniteModule, N: FiniteModule, f) -> bool:
    """For f: M → N, does Im f → Im(1⊗f) ⊆ S⊗N admit an R-linear retraction?"""
    f = np.asarray(f)
    TN, unitN = tensor_with(alpha, N)
    TN_R = FiniteModule.restriction(alpha, TN)
    im_f = sorted(set(int(x) for x in f))
    A = N.submodule(im_f)
    gensM = M.generators([])
    im_t = TN.span([int(unitN[f[g]]) for g in gensM])  # S-span
    B = TN_R.submodule(im_t)
    where_B = {int(e): i for i, e in enumerate(B.inclusion)}
    where_A = {int(e): i for i, e in enumerate(A.inclusion)}
    cons = {where_B[int(unitN[n])]: where_A[n] for n in im_f}
    tables, _, _ = linear_maps(B, A, constraints=cons, first_only=True)
    return bool(tables)


# ---------------------------------------------------------------- specialization


@dataclass
class Specialization:
    """A finite ring obtained from a quotient ring by imposing m^t = 0."""
    ring: FiniteRing
    basis: tuple  # standard monomials
    ideal: object  # the truncated ideal I + m^t
    source: object  # the QuotientRing

    def element(self, f) -> int:
        Q = self.source
        nf = self.ideal.normal_form(Q.ring(f))
        where = {m: i for i, m in enumerate(self.basis)}
        vec = [0] * len(self.basis)
        for m, c in nf.items():
            vec[where[m]] = int(c)
        return self.ring.from_coords(vec)


def _standard_basis(ideal, nvars):
    lts = [g.lm for g in ideal.basis()]
    for i in range(nvars):
        if not any(sum(l) == l[i] and l[i] > 0 for l in lts):
            raise TooLarge("quotient is not finite-dimensional; give a truncation degree")
    out, frontier, seen = [], [(0,) * nvars], set()
    while frontier:
        m = frontier.pop()
        if m in seen or any(all(a <= b for a, b in zip(l, m)) for l in lts):
            continue
        seen.add(m)
        out.append(m)
        for i in range(nvars):
            e = list(m)
            e[i] += 1
            frontier.append(tuple(e))
    order = ideal.ring.order
    out.sort(key=lambda m: order.key(m))
    return tuple(out)


def specialize(Q, t: Optional[int] = None) -> Specialization:
    """The finite ring Q/m^t over F_p (t = None: Q itself, which must be artinian)."""
    from .groebner import Ideal
    from .poly import mono_degree
    cz = Q.coeff
    if not cz.is_field or cz.characteristic == 0:
        raise TooLarge("specialization needs a prime field")
    p = cz.characteristic
    ring = Q.ring
    gens = list(Q.ideal.generators)
    if t is not None:
        gens += [ring.monomial(e) for e in _monomials_total(ring.nvars, t)]
    J = Ideal(ring, gens)
    basis = _standard_basis(J, ring.nvars) if ring.nvars else ((),)
    if J.is_unit_ideal():
        raise TooLarge("the zero ring is not supported")
    r = len(basis)
    if p ** r > CARRIER_CAP:
        raise TooLarge(f"{p}^{r} elements exceeds the cap of {CARRIER_CAP}")
    where = {m: i for i, m in enumerate(basis)}
    C = np.zeros((r, r, r), dtype=np.int64)
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            nf = J.normal_form(ring.monomial(tuple(x + y for x, y in zip(a, b))))
            for m, c in nf.items():
                C[i, j, where[m]] = int(c)
    names = [_mono_name(m, ring.names) for m in basis]
    F = FiniteRing.algebra(p, C, names, name=f"{Q}" + (f" mod m^{t}" if t else ""))
    return Specialization(F, basis, J, Q)


def _monomials_total(n, t):
    if n == 0:
        return [()] if t == 0 else []
    from .groebner import monomials_of_degree
    return monomials_of_degree((1,) * n, t)


def _mono_name(m, names) -> str:
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e]
    return "*".join(parts) if parts else "1"


def specialize_map(alpha, src: Specialization, tgt: Specialization) -> FiniteRingMap:
    """The finite map induced by a RingMapSpec between specializations."""
    R, S = src.ring, tgt.ring
    p = R.char
    rows = []
    for m in src.basis:
        img = alpha.apply(alpha.source.ring.monomial(m))
        rows.append(S.coords[tgt.element(img)])
    A = np.asarray(rows, dtype=np.int64)
    table = _encode((R.coords @ A) % p, p)
    return FiniteRingMap(R, S, table, name=alpha.name)
