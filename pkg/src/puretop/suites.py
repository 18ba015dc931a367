"""Randomized property suites over small finite rings.

* descent: split-equalizer identities for canonical data and reconstruction
  of the module from its descended kernel;
* oracle: the Gröbner split test against exhaustive search on specialized
  artinian instances, and exhaustive purity against exhaustive splitting;
* retraction: for a split map and an R-linear f: M → N, the image of f is a
  retract of the image of 1⊗f.

The seed comes from ``PURETOP_SEED`` when set.
"""
from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

import numpy as np

from .descent import canonical_datum, corrupt, round_trip
from .errors import TooLarge
from .finite import (
    FiniteModule,
    FiniteRing,
    FiniteRingMap,
    brute_pure,
    brute_split,
    image_retraction_exists,
    linear_maps,
    specialize,
    specialize_map,
)

DEFAULT_SEED = 20240917


def suite_seed(seed=None) -> int:
    if seed is not None:
        return int(seed)
    return int(os.environ.get("PURETOP_SEED", DEFAULT_SEED))


@dataclass
class SuiteResult:
    name: str
    instances: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0
    counts: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def line(self) -> str:
        extra = "".join(f", {k}={v}" for k, v in sorted(self.counts.items()))
        return (f"{self.name}: {self.instances} instances, {len(self.failures)} failures"
                f"{extra}, {self.elapsed:.2f}s")


# ---------------------------------------------------------------- finite instances


def base_rings() -> list:
    return [
        FiniteRing.zmod(2), FiniteRing.zmod(3), FiniteRing.zmod(4), FiniteRing.zmod(5),
        FiniteRing.zmod(6), FiniteRing.extension(2, [0, 0]), FiniteRing.extension(2, [1, 1]),
        FiniteRing.extension(3, [0, 0]), FiniteRing.product(FiniteRing.zmod(2), FiniteRing.zmod(2)),
    ]


def diagonal(R: FiniteRing, copies: int = 2) -> FiniteRingMap:
    S, table = R, np.arange(R.size)
    for _ in range(copies - 1):
        table = table * R.size + np.arange(R.size)
        S = FiniteRing.product(S, R)
    return FiniteRingMap(R, S, table, name=f"diagonal^{copies}")


def quadratic_extension(R: FiniteRing, c0: int, c1: int) -> FiniteRingMap:
    """R → R[t]/(t² − c1·t − c0), elements a + b·t stored as a·|R| + b."""
    N = R.size
    i = np.arange(N * N)
    a, b = i // N, i % N
    A, M = R.add, R.mul
    add = A[a[:, None], a[None]] * N + A[b[:, None], b[None]]
    bd = M[b[:, None], b[None]]
    re = A[M[a[:, None], a[None]], M[bd, c0]]
    im = A[A[M[a[:, None], b[None]], M[b[:, None], a[None]]], M[bd, c1]]
    mul = re * N + im
    labels = [f"{R.labels[x]} + {R.labels[y]}t" for x, y in zip(a, b)]
    S = FiniteRing(add, mul, R.one * N, labels, name=f"{R}[t]")
    return FiniteRingMap(R, S, np.arange(N) * N, name="quadratic")


def random_free_map(R: FiniteRing, rng) -> FiniteRingMap:
    kinds = ["identity", "diagonal", "quadratic"]
    if R.size ** 3 <= 256:
        kinds.append("diagonal3")
    k = kinds[rng.integers(len(kinds))]
    if k == "identity":
        return FiniteRingMap.identity(R)
    if k == "diagonal":
        return diagonal(R)
    if k == "diagonal3":
        return diagonal(R, 3)
    return quadratic_extension(R, int(rng.integers(R.size)), int(rng.integers(R.size)))


def random_module(R: FiniteRing, rng, max_rank: int = 2) -> FiniteModule:
    k = int(rng.integers(1, max_rank + 1))
    if R.size ** k > 64:
        k = 1
    rels = [tuple(int(x) for x in rng.integers(R.size, size=k)) for _ in range(rng.integers(0, 3))]
    return FiniteModule.quotient_of_free(R, k, rels)


def descent_instances(n: int, rng, max_n: int = 256):
    rings = base_rings()
    out = []
    while len(out) < n:
        R = rings[rng.integers(len(rings))]
        alpha = random_free_map(R, rng)
        M0 = random_module(R, rng)
        r = round(np.log(alpha.target.size) / np.log(R.size))
        if M0.size ** r > max_n:
            continue
        out.append((alpha, M0))
    return out


def descent_suite(n_identities: int = 100, n_round_trips: int = 50, seed=None) -> SuiteResult:
    rng = np.random.default_rng(suite_seed(seed))
    res = SuiteResult("descent")
    t0 = time.perf_counter()
    caught = tried = 0
    for i, (alpha, M0) in enumerate(descent_instances(n_identities, rng)):
        d = canonical_datum(alpha, M0)
        rep = d.verify()
        if not rep.all_pass:
            res.failures.append(f"instance {i}: identities {rep.failed()} cocycle={rep.cocycle}")
        if d.N.size > 1:
            tried += 1
            caught += not corrupt(d).verify().all_pass
        if i < n_round_trips and not round_trip(alpha, M0):
            res.failures.append(f"instance {i}: round trip failed")
        res.instances += 1
    res.counts = {"round_trips": min(n_round_trips, res.instances), "corruptions": tried,
                  "corruptions_caught": caught}
    res.elapsed = time.perf_counter() - t0
    return res


def retraction_suite(n: int = 20, seed=None) -> SuiteResult:
    """Split maps give retractions of Im f inside Im(1⊗f) for random f: M → N."""
    rng = np.random.default_rng(suite_seed(seed) + 1)
    res = SuiteResult("retraction")
    t0 = time.perf_counter()
    rings = base_rings()
    while res.instances < n:
        R = rings[rng.integers(len(rings))]
        if R.size > 6:
            continue
        alpha = random_free_map(R, rng)
        M, N = random_module(R, rng, 1), random_module(R, rng, 2)
        if alpha.target.size ** len(N.presentation()[0]) > 4096:
            continue
        tables, _, _ = linear_maps(M, N)
        if not len(tables):
            continue
        f = tables[rng.integers(len(tables))]
        if not image_retraction_exists(alpha, M, N, f):
            res.failures.append(f"instance {res.instances}: no retraction")
        res.instances += 1
    res.elapsed = time.perf_counter() - t0
    return res


# ---------------------------------------------------------------- oracle equivalence


def artinian_bases():
    from .coeffs import GF
    from .groebner import QuotientRing
    specs = [
        (2, "x", ["x^2"]), (2, "x", ["x^3"]), (2, "x", ["x^4"]), (3, "x", ["x^2"]),
        (2, "xy", ["x^2", "x*y", "y^2"]), (2, "xy", ["x^2", "y^2"]), (2, "x", ["x"]),
        (3, "x", ["x"]), (5, "x", ["x"]),
    ]
    return [QuotientRing.polynomial(list(v), GF(p), rels) for p, v, rels in specs]


def _random_element(R, basis, rng, density=0.5):
    p = R.coeff.characteristic
    f = R.ring.zero()
    for m in basis:
        if rng.random() < density:
            f = f + R.ring.monomial(m) * int(rng.integers(p))
    return R.nf(f)


def oracle_instance(R, rng):
    """R → S = R[z]/(z² − c·z − d, r0 + r1·z) with its two-column presentation."""
    from .groebner import QuotientRing
    from .poly import PolyRing
    from .purity import FinitePresentation, RingMapSpec
    sR = specialize(R)
    basis = sR.basis
    c, d = (_random_element(R, basis, rng) for _ in range(2))
    r0 = _random_element(R, basis, rng, 0.4)
    r1 = _random_element(R, basis, rng, 0.3)
    n = R.nvars
    ring = PolyRing(R.names + ("z",), R.coeff)
    pos = list(range(n))
    z = ring.gen(n)
    up = lambda f: f.embed(ring, pos)
    rels = [up(g) for g in R.ideal.generators] + [z ** 2 - up(c) * z - up(d), up(r0) + up(r1) * z]
    S = QuotientRing(ring, rels)
    if S.ideal.is_unit_ideal():
        return None
    D = ((r0, r1), (R.nf(r1 * d), R.nf(r0 + r1 * c)))
    fp = FinitePresentation(D, (R.ring.one(), R.ring.zero()), (ring.one(), z))
    alpha = RingMapSpec(R, S, [ring.gen(i) for i in range(n)], fp)
    try:
        sS = specialize(S)
    except TooLarge:
        return None
    return alpha, specialize_map(alpha, sR, sS)


def oracle_suite(n: int = 50, seed=None, pure_check: bool = True) -> SuiteResult:
    from .purity import split_test
    rng = np.random.default_rng(suite_seed(seed) + 2)
    res = SuiteResult("oracle")
    t0 = time.perf_counter()
    bases = artinian_bases()
    tags = {"Split": 0, "NoSplit": 0}
    pure_checked = 0
    while res.instances < n:
        R = bases[rng.integers(len(bases))]
        inst = oracle_instance(R, rng)
        if inst is None:
            continue
        alpha, fin = inst
        v = split_test(alpha)
        b = brute_split(fin)
        tags[v.tag] = tags.get(v.tag, 0) + 1
        if v.tag != b.tag:
            res.failures.append(f"instance {res.instances}: split_test {v.tag} vs brute {b.tag}")
        if not v.verify(alpha):
            res.failures.append(f"instance {res.instances}: certificate does not verify")
        if pure_check:
            pure_checked += 1
            if brute_pure(fin) != (b.tag == "Split"):
                res.failures.append(f"instance {res.instances}: brute_pure disagrees with brute_split")
        res.instances += 1
    res.counts = {"split": tags.get("Split", 0), "nosplit": tags.get("NoSplit", 0),
                  "pure_checked": pure_checked}
    res.elapsed = time.perf_counter() - t0
    return res


def finite_purity_suite(seed=None, n: int = 60) -> SuiteResult:
    """brute_pure against brute_split on random finite maps, free or not."""
    rng = np.random.default_rng(suite_seed(seed) + 3)
    res = SuiteResult("finite-purity")
    t0 = time.perf_counter()
    rings = base_rings()
    agree = {"Split": 0, "NoSplit": 0}
    while res.instances < n:
        R = rings[rng.integers(len(rings))]
        alpha = random_free_map(R, rng)
        if rng.random() < 0.5:
            alpha = _with_quotient(alpha, rng)
            if alpha is None:
                continue
        b = brute_split(alpha)
        agree[b.tag] += 1
        if brute_pure(alpha) != (b.tag == "Split"):
            res.failures.append(f"instance {res.instances}: purity and splitting disagree")
        res.instances += 1
    res.counts = {"split": agree["Split"], "nosplit": agree["NoSplit"]}
    res.elapsed = time.perf_counter() - t0
    return res


def _with_quotient(alpha: FiniteRingMap, rng):
    """Compose α with S → S/(s) for a random s ≠ unit, when the result is still unital."""
    S = alpha.target
    s = int(rng.integers(S.size))
    I = sorted(S.ideal_span([s]))
    if S.one in I:
        return None
    Q = FiniteModule.quotient(S, S.add, S.mul, I)
    coset = Q.coset_of
    reps = np.unique(coset, return_index=True)[1]
    T = FiniteRing(Q.add, coset[S.mul[reps[:, None], reps[None, :]]], int(coset[S.one]),
                   [S.labels[r] for r in reps], name=f"{S}/({S.labels[s]})")
    return FiniteRingMap(alpha.source, T, coset[alpha.table], name="quotient")


def run_all(seed=None) -> list:
    return [descent_suite(seed=seed), retraction_suite(seed=seed), oracle_suite(seed=seed),
            finite_purity_suite(seed=seed)]
