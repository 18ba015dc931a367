"""Descent data: split-equalizer identities, corruption and reconstruction."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from _oracles import catalog_text, env_of
from puretop.descent import (
    COCYCLE_ORDER, canonical_datum, corrupt, descend, graded_source, round_trip, verify_split_equalizer,
)
from puretop.errors import MissingPresentation, NotPure
from puretop.finite import FiniteModule, FiniteRing, FiniteRingMap, find_isomorphism
from puretop.modules import ModulePresentation
from puretop.suites import descent_instances, diagonal, quadratic_extension

Z2 = FiniteRing.zmod(2)
DIAG = diagonal(Z2)


def free(R, k):
    return FiniteModule.quotient_of_free(R, k, [])


def unit_law_oracle(d):
    """λ(θ(n)) = Σ_a w_a·θ(n)_a recomputed from the module tables."""
    N, basis = d.N, d.structure.basis
    for n in range(N.size):
        acc = 0
        for a, w in enumerate(basis):
            acc = N.add[acc, N.act[w, d.theta[n, a]]]
        if acc != n:
            return False
    return True


# ---------------------------------------------------------------- examples


def test_datum_on_ring():
    for alpha in (DIAG, quadratic_extension(Z2, 1, 1), FiniteRingMap.identity(Z2)):
        d = canonical_datum(alpha, free(alpha.source, 1))
        assert d.N.size == alpha.target.size
        assert unit_law_oracle(d)
        assert d.verify().unit_law


def test_diagonal_datum_passes_all_checks():
    d = canonical_datum(DIAG, free(Z2, 1))
    assert d.structure.r == 2
    rep = verify_split_equalizer(d)
    assert rep.all_pass
    assert rep.identities == {k: True for k in "12345"}
    assert rep.cocycle_order == COCYCLE_ORDER
    assert unit_law_oracle(d)


def test_block_datum_is_direct_sum():
    R = FiniteRing.zmod(3)
    alpha = diagonal(R)
    one = canonical_datum(alpha, free(R, 1))
    two = canonical_datum(alpha, free(R, 2))
    assert two.verify().all_pass
    assert two.N.size == one.N.size ** 2
    assert descend(two).M.size == descend(one).M.size ** 2


def test_corruption_caught():
    d = canonical_datum(DIAG, free(Z2, 2))
    bad = corrupt(d)
    rep = bad.verify()
    assert not rep.all_pass
    assert {"1", "4"} & set(rep.failed())
    assert not unit_law_oracle(bad) or not rep.identities["1"]


def test_corruption_of_rank_one_fails_unit_law():
    d = canonical_datum(FiniteRingMap.identity(Z2), free(Z2, 1))
    rep = corrupt(d).verify()
    assert rep.failed() == ["2"]


def test_zero_module():
    d = canonical_datum(DIAG, FiniteModule.quotient_of_free(Z2, 1, [(1,)]))
    assert d.N.size == 1 and d.verify().all_pass
    res = descend(d)
    assert res.M.size == 1 and res.rho_is_iso


def test_round_trip_diagonal():
    M0 = free(Z2, 2)
    res = descend(canonical_datum(DIAG, M0))
    assert res.rho_is_iso
    assert find_isomorphism(M0, res.M) is not None
    assert round_trip(DIAG, M0)


def test_non_free_target_rejected():
    red = FiniteRingMap(FiniteRing.zmod(4), Z2, np.arange(4) % 2)
    with pytest.raises(MissingPresentation):
        canonical_datum(red, free(FiniteRing.zmod(4), 1))


def test_quadric_descends_to_ring():
    env = env_of(catalog_text("quadric-cone"))
    a = env["a"]
    M0 = ModulePresentation.free(graded_source(a), 1, (0,))
    d = canonical_datum(a, M0)
    assert d.verify().all_pass
    res = descend(d)
    assert res.rho_is_iso
    assert res.detail["hilbert_M"] == res.detail["hilbert_M0"]
    assert res.detail["hilbert_SM"] == res.detail["hilbert_N"]


def test_descent_needs_purity():
    env = env_of(catalog_text("semigroup-t3-t5"))
    s = env["s"]
    d = canonical_datum(s, ModulePresentation.free(s.source, 1))
    with pytest.raises(NotPure):
        descend(d)


# ---------------------------------------------------------------- properties

@settings(max_examples=25)
@given(st.integers(0, 2 ** 32 - 1))
def test_canonical_data_satisfy_identities(seed):
    (alpha, M0), = descent_instances(1, np.random.default_rng(seed))
    d = canonical_datum(alpha, M0)
    assert d.verify().all_pass
    assert unit_law_oracle(d)
    assert round_trip(alpha, M0)


@settings(max_examples=25)
@given(st.integers(0, 2 ** 32 - 1), st.data())
def test_corrupted_data_fail(seed, data):
    (alpha, M0), = descent_instances(1, np.random.default_rng(seed))
    d = canonical_datum(alpha, M0)
    if d.N.size == 1:
        return
    n = data.draw(st.integers(0, d.N.size - 1))
    slot = data.draw(st.integers(0, d.structure.r - 1))
    assert not corrupt(d, n, slot).verify().all_pass
