"""Frobenius pushforward, F-splitting and the Kunz freeness check."""
from hypothesis import given, settings, strategies as st

from _oracles import sympy_fedder, sympy_jacobian_rank_at_origin
from puretop.coeffs import GF, QQ
from puretop.errors import UnsupportedCoefficients
from puretop.frobenius import f_split_test, fedder_f_pure, frobenius_map, kunz_check, pushforward
from puretop.groebner import QuotientRing
from puretop.modules import minimal_presentation_graded

import pytest


def ring(p, names, rels=()):
    return QuotientRing.polynomial(list(names), GF(p), list(rels))


CUSP = ring(2, "xy", ["y^2 - x^3"])
CONE = ring(3, "uvw", ["w^2 - v^2 - u^2"])


# ---------------------------------------------------------------- examples


def test_line_pushforward_free():
    F = pushforward(ring(2, "x"))
    assert F.basis == ((0,), (1,))
    assert F.presentation.relations == ()


def test_plane_pushforward_free():
    F = pushforward(ring(2, "xy"))
    assert len(F.basis) == 4 and not F.presentation.relations


def test_cusp_pushforward_relations_vanish():
    F = pushforward(CUSP)
    assert len(F.basis) == 4
    _, free = minimal_presentation_graded(F.presentation)
    assert not free
    for col in F.presentation.relations:
        total = sum((c ** 2 * F.generator(a) for c, a in zip(col, F.basis)), CUSP.zero())
        assert CUSP.is_zero(total)


def test_f_split_examples():
    assert f_split_test(CONE).tag == "Split"
    assert f_split_test(CUSP).tag == "NoSplit"
    assert f_split_test(ring(2, "x")).tag == "Split"


def test_cusp_against_fedder_oracle():
    assert not sympy_fedder("y^2 - x^3", "xy", 2)
    assert fedder_f_pure(CUSP) is False


def test_cone_against_fedder_oracle():
    assert sympy_fedder("w^2 - v^2 - u^2", "uvw", 3)
    assert fedder_f_pure(CONE)


def test_kunz_examples():
    r = kunz_check(ring(2, "xy"))
    assert (r.is_free, r.regular_expected, r.consistent) == (True, True, True)
    assert sympy_jacobian_rank_at_origin("y^2 - x^3", "xy", 2) == 0
    r = kunz_check(CUSP)
    assert (r.is_free, r.regular_expected, r.consistent) == (False, False, True)
    r = kunz_check(CONE)
    assert (r.is_free, r.regular_expected, r.consistent) == (False, False, True)
    assert f_split_test(CONE).tag == "Split"  # split but not flat


def test_rational_coefficients_rejected():
    with pytest.raises(UnsupportedCoefficients):
        pushforward(QuotientRing.polynomial(["x"], QQ))


# ---------------------------------------------------------------- properties

REGULAR = [(p, "xyz"[:d]) for p in (2, 3, 5) for d in (1, 2) if p ** d <= 25] + [(2, "xyz")]


@settings(max_examples=20)
@given(st.sampled_from(REGULAR))
def test_polynomial_rings_are_free_and_split(case):
    p, names = case
    R = ring(p, names)
    F = pushforward(R)
    assert len(F.basis) == p ** len(names)
    _, free = minimal_presentation_graded(F.presentation)
    assert free
    assert f_split_test(R).tag == "Split"
    assert kunz_check(R).consistent


HYPERSURFACES = [(2, "xy", "y^2 - x^3"), (3, "uvw", "w^2 - v^2 - u^2"), (2, "xy", "x*y"),
                 (3, "xy", "x*y"), (2, "xyz", "x*y - z^2"), (3, "xy", "y^2 - x^3"),
                 (2, "xy", "x^2 + y^3"), (3, "xyz", "x^3 + y^3 + z^3"), (2, "xyz", "x*y*z")]


@settings(max_examples=30)
@given(st.sampled_from(HYPERSURFACES))
def test_split_test_matches_fedder(case):
    p, names, f = case
    R = ring(p, names, [f])
    assert (f_split_test(R).tag == "Split") == sympy_fedder(f, names, p)


@settings(max_examples=30)
@given(st.sampled_from(HYPERSURFACES))
def test_pushforward_hilbert_matches_ring(case):
    p, names, f = case
    R = ring(p, names, [f])
    F = pushforward(R)
    assert F.presentation.hilbert_sample() == tuple(R.hilbert_function(d) for d in range(9))
    r = kunz_check(R)
    if r.regular_expected is not None:
        assert r.consistent
        assert r.regular_expected == bool(sympy_jacobian_rank_at_origin(f, names, p))


@settings(max_examples=20)
@given(st.sampled_from(HYPERSURFACES + [(p, n, "") for p, n in REGULAR]))
def test_retraction_sends_one_to_one(case):
    p, names, f = case
    R = ring(p, names, [f] if f else [])
    v = f_split_test(R)
    if v.tag == "Split":
        a = frobenius_map(R)
        idx = a.finite_presentation.gen_witnesses.index(R.one())
        assert a.source.is_zero(v.retraction[idx] - 1)
