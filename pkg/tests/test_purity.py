"""Splitting, contraction witnesses and tensor injectivity for module-finite maps."""
from hypothesis import given, strategies as st

from _oracles import catalog_text, env_of
from puretop.coeffs import QQ
from puretop.groebner import QuotientRing
from puretop.modules import ModulePresentation
from puretop.purity import (
    RingMapSpec, SplitVerdict, contraction_witness, retraction_is_valid, split_test,
    tensor_inject_test, with_presentation,
)

QUADRIC = env_of(catalog_text("quadric-cone"))
SEMIGROUP = env_of(catalog_text("semigroup-t3-t5"))
BLOWUP = env_of(catalog_text("blowup"))
CROSSING = env_of(catalog_text("crossing-lines"))


def test_quadric_splits_by_projection():
    a = QUADRIC["a"]
    v = split_test(a)
    assert v.tag == "Split"
    R = a.source
    assert v.retraction == (R.one(), R.zero(), R.zero())
    assert v.verify(a)


def test_quadric_presentation_columns():
    a = QUADRIC["a"]
    for col in a.finite_presentation.relations:
        assert a.target_is_zero(a.evaluate(col))


def test_semigroup_does_not_split():
    s = SEMIGROUP["s"]
    v = split_test(s)
    assert v.tag == "NoSplit"
    assert v.verify(s)
    # the certificate ideal is proper: 1 does not reduce to 0
    assert not s.source.ideal_of(v.certificate).is_unit_ideal()


def test_identity_splits():
    R = QuotientRing.polynomial(["x", "y"], QQ)
    ident = with_presentation(RingMapSpec(R, R, list(R.gens())), [R.one()])
    v = split_test(ident)
    assert v.tag == "Split" and v.retraction == (R.one(),)
    assert ident.finite_presentation.relations == ()


def test_free_extension_splits():
    R = QuotientRing.polynomial(["x", "y"], QQ)
    S = QuotientRing.polynomial(["x", "y", "z"], QQ, ["z^2 - x"])
    a = with_presentation(RingMapSpec(R, S, [S.parse("x"), S.parse("y")]), [S.one(), S.parse("z")])
    v = split_test(a)
    assert v.tag == "Split" and v.retraction == (R.one(), R.zero())


def test_blowup_contraction_witness():
    c = BLOWUP["c"]
    R = c.source
    w = contraction_witness(c, [R.parse("x^2"), R.parse("y^2")], R.parse("x*y"))
    assert w.is_in_contraction and not w.is_in_I and w.non_purity_witnessed


def test_member_of_ideal_is_no_witness():
    c = BLOWUP["c"]
    R = c.source
    w = contraction_witness(c, [R.parse("x^2"), R.parse("y^2")], R.parse("x^2 + x*y^2"))
    assert w.is_in_I and not w.non_purity_witnessed


def test_semigroup_contraction_witness():
    s = SEMIGROUP["s"]
    R = s.source
    w = contraction_witness(s, [R.parse("a")], R.parse("b"))
    assert w.non_purity_witnessed


def test_crossing_lines_kill_class_of_x():
    n = CROSSING["n"]
    R = n.source
    M = CROSSING["C"]
    t = tensor_inject_test(n, M)
    assert not t.injective
    # the witness is the class of x (equivalently of y) in R/(x - y)
    (k,), = [t.kernel_witness]
    assert M.contains((k - R.parse("x"),)) and not M.contains((k,))


def test_tensor_with_ring_is_injective():
    for env, name in ((CROSSING, "n"), (QUADRIC, "a"), (SEMIGROUP, "s")):
        a = env[name]
        assert tensor_inject_test(a, ModulePresentation.free(a.source, 1)).injective


def test_blowup_tensor_kills_xy():
    c = BLOWUP["c"]
    R = c.source
    t = tensor_inject_test(c, BLOWUP["Q2"])
    assert not t.injective
    (k,), = [t.kernel_witness]
    assert not BLOWUP["Q2"].contains((k,))
    assert R.contains(k, [R.parse("x*y"), R.parse("x^2"), R.parse("y^2")])


def test_bad_retraction_rejected():
    a = QUADRIC["a"]
    R = a.source
    assert not retraction_is_valid(a, (R.one(), R.one(), R.zero()))
    assert not SplitVerdict("Split", retraction=(R.zero(),) * 3).verify(a)
    assert not SplitVerdict("Inconclusive").verify(a)


# ---------------------------------------------------------------- properties

def cone_elements():
    R = QUADRIC["a"].source
    mons = R.standard_monomials(3)
    return st.lists(st.tuples(st.sampled_from(mons), st.integers(-1, 1)), min_size=1, max_size=3).map(
        lambda ts: R.nf(sum((R.ring.monomial(m, c) for m, c in ts), R.zero())))


@given(st.lists(cone_elements(), min_size=1, max_size=2), cone_elements())
def test_split_maps_have_no_contraction_witness(I, f):
    a = QUADRIC["a"]
    assert split_test(a).tag == "Split"
    assert not contraction_witness(a, I, f).non_purity_witnessed
