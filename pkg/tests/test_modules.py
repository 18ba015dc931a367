"""Finitely presented modules: duals, kernels and minimal graded presentations."""
from hypothesis import given, strategies as st

from _oracles import fedder_cusp_in_frobenius_power, nullspace_mod_p
from puretop.coeffs import GF, QQ
from puretop.frobenius import pushforward
from puretop.groebner import QuotientRing, Submodule
from puretop.modules import (
    ModulePresentation, apply_functional, apply_map, hom_to_ring, kernel_of_map,
    minimal_presentation_graded, tensor_product,
)

Qx = QuotientRing.polynomial(["x"], QQ)
NODE = QuotientRing.polynomial(["x", "y"], QQ, ["x*y"])
CONE = QuotientRing.polynomial(["u", "v", "w"], GF(3), ["u*w - v^2"])


def cone_module():
    u, v, w = CONE.gens()
    z = CONE.zero()
    return ModulePresentation(CONE, 3, ((z, v, -u), (z, -w, v)))


# ---------------------------------------------------------------- examples


def test_dual_of_free():
    assert hom_to_ring(ModulePresentation.free(Qx, 2)) == [(Qx.one(), Qx.zero()), (Qx.zero(), Qx.one())]


def test_torsion_has_no_functionals():
    assert all(all(x.is_zero() for x in v) for v in hom_to_ring(ModulePresentation.cyclic(Qx, [Qx.parse("x")])))


def test_quadric_functionals_contain_projection():
    M = cone_module()
    K = hom_to_ring(M)
    assert (CONE.one(), CONE.zero(), CONE.zero()) in K
    for v in K:
        assert all(apply_functional(v, col, CONE).is_zero() for col in M.relations)


def test_quadric_functionals_complete_in_low_degree():
    """Every functional with entries of degree < 3 lies in the span (linear algebra over F3)."""
    M = cone_module()
    K = hom_to_ring(M)
    mons = CONE.standard_monomials(3)
    basis = [(i, m) for i in range(3) for m in mons]
    eqs = {}
    for j, (i, m) in enumerate(basis):
        mono = CONE.ring.monomial(m)
        for c, col in enumerate(M.relations):
            for e, k in CONE.nf(mono * col[i]).items():
                eqs.setdefault((c, e), [0] * len(basis))[j] = int(k)
    null = nullspace_mod_p(list(eqs.values()), len(basis), 3)
    assert null
    span = Submodule(CONE, 3, K)
    for x in null:
        v = [CONE.zero()] * 3
        for k, (i, m) in zip(x, basis):
            v[i] = v[i] + CONE.ring.monomial(m, k)
        assert span.contains(tuple(v))


def test_kernel_identity_and_zero():
    M = ModulePresentation.free(NODE, 1)
    assert kernel_of_map([(NODE.one(),)], M, M).n_generators == 0
    K = kernel_of_map([(NODE.zero(),)], M, M)
    assert K.n_generators == 1 and K.embedding == ((NODE.one(),),)


def test_kernel_multiplication_by_x_on_node():
    M = ModulePresentation.free(NODE, 1)
    K = kernel_of_map([(NODE.parse("x"),)], M, M)
    assert K.n_generators == 1
    # annihilator oracle: in k[x,y]/(xy), f·x = 0 iff every monomial of f is divisible by y
    (k,), = K.embedding
    assert k == NODE.parse("y")
    assert NODE.is_zero(k * NODE.parse("x"))


def test_minimal_presentation_free_and_cyclic():
    P, free = minimal_presentation_graded(ModulePresentation.free(Qx, 4))
    assert free and P.n_generators == 4
    P, free = minimal_presentation_graded(ModulePresentation.cyclic(Qx, [Qx.parse("x")]))
    assert not free and P.n_generators == 1 and len(P.relations) == 1


def test_cusp_pushforward_not_free():
    assert fedder_cusp_in_frobenius_power()
    cusp = QuotientRing.polynomial(["x", "y"], GF(2), ["y^2 - x^3"])
    _, free = minimal_presentation_graded(pushforward(cusp).presentation)
    assert not free


def test_tensor_product_ranks():
    A = ModulePresentation.free(Qx, 2)
    B = ModulePresentation.cyclic(Qx, [Qx.parse("x")])
    T = tensor_product(A, B)
    assert T.n_generators == 2
    assert T.contains((Qx.parse("x"), Qx.zero()))
    assert not T.contains((Qx.one(), Qx.zero()))


# ---------------------------------------------------------------- properties

QXY = QuotientRing.polynomial(["x", "y"], QQ, weights=(1, 1))
coef = st.integers(-2, 2)


def homogeneous(d):
    return st.lists(coef, min_size=d + 1, max_size=d + 1).map(
        lambda cs: sum((QXY.ring.monomial((i, d - i), c) for i, c in enumerate(cs)), QXY.zero()))


@st.composite
def graded_modules(draw):
    """coker over Q[x,y] with homogeneous columns and sometimes a unit entry."""
    n = draw(st.integers(1, 3))
    degs = [draw(st.integers(0, 2)) for _ in range(n)]
    cols = []
    for _ in range(draw(st.integers(0, 3))):
        top = max(degs) + draw(st.integers(0, 1))
        col = tuple(draw(homogeneous(top - d)) for d in degs)
        cols.append(col)
    return ModulePresentation(QXY, n, tuple(cols), tuple(degs))


@given(graded_modules())
def test_minimal_presentation_preserves_hilbert_samples(M):
    P, free = minimal_presentation_graded(M)
    assert P.hilbert_sample() == M.hilbert_sample()
    assert free == (not P.relations)
    assert P.n_generators <= M.n_generators


@given(graded_modules(), st.lists(st.tuples(coef, coef, coef), min_size=1, max_size=3))
def test_functionals_kill_relations(M, combos):
    for v in hom_to_ring(M):
        for cs in combos:
            vec = [QXY.zero()] * M.n_generators
            for c, col in zip(cs, M.relations):
                vec = [a + b * c for a, b in zip(vec, col)]
            assert apply_functional(v, vec, QXY).is_zero()


@given(graded_modules(), st.data())
def test_kernel_maps_to_zero(M, data):
    M = ModulePresentation(QXY, M.n_generators, M.relations)
    N = ModulePresentation.free(QXY, 1)
    f = [(data.draw(homogeneous(1)),) for _ in range(M.n_generators)]
    if any(not N.contains(apply_map(f, col, QXY, 1)) for col in M.relations):
        return
    K = kernel_of_map(f, M, N)
    for k in K.embedding or ():
        assert N.contains(apply_map(f, k, QXY, 1))
