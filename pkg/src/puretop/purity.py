"""Purity of ring maps: splitting of finite extensions, contraction and
tensor-injectivity witnesses.

For a module-finite map α: R → S, S ≅ coker(D) as an R-module.  α is pure
iff it splits, iff 1 lies in the ideal {σ(1) : σ ∈ Hom_R(S, R)}; that ideal
is computed from the syzygies of Dᵀ and decided by a Gröbner membership test.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import (
    InvalidPresentation,
    MissingPresentation,
    RingMismatch,
    UnsupportedCoefficients,
)
from .groebner import (
    Ideal,
    ProductRing,
    QuotientRing,
    contract,
    division_normal_form,
    ideal_lift,
    is_groebner_basis,
)
from .modules import (
    ModulePresentation,
    apply_functional,
    combine,
    hom_to_ring,
    kernel_of_map,
    tensor_product,
)
from .poly import Poly, PolyRing, block_order


@dataclass(frozen=True, eq=False)
class FinitePresentation:
    """S as coker(D) over the source: witnesses w_a, relation columns, coordinates of 1."""
    relations: tuple
    one_coords: tuple
    gen_witnesses: tuple

    @property
    def n(self) -> int:
        return len(self.gen_witnesses)


class RingMapSpec:
    """A ring map R → S given by the images of R's variables.

    ``target`` is a QuotientRing or a ProductRing (elements are then tuples).
    Construction checks that relations of R map to zero and, when a finite
    presentation is supplied, that it is consistent with the map.
    """

    def __init__(self, source: QuotientRing, target, images: Sequence,
                 finite_presentation: Optional[FinitePresentation] = None,
                 name: str = None):
        if len(images) != source.nvars:
            raise InvalidPresentation(f"need {source.nvars} images, got {len(images)}")
        self.source = source
        self.target = target
        self.name = name
        if self.is_product and any(f.coeff != source.coeff for f in target.factors) or \
                (not self.is_product and target.coeff != source.coeff):
            raise RingMismatch("source and target have different coefficient rings")
        self.images = tuple(self.target_elem(x) for x in images)
        for g in source.ideal.generators:
            if not self.target_is_zero(self.apply(g)):
                raise InvalidPresentation(f"relation {g} of the source does not map to 0")
        self.finite_presentation = None
        if finite_presentation is not None:
            self.finite_presentation = self._check_presentation(finite_presentation)

    # -- target arithmetic (single quotient ring or product)
    @property
    def is_product(self) -> bool:
        return isinstance(self.target, ProductRing)

    def target_elem(self, x):
        if self.is_product:
            if not isinstance(x, tuple) or len(x) != len(self.target.factors):
                raise InvalidPresentation(f"product element needs {len(self.target.factors)} entries")
            return tuple(f.nf(f.ring(c)) for f, c in zip(self.target.factors, x))
        return self.target.nf(self.target.ring(x))

    def target_is_zero(self, x) -> bool:
        return self.target.is_zero(x)

    def target_mul(self, a, b):
        if self.is_product:
            return self.target.mul(a, b)
        return self.target.nf(a * b)

    def target_add(self, a, b):
        if self.is_product:
            return self.target.nf(self.target.add(a, b))
        return self.target.nf(a + b)

    def target_one(self):
        return self.target.one() if self.is_product else self.target.ring.one()

    def target_zero(self):
        return self.target.zero() if self.is_product else self.target.ring.zero()

    def apply(self, f: Poly):
        """α(f)."""
        f = self.source.ring(f)
        if self.is_product:
            return tuple(
                fac.nf(f.subs([img[k] for img in self.images], fac.ring))
                for k, fac in enumerate(self.target.factors)
            )
        return self.target.nf(f.subs(list(self.images), self.target.ring))

    def evaluate(self, coords, witnesses=None):
        """Σ α(c_a)·w_a."""
        ws = witnesses if witnesses is not None else self.finite_presentation.gen_witnesses
        acc = self.target_zero()
        for c, w in zip(coords, ws):
            acc = self.target_add(acc, self.target_mul(self.apply(c), w))
        return acc

    def _check_presentation(self, fp: FinitePresentation) -> FinitePresentation:
        R = self.source
        ws = tuple(self.target_elem(w) for w in fp.gen_witnesses)
        n = len(ws)
        cols = []
        for col in fp.relations:
            if len(col) != n:
                raise InvalidPresentation(f"relation column of length {len(col)} for {n} generators")
            col = tuple(R.nf(R.ring(x)) for x in col)
            if not self.target_is_zero(self.evaluate(col, ws)):
                raise InvalidPresentation(
                    "relation column (" + ", ".join(map(str, col)) + ") is not killed by the witnesses")
            cols.append(col)
        one = tuple(R.nf(R.ring(x)) for x in fp.one_coords)
        if len(one) != n:
            raise InvalidPresentation("one_coords must have one entry per generator")
        diff = self.target_add(self.evaluate(one, ws), _neg(self, self.target_one()))
        if not self.target_is_zero(diff):
            raise InvalidPresentation("one_coords do not evaluate to 1 in the target")
        return FinitePresentation(tuple(cols), one, ws)

    def module(self) -> ModulePresentation:
        """The target as a presented module over the source."""
        fp = self.finite_presentation
        if fp is None:
            raise MissingPresentation(f"map {self.name or ''} has no finite presentation")
        return ModulePresentation(self.source, fp.n, fp.relations)

    def __str__(self):
        imgs = ", ".join(f"{x} -> {_fmt_elem(y)}" for x, y in zip(self.source.names, self.images))
        return f"{self.source} -> {self.target} {{{imgs}}}"


def _neg(alpha: RingMapSpec, x):
    if alpha.is_product:
        return tuple(-c for c in x)
    return -x


def _fmt_elem(x) -> str:
    if isinstance(x, tuple):
        return "(" + ", ".join(str(c) for c in x) + ")"
    return str(x)


# ---------------------------------------------------------------- presentations


def _as_single(alpha: RingMapSpec):
    """Encode the target as one quotient ring; returns (ring, encoder)."""
    if not alpha.is_product:
        return alpha.target, lambda x: alpha.target.ring(x)
    factors = alpha.target.factors
    names, offsets = [], []
    for k, fac in enumerate(factors):
        offsets.append(len(names))
        names += [f"_p{k}_{i}" for i in range(fac.nvars)]
    epos = len(names)
    names += [f"_e{k}" for k in range(len(factors))]
    ring = PolyRing(tuple(names), alpha.source.coeff)
    e = [ring.gen(epos + k) for k in range(len(factors))]
    emb = [list(range(off, off + fac.nvars)) for off, fac in zip(offsets, factors)]
    rels = [ek * ek - ek for ek in e]
    rels += [e[i] * e[j] for i in range(len(e)) for j in range(i + 1, len(e))]
    rels.append(sum(e[1:], e[0]) - 1)
    for k, fac in enumerate(factors):
        rels += [e[k] * g.embed(ring, emb[k]) for g in fac.ideal.generators]
        rels += [(1 - e[k]) * ring.gen(p) for p in emb[k]]
    single = QuotientRing(ring, rels)

    def enc(x):
        acc = ring.zero()
        for k, fac in enumerate(factors):
            acc = acc + e[k] * fac.ring(x[k]).embed(ring, emb[k])
        return acc
    return single, enc


class PresentationExtractor:
    """Relations among given target elements w_a over the source, and coordinates.

    Works in k[y, Z, x] with y (target variables) eliminated first and the
    Z (one per witness) above x: the ideal generated by the target relations,
    x − α(x) and Z_a − w_a meets the Z-linear part exactly in the relation
    module, and normal forms of target elements come out Z-linear when the
    witnesses generate S over R.
    """

    def __init__(self, alpha: RingMapSpec, witnesses: Sequence, one_coords=None):
        self.alpha = alpha
        R = alpha.source
        self.witnesses = tuple(alpha.target_elem(w) for w in witnesses)
        T, enc = _as_single(alpha)
        self._enc = enc
        ny, nz, nx = T.nvars, len(self.witnesses), R.nvars
        self.ny, self.nz, self.nx = ny, nz, nx
        names = (tuple(f"_y{i}" for i in range(ny)) + tuple(f"_z{i}" for i in range(nz))
                 + tuple(f"_x{i}" for i in range(nx)))
        big = PolyRing(names, R.coeff, block_order(ny, ny + nz))
        self.big = big
        self._ypos = list(range(ny))
        xpos = list(range(ny + nz, ny + nz + nx))
        gens = [g.embed(big, self._ypos) for g in T.ideal.generators]
        gens += [g.embed(big, xpos) for g in R.ideal.generators]
        for i, img in enumerate(alpha.images):
            gens.append(big.gen(ny + nz + i) - enc(img).embed(big, self._ypos))
        for j, w in enumerate(self.witnesses):
            gens.append(big.gen(ny + j) - enc(w).embed(big, self._ypos))
        self.ideal = Ideal(big, gens)
        self.one_coords = self._find_one(one_coords)

    def _find_one(self, one_coords):
        R = self.alpha.source
        if one_coords is not None:
            return tuple(R.nf(R.ring(c)) for c in one_coords)
        one = self.alpha.target_one()
        for a, w in enumerate(self.witnesses):
            if self.alpha.target_is_zero(self.alpha.target_add(w, _neg(self.alpha, one))):
                return tuple(R.one() if b == a else R.zero() for b in range(self.nz))
        raise InvalidPresentation("no witness equals 1; give the coordinates of 1 explicitly")

    def _linear_parts(self, g: Poly):
        """(c_0, [c_a]) if g is y-free and of degree ≤ 1 in Z, else None."""
        R = self.alpha.source
        ny, nz = self.ny, self.nz
        parts = [dict() for _ in range(nz + 1)]
        for m, c in g.items():
            if any(m[:ny]):
                return None
            z = m[ny:ny + nz]
            s = sum(z)
            if s > 1:
                return None
            slot = 0 if s == 0 else 1 + z.index(1)
            parts[slot][m[ny + nz:]] = c
        polys = [R.nf(Poly(R.ring, d)) for d in parts]
        return polys[0], polys[1:]

    def _to_vector(self, c0, cs) -> tuple:
        R = self.alpha.source
        return tuple(R.nf(c + c0 * o) for c, o in zip(cs, self.one_coords))

    def relations(self) -> tuple:
        out, seen = [], set()
        for g in self.ideal.basis():
            parts = self._linear_parts(g)
            if parts is None:
                continue
            col = self._to_vector(*parts)
            if any(col) and col not in seen:
                seen.add(col)
                out.append(col)
        return tuple(out)

    def coordinates(self, s) -> tuple:
        """Coordinates of a target element on the witnesses."""
        s = self.alpha.target_elem(s)
        nf = self.ideal.normal_form(self._enc(s).embed(self.big, self._ypos))
        parts = self._linear_parts(nf)
        if parts is None:
            raise InvalidPresentation(f"{_fmt_elem(s)} is not an R-combination of the witnesses")
        return self._to_vector(*parts)

    def generates(self) -> bool:
        """Do the witnesses generate the target as a module over the source?"""
        checks = [self.big.gen(k) for k in range(self.ny)]
        z = [self.big.gen(self.ny + a) for a in range(self.nz)]
        checks += [z[a] * z[b] for a in range(self.nz) for b in range(a, self.nz)]
        return all(self._linear_parts(self.ideal.normal_form(c)) is not None for c in checks)

    def presentation(self) -> FinitePresentation:
        if not self.generates():
            raise InvalidPresentation("witnesses do not generate the target over the source")
        return FinitePresentation(self.relations(), self.one_coords, self.witnesses)


def extract_presentation(alpha: RingMapSpec, witnesses, one_coords=None) -> FinitePresentation:
    return PresentationExtractor(alpha, witnesses, one_coords).presentation()


def with_presentation(alpha: RingMapSpec, witnesses, relations=None, one_coords=None) -> RingMapSpec:
    """Attach a finite presentation; ``relations=None`` derives them automatically."""
    if relations is None:
        fp = extract_presentation(alpha, witnesses, one_coords)
    else:
        if one_coords is None:
            one_coords = PresentationExtractor(alpha, witnesses).one_coords
        fp = FinitePresentation(tuple(relations), tuple(one_coords), tuple(witnesses))
    return RingMapSpec(alpha.source, alpha.target, alpha.images, fp, alpha.name)


def presentation_is_complete(alpha: RingMapSpec) -> bool:
    """Do the given relation columns generate all relations among the witnesses?"""
    fp = alpha.finite_presentation
    ex = PresentationExtractor(alpha, fp.gen_witnesses, fp.one_coords)
    if not ex.generates():
        return False
    M = alpha.module()
    return all(M.contains(col) for col in ex.relations())


# ---------------------------------------------------------------- splitting


@dataclass(frozen=True, eq=False)
class SplitVerdict:
    tag: str  # "Split" | "NoSplit" | "Inconclusive"
    retraction: Optional[tuple] = None
    certificate: Optional[tuple] = None
    note: str = ""

    def verify(self, alpha) -> bool:
        """Re-check the verdict's evidence (normal forms, or tables for finite maps)."""
        if not isinstance(alpha, RingMapSpec):
            return alpha.verify_verdict(self)
        if self.tag == "Split":
            return retraction_is_valid(alpha, self.retraction)
        if self.tag == "NoSplit" and self.certificate is not None:
            cert = list(self.certificate)
            R = alpha.source
            if not is_groebner_basis(cert):
                return False
            if any(division_normal_form(g, cert) for g in R.ideal.generators):
                return False
            return not division_normal_form(R.ring.one(), cert).is_zero()
        return False

    def certificate_text(self) -> str:
        if self.tag == "Split":
            return "retraction (" + ", ".join(str(x) for x in self.retraction) + ")"
        if self.tag == "NoSplit":
            if self.certificate and isinstance(self.certificate[0], Poly):
                return "J_e basis (" + ", ".join(str(x) for x in self.certificate) + ")"
            return f"J_e = {self.note}" if self.note else "J_e proper"
        return self.note


def retraction_is_valid(alpha: RingMapSpec, v) -> bool:
    fp = alpha.finite_presentation
    R = alpha.source
    if v is None or len(v) != fp.n:
        return False
    if any(apply_functional(v, col, R) for col in fp.relations):
        return False
    return R.nf(apply_functional(v, fp.one_coords, R) - 1).is_zero()


def split_test(alpha) -> SplitVerdict:
    """Decide whether a module-finite map splits (equivalently, is pure)."""
    if not isinstance(alpha, RingMapSpec):
        from .finite import brute_split
        return brute_split(alpha)
    fp = alpha.finite_presentation
    if fp is None:
        raise MissingPresentation("split_test needs a finite module presentation of the target")
    R = alpha.source
    if not R.coeff.is_field:
        raise UnsupportedCoefficients(
            f"coefficients {R.coeff.name} are not a field; use the finite-ring oracle")
    M = alpha.module()
    K = hom_to_ring(M)
    values = [apply_functional(v, fp.one_coords, R) for v in K]
    coeffs = ideal_lift(R.ring.one(), values, R) if values else None
    if coeffs is not None:
        v = combine(K, coeffs, R, fp.n)
        return SplitVerdict("Split", retraction=v)
    J = R.ideal_of(values)
    return SplitVerdict("NoSplit", certificate=tuple(J.basis()),
                        note=f"{len(K)} functionals, 1 not in J_e")


# ---------------------------------------------------------------- witnesses


@dataclass(frozen=True)
class ContractionVerdict:
    is_in_contraction: bool
    is_in_I: bool
    non_purity_witnessed: bool
    contraction: tuple = field(default=(), compare=False)


def _extended(alpha: RingMapSpec, gens):
    imgs = [alpha.apply(g) for g in gens]
    if alpha.is_product:
        return [[x[k] for x in imgs] for k in range(len(alpha.target.factors))]
    return imgs


def contraction_ideal(alpha: RingMapSpec, I_gens) -> Ideal:
    """α⁻¹(I·S)."""
    gens = I_gens.generators if isinstance(I_gens, Ideal) else [alpha.source.ring(g) for g in I_gens]
    return contract(alpha, _extended(alpha, gens))


def contraction_witness(alpha: RingMapSpec, I_gens, f) -> ContractionVerdict:
    R = alpha.source
    gens = I_gens.generators if isinstance(I_gens, Ideal) else [R.ring(g) for g in I_gens]
    f = R.ring(f)
    C = contraction_ideal(alpha, gens)
    in_c = C.contains(f)
    in_i = R.contains(f, gens)
    return ContractionVerdict(in_c, in_i, in_c and not in_i, tuple(C.basis()))


@dataclass(frozen=True, eq=False)
class TensorVerdict:
    injective: bool
    kernel_witness: Optional[tuple] = None
    kernel: Optional[ModulePresentation] = None
    method: str = "presentation"


def tensor_inject_test(alpha: RingMapSpec, M: ModulePresentation) -> TensorVerdict:
    """Is M → S ⊗_R M injective?  A nonzero kernel element is returned if not.

    Maps without a finite presentation are handled for cyclic M = R/I, where
    the kernel is α⁻¹(I·S)/I.
    """
    R = alpha.source
    if alpha.finite_presentation is None:
        if M.n_generators != 1:
            raise MissingPresentation("tensor test without a presentation needs a cyclic module")
        I = [col[0] for col in M.relations]
        C = contraction_ideal(alpha, I)
        for g in C.basis():
            if not M.contains((g,)):
                return TensorVerdict(False, (g,), None, "contraction")
        return TensorVerdict(True, None, None, "contraction")
    fp = alpha.finite_presentation
    S_mod = alpha.module()
    T = tensor_product(S_mod, M)
    nM = M.n_generators
    zero = R.ring.zero()
    f = []
    for i in range(nM):
        col = [zero] * (fp.n * nM)
        for a in range(fp.n):
            col[a * nM + i] = fp.one_coords[a]
        f.append(tuple(col))
    K = kernel_of_map(f, M, T)
    if K.n_generators == 0:
        return TensorVerdict(True, None, K)
    return TensorVerdict(False, K.embedding[0], K)


def semi_decide_purity(alpha: RingMapSpec, max_degree: int = 2) -> SplitVerdict:
    """Split test when a presentation exists; otherwise a bounded witness search.

    Without a presentation purity is never claimed: either a contraction
    witness of non-purity is found or the verdict is Inconclusive.
    """
    if alpha.finite_presentation is not None:
        return split_test(alpha)
    R = alpha.source
    xs = R.ring.gens()
    ideals = [[x ** 2 for x in xs]] + [[x] for x in xs]
    cands = [R.ring.monomial(e) for e in R.standard_monomials(max_degree + 1) if any(e)]
    for I in ideals:
        if not I:
            continue
        C = contraction_ideal(alpha, I)
        for f in cands:
            if C.contains(f) and not R.contains(f, I):
                return SplitVerdict("NoSplit", note=f"{f} in ({', '.join(map(str, I))})S but not in the ideal")
    return SplitVerdict("Inconclusive", note=f"no contraction witness up to degree {max_degree}")
