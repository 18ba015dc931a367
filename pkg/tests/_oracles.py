"""Small independent oracles shared by the tests."""
import sympy


def nullspace_mod_p(rows, ncols, p):
    """Basis of {x : A x = 0} over F_p by plain Gaussian elimination."""
    A = [[a % p for a in r] for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(A)) if A[i][c]), None)
        if pr is None:
            continue
        A[r], A[pr] = A[pr], A[r]
        inv = pow(A[r][c], -1, p)
        A[r] = [a * inv % p for a in A[r]]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [(a - f * b) % p for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        x = [0] * ncols
        x[fc] = 1
        for i, pc in enumerate(pivots):
            x[pc] = (-A[i][fc]) % p
        out.append(x)
    return out


def rank_mod_p(rows, ncols, p):
    return ncols - len(nullspace_mod_p(rows, ncols, p))


def fedder_cusp_in_frobenius_power():
    """y^2 - x^3 ∈ (x^2, y^2): every term is divisible by x^2 or y^2."""
    return all(e[0] >= 2 or e[1] >= 2 for e in [(0, 2), (3, 0)])


def env_of(text: str):
    from puretop.build import Environment
    from puretop.dsl import parse
    return Environment(parse(text))


def catalog_text(entry_id: str) -> str:
    from puretop.catalog import catalog_entries
    return next(e.source for e in catalog_entries() if e.id == entry_id)


def sympy_fedder(f: str, names: str, p: int) -> bool:
    """F-pure at the origin iff f^(p-1) has a monomial with every exponent < p."""
    syms = sympy.symbols(" ".join(names))
    P = sympy.Poly(sympy.sympify(f.replace("^", "**")) ** (p - 1), *syms, modulus=p)
    return any(all(e < p for e in m) for m, c in P.terms() if c % p)


def sympy_jacobian_rank_at_origin(f: str, names: str, p: int) -> int:
    syms = sympy.symbols(" ".join(names))
    e = sympy.sympify(f.replace("^", "**"))
    row = [sympy.diff(e, s).subs({t: 0 for t in syms}) % p for s in syms]
    return int(any(row))
