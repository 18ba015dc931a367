#!/usr/bin/env python3
"""Descent of the trivial module along the quadric cone cover and along Z/2 → Z/2 × Z/2.

Prints the identity report of each canonical datum, the result of a
corrupted datum, and the Hilbert samples used to recognise the descended
module over the cone.
"""
from __future__ import annotations

from puretop.catalog import catalog_entries
from puretop.build import Environment
from puretop.descent import canonical_datum, corrupt, descend, graded_source
from puretop.finite import FiniteModule, FiniteRing
from puretop.modules import ModulePresentation
from puretop.suites import diagonal


def show(title, rep):
    marks = " ".join(f"({k}) {'ok' if v else 'FAIL'}" for k, v in rep.identities.items())
    print(f"{title}: {marks}; cocycle {rep.cocycle}, unit {rep.unit_law}, iso {rep.isomorphism}")


def main():
    Z2 = FiniteRing.zmod(2)
    alpha = diagonal(Z2)
    M0 = FiniteModule.quotient_of_free(Z2, 2, [])
    d = canonical_datum(alpha, M0)
    show("Z/2 -> Z/2 x Z/2, M = (Z/2)^2", d.verify())
    show("  with one theta entry perturbed", corrupt(d).verify())
    res = descend(d)
    print(f"  descended module has {res.M.size} elements, rho iso: {res.rho_is_iso}")

    entry = next(e for e in catalog_entries() if e.id == "quadric-cone")
    env = Environment(entry.program)
    a = env["a"]
    M = ModulePresentation.free(graded_source(a), 1, (0,))
    datum = canonical_datum(a, M)
    show("quadric cone cover, M = R", datum.verify())
    res = descend(datum)
    for k in ("hilbert_M0", "hilbert_M", "hilbert_N", "hilbert_SM"):
        print(f"  {k:<11} {res.detail[k]}")
    print(f"  rho iso: {res.rho_is_iso} ({res.note})")


if __name__ == "__main__":
    main()
