#!/usr/bin/env python3
"""F-splitting, Fedder's criterion and Kunz freeness for a table of small hypersurfaces."""
from __future__ import annotations

import argparse
import time

from puretop.coeffs import GF
from puretop.errors import JacobianUnsupported
from puretop.frobenius import f_split_test, fedder_f_pure, kunz_check, pushforward
from puretop.groebner import QuotientRing

RINGS = [
    (2, "x", ""), (2, "xy", ""), (3, "xy", ""), (2, "xyz", ""),
    (2, "xy", "y^2 - x^3"), (3, "xy", "y^2 - x^3"), (5, "xy", "y^2 - x^3"),
    (2, "xy", "x*y"), (3, "uvw", "u*w - v^2"), (3, "uvw", "w^2 - v^2 - u^2"),
    (2, "xyz", "x*y - z^2"), (3, "xyz", "x^3 + y^3 + z^3"), (2, "xyz", "x^3 + y^3 + z^3"),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-p", type=int, default=5)
    args = ap.parse_args()
    print(f"{'p':>2} {'ring':<28} {'rank':>4} {'F-split':>8} {'Fedder':>7} {'free':>5} {'regular':>8} {'time':>6}")
    for p, names, rel in RINGS:
        if p > args.max_p:
            continue
        R = QuotientRing.polynomial(list(names), GF(p), [rel] if rel else [])
        t0 = time.perf_counter()
        rank = len(pushforward(R).basis)
        split = f_split_test(R).tag
        try:
            fedder = "pure" if fedder_f_pure(R) else "no"
        except JacobianUnsupported:
            fedder = "-"
        k = kunz_check(R)
        reg = {True: "yes", False: "no", None: "-"}[k.regular_expected]
        label = f"F{p}[{','.join(names)}]" + (f"/({rel})" if rel else "")
        print(f"{p:>2} {label:<28} {rank:>4} {split:>8} {fedder:>7} {str(k.is_free):>5} {reg:>8} "
              f"{time.perf_counter() - t0:>5.2f}s")


if __name__ == "__main__":
    main()
