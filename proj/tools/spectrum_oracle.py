#!/usr/bin/env python3
"""Compare `bpl lattice ... --query charpoly` with the product of roots of unity.

The eigenvalues of the total monodromy of z_0^a_0 + ... + z_m^a_m are
exp(2 pi i sum j_k / a_k) for 1 <= j_k <= a_k - 1. Grouping them by exact order d
gives prod_d Phi_d^(n_d / phi(d)), computed here with integer polynomials.
"""

import argparse
import json
import subprocess
import sys
from fractions import Fraction
from itertools import product
from math import gcd


def poly_mul(p, q):
    r = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            r[i + j] += a * b
    return r


def poly_divexact(num, den):
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(num) - 1, len(den) - 2, -1):
        c = num[i]
        k = i - len(den) + 1
        q[k] = c
        for j, d in enumerate(den):
            num[k + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact division")
    return q


_cyc = {}


def cyclotomic(d):
    if d not in _cyc:
        p = [-1] + [0] * (d - 1) + [1]
        for e in range(1, d):
            if d % e == 0:
                p = poly_divexact(p, cyclotomic(e))
        _cyc[d] = p
    return _cyc[d]


def totient(d):
    return sum(1 for x in range(1, d + 1) if gcd(x, d) == 1)


def spectrum_poly(a):
    counts = {}
    for js in product(*[range(1, x) for x in a]):
        frac = sum((Fraction(j, x) for j, x in zip(js, a)), Fraction(0)) % 1
        counts[frac.denominator] = counts.get(frac.denominator, 0) + 1
    poly = [1]
    for d in sorted(counts):
        n, r = divmod(counts[d], totient(d))
        if r:
            raise ArithmeticError(f"order {d} multiplicity {counts[d]} not a multiple of phi")
        for _ in range(n):
            poly = poly_mul(poly, cyclotomic(d))
    return poly


def tuples(max_rank, max_len):
    out = []

    def rec(cur, start, rank):
        if cur:
            out.append(list(cur))
        if len(cur) == max_len:
            return
        a = start
        while rank * (a - 1) <= max_rank:
            rec(cur + [a], a, rank * (a - 1))
            a += 1

    rec([], 2, 1)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("bpl", help="path to the bpl binary")
    ap.add_argument("--max-rank", type=int, default=64)
    ap.add_argument("--max-len", type=int, default=3)
    args = ap.parse_args()

    failures = 0
    cases = tuples(args.max_rank, args.max_len)
    for a in cases:
        res = subprocess.run([args.bpl, "lattice", *map(str, a), "--query", "charpoly"],
                             capture_output=True, text=True)
        if res.returncode != 0:
            print(f"FAIL {a}: exit {res.returncode} {res.stderr.strip()}")
            failures += 1
            continue
        got = [int(c) for c in json.loads(res.stdout)["charpoly_coefficients"]]
        want = spectrum_poly(a)
        if got != want:
            print(f"FAIL {a}: bpl {got} oracle {want}")
            failures += 1
    print(f"{len(cases) - failures}/{len(cases)} exponent tuples match")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
