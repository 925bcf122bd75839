"""Distribution of the constant C in the type count 2(f - a - b) + C for random pairs over Q."""

import argparse
from collections import Counter

from frobdeg.field import Rationals, make_rng, random_raw
from frobdeg.poly import Poly, gcd
from frobdeg.solver import type_denumerant


def monic(F, rng, deg, bound):
    return Poly._from_raw(F, [random_raw(F, rng, bound) for _ in range(deg)] + [F.one])


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--bound", type=int, default=3, help="coefficient range [-bound, bound]")
    args = ap.parse_args()

    Q = Rationals()
    rng = make_rng(args.seed)
    hist = Counter()
    for _ in range(args.count):
        while True:
            A = monic(Q, rng, int(rng.integers(1, 4)), args.bound)
            B = monic(Q, rng, int(rng.integers(1, 4)), args.bound)
            if gcd(A, B).degree == 0:
                break
        f = A.degree + B.degree + int(rng.integers(1, 5))
        den = type_denumerant(monic(Q, rng, f, args.bound), [A, B])
        hist[(den.dim2.C, den.dim2.chi_AB, den.dim2.chi_BA)] += 1
    print("C  chi_AB chi_BA  count")
    for (C, x, y), k in sorted(hist.items()):
        print(f"{C}  {x:6d} {y:6d}  {k:5d}")


if __name__ == "__main__":
    main()
