"""Compare the rank criterion with exhaustive enumeration on random finite-field inputs.

Only instances where every probed degree has fewer types than field elements are
compared (outside that range the rank criterion does not apply).
"""

import argparse
import time

from frobdeg.errors import CapacityExceeded
from frobdeg.field import PrimeField, make_rng, random_raw
from frobdeg.oracle import brute_g
from frobdeg.poly import Poly, gcd_all
from frobdeg.solver import RANK_CRITERION, frobenius_degree
from frobdeg.typespace import count_types


def random_instance(rng, primes, max_deg):
    q = int(rng.choice(primes))
    F = PrimeField(q)
    n = int(rng.integers(2, 4))
    while True:
        A = []
        for _ in range(n):
            deg = int(rng.integers(1, max_deg + 1))
            A.append(Poly._from_raw(F, [random_raw(F, rng) for _ in range(deg)] + [1]))
        if gcd_all(A).degree == 0:
            return A


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-degree", type=int, default=3)
    ap.add_argument("--primes", type=int, nargs="+", default=[7, 11, 13])
    args = ap.parse_args()

    rng = make_rng(args.seed)
    agree = skipped = 0
    start = time.perf_counter()
    while agree < args.count:
        A = random_instance(rng, args.primes, args.max_degree)
        q = A[0].field.cardinality
        try:
            r = frobenius_degree(A)
        except CapacityExceeded:  # fell back to an oracle that would not fit
            skipped += 1
            continue
        degrees = [a.degree for a in A]
        if r.method != RANK_CRITERION or any(count_types(d, degrees) >= q for d in r.probed_degrees):
            skipped += 1
            continue
        oracle = brute_g(A, r.upper_bound)
        if oracle.g != r.g:
            print("DISAGREE", [str(a) for a in A], r.g, oracle.g)
            return 1
        agree += 1
    print(f"{agree} instances agree ({skipped} skipped as out of range) in {time.perf_counter() - start:.1f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
