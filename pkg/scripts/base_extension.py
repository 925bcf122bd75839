"""Degree-2 census of (t+1, t+2, t+3) over F_5 and over F_25.

Over F_5 every monic quadratic is reachable, so g = 1; after extending the
field some quadratics drop out and g = 2.
"""

from frobdeg.field import ExtensionField, PrimeField
from frobdeg.oracle import brute_g, enumerate_reachable
from frobdeg.poly import embed_poly, format_poly, parse_poly_list


def main():
    F5 = PrimeField(5)
    F25 = ExtensionField(5, 2)
    base = parse_poly_list("t+1, t+2, t+3", F5)
    ext = [embed_poly(a, F25) for a in base]
    for name, A in (("F5", base), ("F25", ext)):
        for d in (1, 2):
            c = enumerate_reachable(d, A)
            print(f"{name:4s} d={d}: {len(c.reachable)}/{c.total} monic targets reachable")
        r = brute_g(A, 2)
        print(f"{name:4s} g = {r.g}, missing example {format_poly(r.counterexample)}")


if __name__ == "__main__":
    main()
