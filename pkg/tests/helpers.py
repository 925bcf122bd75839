"""Shared fixtures-by-import: fields, random instances and hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

from frobdeg.field import ExtensionField, PrimeField, Rationals, random_raw
from frobdeg.poly import Poly, gcd, gcd_all, parse_poly, parse_poly_list

Q = Rationals()
F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)
F7 = PrimeField(7)
F11 = PrimeField(11)
F13 = PrimeField(13)
F25 = ExtensionField(5, 2)
F49 = ExtensionField(7, 2)

FIELDS = [Q, F2, F5, F7, F25, ExtensionField(2, 3)]


def P(text, field=Q):
    return parse_poly(text, field)


def Ps(text, field=Q):
    return parse_poly_list(text, field)


def random_monic(field, rng, deg, bound=3):
    lower = [random_raw(field, rng, bound) for _ in range(deg)]
    return Poly._from_raw(field, lower + [field.one])


def random_coprime(field, rng, degrees, bound=3, pairwise=False):
    """Monic generators of the given degrees with gcd 1 (pairwise if asked)."""
    while True:
        A = [random_monic(field, rng, a, bound) for a in degrees]
        if pairwise:
            ok = all(gcd(A[i], A[j]).degree == 0 for i in range(len(A)) for j in range(i))
        else:
            ok = gcd_all(A).degree == 0
        if ok:
            return A


# -- hypothesis strategies -----------------------------------------------------------

def elements(field):
    if field.is_finite:
        return st.integers(0, field.cardinality - 1).map(field.from_index)
    return st.fractions(min_value=-50, max_value=50, max_denominator=20).map(Fraction)


def nonzero_elements(field):
    return elements(field).filter(lambda a: not field.is_zero(a))


def polys(field, max_degree=6):
    return st.lists(elements(field), max_size=max_degree + 1).map(lambda cs: Poly._from_raw(field, cs))


def monics(field, min_degree=0, max_degree=6):
    @st.composite
    def build(draw):
        deg = draw(st.integers(min_degree, max_degree))
        lower = draw(st.lists(elements(field), min_size=deg, max_size=deg))
        return Poly._from_raw(field, lower + [field.one])

    return build()


def small_monics(field, min_degree, max_degree):
    """Monic polynomials with small integer coefficients (keeps rationals tame)."""
    if field.is_finite:
        return monics(field, min_degree, max_degree)

    @st.composite
    def build(draw):
        deg = draw(st.integers(min_degree, max_degree))
        lower = draw(st.lists(st.integers(-3, 3), min_size=deg, max_size=deg))
        return Poly(field, lower + [1])

    return build()


def fields():
    return st.sampled_from(FIELDS)
