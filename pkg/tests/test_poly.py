from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from frobdeg.errors import DegreeOverflow, DivisionByZero, FieldMismatch, InvalidInput, ParseError, UndefinedGcd
from frobdeg.poly import (
    NEG_INF,
    Poly,
    bezout,
    embed_poly,
    format_poly,
    from_vector,
    gcd,
    parse_poly,
    parse_poly_list,
    to_vector,
)

from helpers import F5, F25, FIELDS, Q, P, Ps, polys
from properties import check_bezout_identity, check_divmod_identity, check_vector_round_trip


def test_degree_and_zero():
    assert Poly.zero(Q).degree == NEG_INF
    assert P("3").degree == 0
    assert P("t^4 - t").degree == 4
    assert P("0").is_zero()


def test_trailing_zeros_trimmed():
    assert Poly(Q, [1, 2, 0, 0]).coeffs == (1, 2)


def test_divmod_examples():
    assert divmod(P("t^2 - 1"), P("t + 1")) == (P("t - 1"), Poly.zero(Q))
    assert divmod(P("t^3"), P("t + 1")) == (P("t^2 - t + 1"), P("-1"))
    f = P("t^3 + 2*t")
    assert f + Poly.zero(Q) == f


def test_divmod_by_zero():
    with pytest.raises(DivisionByZero):
        divmod(P("t"), Poly.zero(Q))


def test_exact_div():
    assert P("t^2 - 1").exact_div(P("t - 1")) == P("t + 1")
    with pytest.raises(InvalidInput):
        P("t^2 + 1").exact_div(P("t - 1"))


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        P("t") + P("t", F5)


def test_arithmetic_against_evaluation():
    f, g = P("t^3 - 2*t + 5"), P("2*t^2 + 1/3")
    for x in range(-3, 4):
        x = Fraction(x)
        assert (f * g).evaluate(x) == f.evaluate(x) * g.evaluate(x)
        assert (f - g).evaluate(x) == f.evaluate(x) - g.evaluate(x)
    assert (f**3).evaluate(2) == f.evaluate(2) ** 3


def test_gcd_examples():
    assert gcd(P("t^2 - 1"), P("t^2 + t")) == P("t + 1")
    assert gcd(P("t"), P("t + 1")) == P("1")
    assert gcd(P("2*t + 4"), Poly.zero(Q)) == P("t + 2")
    with pytest.raises(UndefinedGcd):
        gcd(Poly.zero(Q), Poly.zero(Q))


def test_bezout_examples():
    D, G = bezout(Ps("t, t+1"))
    assert D == P("1") and G == [P("-1"), P("1")]

    A = Ps("t, t+1, t+2")
    D, G = bezout(A)
    assert D == P("1")
    assert sum((g * a for g, a in zip(G, A)), Poly.zero(Q)) == D

    D, G = bezout(Ps("t^2, t^2"))
    assert D == P("t^2") and G == [P("1"), Poly.zero(Q)]


def test_bezout_errors():
    with pytest.raises(UndefinedGcd):
        bezout([Poly.zero(Q), Poly.zero(Q)])
    with pytest.raises(InvalidInput):
        bezout([P("t")])


def test_to_vector_examples():
    assert to_vector(P("t^2 + 3"), 4) == (0, 0, 1, 0, 3)
    assert to_vector(Poly.zero(Q), 2) == (0, 0, 0)
    with pytest.raises(DegreeOverflow):
        to_vector(P("t^3"), 2)


def test_from_vector_inverse():
    assert from_vector((0, 0, 1, 0, 3), Q) == P("t^2 + 3")


def test_embed_poly():
    f = embed_poly(P("t + 1", F5), F25)
    assert f.field == F25
    assert f == parse_poly("t + 1", F25)


def test_parse_examples():
    assert P("t^2 - 2*t + 1").coeffs == (1, -2, 1)
    assert P("1/2*t + 1/3").coeffs == (Fraction(1, 3), Fraction(1, 2))
    f = parse_poly("(u+1)*t + u", F25)
    assert f.degree == 1
    assert f.coeffs == (F25.generator, F25.add(F25.generator, F25.one))


def test_parse_factored_and_implicit():
    assert P("(t-1)^2") == P("t^2 - 2*t + 1")
    assert P("2t(t+1)") == P("2*t^2 + 2*t")
    assert P("(t-1)^7") == P("t - 1") ** 7
    assert P("-t^2") == Poly(Q, [0, 0, -1])
    assert P("t^2/4") == Poly(Q, [0, 0, Fraction(1, 4)])


@pytest.mark.parametrize("text", ["t^", "t + ", "(t", "t ^ t", "x + 1", "1/0", ""])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        P(text)


def test_parse_list():
    assert Ps("t^2-2*t+1, t^2, t^2+2*t+1") == [P("(t-1)^2"), P("t^2"), P("(t+1)^2")]
    with pytest.raises(ParseError):
        Ps("t,,t")


def test_format():
    assert format_poly(P("t^2 - 2*t + 1")) == "t^2 - 2*t + 1"
    assert format_poly(P("-t^3 + 1/2")) == "-t^3 + 1/2"
    assert format_poly(Poly.zero(Q)) == "0"
    assert format_poly(P("4*t + 3", F5)) == "4*t + 3"
    g = parse_poly("(2*u+1)*t^2 + u", F25)
    assert format_poly(g) == "(2*u+1)*t^2 + u"


@given(st.sampled_from(FIELDS).flatmap(lambda F: polys(F, 6)))
def test_format_parse_round_trip(f):
    assert parse_poly(format_poly(f), f.field) == f


@given(st.data())
def test_divmod_identity(data):
    check_divmod_identity(data)


@given(st.data())
def test_bezout_identity(data):
    check_bezout_identity(data)


@given(st.data())
def test_vector_round_trip(data):
    check_vector_round_trip(data)
