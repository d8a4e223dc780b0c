import random

import pytest
from hypothesis import given, settings, strategies as st

from shiftalg.algebra import C, E, I, U, Ustar, mul, product, random_element
from shiftalg.grammar import ParseError, format_element, parse_element
from shiftalg.scalar import EPS, GaussianRational, Scalar


@pytest.mark.parametrize("text, expected", [
    ("U^2*E*U*^3", lambda: product(U(2), E, Ustar(3))),
    ("(1/2+3/4i)eps^2 C(1,0)", lambda: C(1, 0).scale(
        Scalar({2: GaussianRational.coerce("1/2+3/4i")}))),
    ("U'^1 + 3/10 E", lambda: Ustar(1) + E.scale(GaussianRational.coerce("3/10"))),
    ("U* + U", lambda: Ustar(1) + U(1)),
    ("I - C(0,0)", lambda: I - C(0, 0)),
    ("eps", lambda: I.scale(EPS)),
    ("2", lambda: I.scale(2)),
    ("U*^2 + eps C(0,1) + eps^2 C(0,0)", lambda: Ustar(2) + C(0, 1).scale(EPS) + C(0, 0).scale(EPS * EPS)),
])
def test_parse(text, expected):
    assert parse_element(text) == expected()


def test_format_examples():
    assert format_element(C(1, 1) - C(0, 0)) == "C(1,1) - C(0,0)"
    assert format_element(Ustar(2) + EPS * C(0, 1) + EPS * EPS * C(0, 0)) == \
        "U*^2 + eps C(0,1) + eps^2 C(0,0)"
    assert format_element(mul(U(1), Ustar(1)) - U(0)) == "-C(0,0)"
    assert format_element(C(0, 0) - C(0, 0)) == "0"


@pytest.mark.parametrize("text, pos", [
    ("U^2 + + E", 6),
    ("C(1,", 0),
    ("U^2 $ E", 4),
    ("", 0),
])
def test_parse_errors_name_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_element(text)
    assert info.value.pos == pos
    assert "position %d" % pos in str(info.value)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**31))
def test_roundtrip(seed):
    x = random_element(random.Random(seed))
    assert parse_element(format_element(x)) == x
