from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from shiftalg.scalar import EPS, ONE, ZERO, GaussianRational, Scalar, format_scalar

rationals = st.fractions(max_denominator=20).filter(lambda q: abs(q) < 50)
gq = st.builds(GaussianRational, rationals, rationals)
scalars = st.dictionaries(st.integers(0, 3), gq, max_size=3).map(Scalar)


def test_gaussian_parse_and_str():
    z = GaussianRational.coerce("1/2+3/4i")
    assert z == GaussianRational(Fraction(1, 2), Fraction(3, 4))
    assert str(z) == "(1/2+3/4i)"
    assert str(GaussianRational(Fraction(3, 10))) == "3/10"
    assert str(GaussianRational(0, Fraction(3, 4))) == "3/4i"


def test_gaussian_division_and_norm():
    z = GaussianRational(1, 2)
    assert z / z == GaussianRational(1)
    assert z * z.conjugate() == GaussianRational(z.norm2())
    assert complex(z) == 1 + 2j
    with pytest.raises(ZeroDivisionError):
        z / GaussianRational(0)


def test_eps_polynomial_arithmetic():
    p = (ONE + EPS) * (ONE - EPS)
    assert p == ONE - EPS * EPS
    assert p.degree == 2
    assert p.coefficient(1) == GaussianRational(0)
    assert p.substitute(Fraction(3, 10)) == GaussianRational(Fraction(91, 100))
    assert abs(p.evaluate(0.3) - 0.91) < 1e-15
    assert not ZERO and ZERO.degree == -1


def test_format_scalar():
    assert format_scalar(EPS * 2) == "2 eps"
    assert format_scalar(EPS * EPS) == "eps^2"
    assert format_scalar(ONE) == "1"


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == ZERO


@given(scalars, rationals)
def test_substitute_is_ring_homomorphism(a, q):
    b = a * a + EPS
    assert b.substitute(q) == a.substitute(q) * a.substitute(q) + GaussianRational(q)
