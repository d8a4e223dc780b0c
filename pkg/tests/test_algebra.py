import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from shiftalg.algebra import (
    Bwd, C, Corner, E, Element, Fwd, I, IndexCapError, ShiftVariant, U, Ustar, all_symbols,
    basis_mul, build_T, commutator, corner_rank, corner_support, delta, entry,
    first_order_coefficient, first_order_operator_reading, generic_corner_rank, jacobiator,
    make_symbol, mul, power, random_element, telescoping_residual, truncate,
)
from shiftalg.scalar import EPS, ONE, ZERO, Scalar


def el(sym):
    return Element.symbol(sym)


def test_symbols_of_different_kinds_are_distinct():
    assert Fwd(1) != Bwd(1)
    assert len({Fwd(1), Bwd(1), Corner(1, 1)}) == 3


def test_mul_examples():
    assert mul(C(1, 0), C(0, 1)) == C(1, 1)
    assert mul(U(2), Ustar(1)) == U(1) - C(1, 0)
    x = U(3) + EPS * C(2, 1) - Ustar(2)
    assert mul(I, x) == x and mul(x, I) == x


def test_shift_relations():
    assert mul(Ustar(1), U(1)) == I
    assert mul(U(1), Ustar(1)) == I - E
    assert mul(E, U(1)) == Element()
    assert mul(Ustar(1), E) == Element()


def test_commutator_examples():
    assert commutator(C(1, 0), C(0, 1)) == C(1, 1) - C(0, 0)
    for m in range(4):
        for n in range(4):
            assert commutator(U(m), U(n)) == 0
    assert commutator(U(1) + Ustar(1), C(0, 0)) == C(1, 0) - C(0, 1)


def test_power_and_T():
    Tb, Tf = build_T("backward"), build_T("forward")
    assert power(Tb, 2) == Ustar(2) + EPS * C(0, 1) + EPS * EPS * C(0, 0)
    assert power(Tf, 2) == U(2) + EPS * C(1, 0) + EPS * EPS * C(0, 0)
    assert power(Tb, 0) == I
    assert Tf == U(1) + EPS * E
    assert build_T("hermitian") == U(1) + Ustar(1) + EPS * E
    assert Tb.substitute(0) == Ustar(1)


@pytest.mark.parametrize("v", list(ShiftVariant))
def test_telescoping(v):
    for m in (1, 4, 7):
        assert telescoping_residual(m, v) == 0


def test_entries():
    assert entry(C(2, 3), 2, 3) == ONE
    assert entry(U(1), 1, 0) == ONE
    assert entry(power(build_T("backward"), 2), 0, 1) == EPS
    assert entry(U(1), 0, 1) == ZERO
    T4 = truncate(build_T("backward"), 4)
    assert T4[0] == [EPS, ONE, ZERO, ZERO]


def test_support_and_rank():
    rows, cols = corner_support(delta(3, "forward"))
    assert rows <= {0, 1, 2} and cols == {0}
    assert corner_support(C(5, 7)) == ({5}, {7})
    assert corner_support(commutator(build_T("hermitian"), E)) == ({0, 1}, {0, 1})
    assert corner_rank(delta(1, "forward"), 1) == 1
    assert corner_rank(delta(4, "forward"), 1) == 1
    assert corner_rank(C(0, 0) + C(1, 1), Fraction(7, 3)) == 2
    assert generic_corner_rank(delta(6, "backward")) == 1


def test_corner_rank_rejects_band_terms():
    with pytest.raises(ValueError):
        corner_rank(U(1) + C(0, 0), 1)
    assert corner_rank(U(1) + C(0, 0), 1, corner_only=True) == 1


def test_corner_rank_eps_cancellation():
    x = (EPS - ONE) * C(0, 0) + C(1, 1)
    assert corner_rank(x, 1) == 1
    assert generic_corner_rank(x) == 2


def test_jacobiator_examples():
    assert jacobiator(C(0, 1), C(1, 0), C(0, 0)) == 0
    assert jacobiator(build_T("forward"), U(2), E) == 0


def test_first_order():
    true, displayed = first_order_coefficient(1, 2, "forward")
    assert true == 0
    assert displayed == C(1, 1) - C(0, 0)
    assert first_order_operator_reading(1, 2, "forward") == 0
    assert first_order_coefficient(2, 3, "backward")[0] == 0


def test_index_cap():
    with pytest.raises(IndexCapError):
        make_symbol("fwd", 1000)
    with pytest.raises(IndexCapError):
        mul(U(40), U(40))


def test_exhaustive_associativity_small():
    syms = all_symbols(3)
    for x in syms:
        for y in syms:
            xy = mul(el(x), el(y))
            for z in syms:
                assert mul(xy, el(z)) == mul(el(x), mul(el(y), el(z)))


def test_basis_mul_coefficients_are_integers():
    for x in all_symbols(3):
        for y in all_symbols(3):
            for s, c in basis_mul(x, y):
                assert isinstance(c, int) and c in (-1, 1)


elements = st.integers(0, 2**31).map(lambda s: random_element(random.Random(s), k=5))


@settings(max_examples=60, deadline=None)
@given(elements, elements, elements)
def test_ring_properties(x, y, z):
    assert mul(mul(x, y), z) == mul(x, mul(y, z))
    assert mul(x, y + z) == mul(x, y) + mul(x, z)
    assert commutator(x, y) == -commutator(y, x)
    assert jacobiator(x, y, z) == 0


@settings(max_examples=40, deadline=None)
@given(elements, elements, st.fractions(max_denominator=9))
def test_substitution_is_multiplicative(x, y, q):
    assert mul(x, y).substitute(q) == mul(x.substitute(q), y.substitute(q))


@settings(max_examples=40, deadline=None)
@given(elements)
def test_canonical_form_roundtrip_through_dict(x):
    assert Element(dict(x.items())) == x
    assert hash(Element(dict(x.items()))) == hash(x)
