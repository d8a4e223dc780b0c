import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from shiftalg.algebra import C, E, U, Ustar, all_symbols, commutator, random_element, random_scalar
from shiftalg.cohomology import (
    Cochain2, ExtensionSpec, FiniteLieAlgebra, Functional, boundary_cocycle, ce_matrices,
    central_extension, constant_matrix, corner_window_algebra, d2_check, d2_d1_vanishes,
    diagonal_reduction_check, exactness_witness, forms_independent, independence_matrix,
    omega, phi, separating_matrix, trace_relation, truncated_H2,
)
from shiftalg.exact import matrix_rank, sparse_rank
from shiftalg.scalar import ONE, ZERO, Scalar


def betti2(L):
    d1, d2, pairs = ce_matrices(L)
    return len(pairs) - sparse_rank(d2.values()) - sparse_rank(d1.values())


def test_omega_nontriv_example():
    assert omega(1, C(1, 0), C(0, 1)) == ONE
    assert omega(0, C(1, 0), C(0, 1)) == Scalar.const(-1)


def test_functional_evaluation():
    psi = Functional({(0, 1): 2, (1, 1): 3})
    assert psi(C(0, 1) + C(1, 1)) == Scalar.const(5)
    assert psi(Ustar(1)) == Scalar.const(2)
    assert phi(2)(C(2, 2)) == ONE
    with pytest.raises(ValueError):
        Functional({(-1, 0): 1})


def test_explicit_cochain_is_antisymmetric():
    w = Cochain2.explicit({(U(1).items()[0][0], E.items()[0][0]): 1})
    assert w(U(1), E) == ONE and w(E, U(1)) == -ONE
    with pytest.raises(ValueError):
        Cochain2.explicit({(E.items()[0][0], E.items()[0][0]): 1})


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 2**31), st.integers(0, 5))
def test_d2_vanishes_on_random_triples(seed, j):
    rng = random.Random(seed)
    x, y, z = (random_element(rng) for _ in range(3))
    assert d2_check(boundary_cocycle(j), x, y, z) == ZERO
    psi = Functional({(rng.randint(0, 5), rng.randint(0, 5)): random_scalar(rng)})
    assert d2_check(Cochain2.from_functional(psi), x, y, z) == ZERO


def test_every_omega_is_a_coboundary():
    for j in range(5):
        f, fails = exactness_witness(j, 4)
        assert fails == 0 and f == phi(j)


def test_separating_matrix_shape():
    m = constant_matrix(separating_matrix(3))
    assert [[int(v.re) for v in row] for row in m] == [
        [0, 0, 0, 0],
        [-1, 1, 0, 0],
        [-1, 0, 1, 0],
        [-1, 0, 0, 1],
    ]


def test_independence_matrix_is_lower_triangular():
    m = independence_matrix(4)
    for i, row in enumerate(m):
        for k, v in enumerate(row):
            assert v == Scalar.const(-1 if k <= i else 0)
    assert forms_independent(m)
    assert not forms_independent(separating_matrix(3))


def test_h2_of_corner_window_vanishes():
    for M in (1, 2, 3):
        rep = truncated_H2(M)
        assert rep.betti2 == 0 and rep.complex_ok
        assert rep.dim == (M + 1) ** 2
        assert all(rep.omega_exactness)
    with pytest.raises(ValueError):
        truncated_H2(6)
    assert d2_d1_vanishes(2)


def test_ce_complex_on_known_algebras():
    # abelian: every 2-form is a nontrivial cocycle
    assert betti2(FiniteLieAlgebra.abelian(4)) == 6
    # Heisenberg [x, y] = z: H^2 has dimension 2
    heis = central_extension(ExtensionSpec(FiniteLieAlgebra.abelian(2), [[0, 1], [-1, 0]]))
    assert heis.dim == 3 and betti2(heis) == 2
    # the M = 1 window is gl(2), whose H^2 vanishes
    assert betti2(corner_window_algebra(1)) == 0


def test_lie_algebra_validation():
    with pytest.raises(ValueError):
        FiniteLieAlgebra(2, {(0, 0): {1: 1}})
    with pytest.raises(ValueError):
        FiniteLieAlgebra(2, {(0, 1): {0: 1}, (1, 0): {0: 1}})
    with pytest.raises(ValueError):
        # [x0,x1]=x1, [x0,x2]=x1, [x1,x2]=x0 breaks Jacobi
        FiniteLieAlgebra(3, {(0, 1): {1: 1}, (0, 2): {1: 1}, (1, 2): {0: 1}})
    with pytest.raises(ValueError):
        central_extension(ExtensionSpec(corner_window_algebra(1), [[0] * 4 for _ in range(4)]))
    with pytest.raises(ValueError):
        ExtensionSpec(FiniteLieAlgebra.abelian(2), [[0, 1], [1, 0]])


def test_diagonal_reduction():
    psi = Functional({(0, 0): 2, (1, 2): Fraction(1, 3), (2, 2): -1})
    rep = diagonal_reduction_check(psi, 3)
    assert rep["holds"]
    assert rep["diagonal_part"] == {"0": "2", "2": "-1"}


def test_trace_relation_on_corner_pairs():
    rng = random.Random(7)
    M = 6
    for _ in range(50):
        x = C(rng.randint(0, M), rng.randint(0, M)) + C(rng.randint(0, M), rng.randint(0, M))
        y = C(rng.randint(0, M), rng.randint(0, M))
        assert trace_relation(x, y, M) == ZERO
    # outside the corner window the trace relation does not apply
    assert trace_relation(U(1), Ustar(1), 0) != ZERO
