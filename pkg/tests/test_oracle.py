import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from shiftalg.algebra import C, E, U, Ustar, build_T, delta, mul, power, random_element
from shiftalg.oracle import (
    ConvergenceError, apply, edge_eigen_sweep, eigenvalues, exact_rows, heatmap_dump,
    hessenberg, numeric_rank, operator_norm, oracle_mul_check, orbit_span_dim, sort_eigenvalues,
    sweep_csv, to_matrix,
)


def test_to_matrix_examples():
    A = to_matrix(build_T("backward"), 4, 0.3)
    want = np.array([[0.3, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
    assert np.array_equal(A, want)
    assert np.array_equal(to_matrix(U(1), 3), np.array([[0, 0, 0], [1, 0, 0], [0, 1, 0]]))
    T2 = to_matrix(power(build_T("backward"), 2), 4, 0.3)
    assert np.allclose(T2[0], [0.09, 0.3, 1, 0], atol=1e-15)
    with pytest.raises(ValueError):
        to_matrix(C(5, 0), 4)


def test_oracle_products():
    assert oracle_mul_check(U(2), Ustar(1), 16, 0.3) == 0.0
    assert exact_rows(Ustar(3) + U(5), 10) == 7
    rng = random.Random(5)
    worst = max(oracle_mul_check(random_element(rng), random_element(rng), 32, 0.3)
                for _ in range(100))
    assert worst <= 1e-12


def test_compression_is_not_multiplicative_at_the_far_edge():
    N = 6
    A, B = to_matrix(Ustar(1), N), to_matrix(U(1), N)
    P = to_matrix(mul(Ustar(1), U(1)), N)
    assert not np.allclose(A @ B, P)
    assert np.allclose((A @ B)[:exact_rows(Ustar(1), N)], P[:exact_rows(Ustar(1), N)])


def test_operator_norm():
    assert abs(operator_norm(to_matrix(U(1), 8)) - 1.0) < 1e-12
    assert operator_norm(np.zeros((3, 3))) == 0.0
    rng = np.random.default_rng(0)
    for _ in range(10):
        M = rng.normal(size=(12, 12)) + 1j * rng.normal(size=(12, 12))
        assert abs(operator_norm(M) - np.linalg.norm(M, 2)) < 1e-8 * np.linalg.norm(M, 2)
    with pytest.raises(ConvergenceError):
        operator_norm(np.diag([1.0, 0.999999]) @ rng.normal(size=(2, 2)), tol=1e-30, max_iter=3)


def test_delta_norm_bound():
    for v in ("forward", "backward"):
        for r in range(1, 7):
            for e in (0.1, 0.3, 1.0):
                assert operator_norm(to_matrix(delta(r, v), 32, e)) <= (1 + e) ** r - 1 + 1e-9


def test_numeric_rank():
    assert numeric_rank(to_matrix(delta(4, "forward"), 16, 1.0)) == 1
    assert numeric_rank(np.eye(5)) == 5
    assert numeric_rank(np.zeros((3, 3))) == 0
    rng = np.random.default_rng(1)
    M = rng.normal(size=(8, 3)) @ rng.normal(size=(3, 8))
    assert numeric_rank(M) == 3


def test_eigen_ordering():
    # modulus descending, then argument ascending in (-pi, pi]
    assert sort_eigenvalues([1j, -1, 2, 1, -1j]) == [2, -1j, 1, 1j, -1]


def test_hessenberg_similarity():
    rng = np.random.default_rng(2)
    A = rng.normal(size=(7, 7))
    H = hessenberg(A)
    assert np.allclose(np.tril(H, -2), 0)
    assert abs(np.trace(H) - np.trace(A)) < 1e-12


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**31), st.integers(2, 24))
def test_eigenvalues_match_numpy(seed, n):
    rng = np.random.default_rng(seed)
    A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    got = np.array(eigenvalues(A))
    want = np.linalg.eigvals(A)
    scale = max(1.0, np.max(np.abs(want)))
    # match as multisets
    for w in want:
        assert np.min(np.abs(got - w)) <= 1e-9 * scale


def test_hermitian_spectrum():
    vals = eigenvalues(to_matrix(build_T("hermitian"), 16, 0.0))
    want = sorted(2 * np.cos(np.arange(1, 17) * np.pi / 17))
    assert np.allclose(sorted(v.real for v in vals), want, atol=1e-12)


def test_edge_sweep_and_csv():
    rows = edge_eigen_sweep([-1.0, 0.5], 8, "backward")
    assert rows[0].edge_eig == -1.0 and rows[1].edge_eig == 0.5
    csv = sweep_csv(rows).splitlines()
    assert csv[0] == "eps,n,k,re,im,is_edge"
    assert len(csv) == 1 + 2 * 8
    assert csv[1] == "-1,8,0,-1,0,1"
    heat = heatmap_dump(build_T("backward"), 4, 0.3).splitlines()
    assert heat[0] == "i,j,re,im" and len(heat) == 17
    assert heat[1] == "0,0,0.29999999999999999,0"


def test_eigen_relation_and_orbits():
    N, lam = 16, 0.5
    f = lam ** np.arange(N)
    out = apply(build_T("backward"), f, N, 0.3)
    assert out[0] == lam + 0.3
    assert np.array_equal(out[1:N - 1], lam * f[1:N - 1])
    e = np.zeros(8)
    e[3] = 1
    assert orbit_span_dim(e, 8) == 8
    with pytest.raises(ValueError):
        orbit_span_dim(np.zeros(4), 4)
    with pytest.raises(ValueError):
        apply(E, np.zeros(3), 4, 0.0)
