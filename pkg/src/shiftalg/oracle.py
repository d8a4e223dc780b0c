"""
Dense numeric ground truth for symbolic Elements.

Elements are compressed to the first ``N`` sites (``P_N x P_N``) and
evaluated at a numeric ``eps``. Compression is not multiplicative at the
far edge of the window (``P S* P S P != P``), so product checks only compare
the rows where the truncated sum over intermediate sites is complete.
"""

from dataclasses import dataclass

import numpy as np

from .algebra import Bwd, Corner, Fwd, ShiftVariant, as_element, build_T, mul


class ConvergenceError(RuntimeError):
    def __init__(self, message, last=None):
        super().__init__(message)
        self.last = last


def to_matrix(x, N, eps=0.0):
    """``N x N`` compression of ``x`` at numeric ``eps`` as a complex array."""
    if N < 1:
        raise ValueError("N must be >= 1")
    x = as_element(x)
    eps = complex(eps)
    A = np.zeros((N, N), dtype=complex)
    for s, c in x.items():
        if s.max_index() >= N:
            raise ValueError("symbol %r does not fit in an %d-site truncation" % (s, N))
        v = c.evaluate(eps)
        t = type(s)
        if t is Fwd:
            idx = np.arange(N - s.n)
            A[idx + s.n, idx] += v
        elif t is Bwd:
            idx = np.arange(N - s.n)
            A[idx, idx + s.n] += v
        else:
            A[s.a, s.b] += v
    if not np.all(np.isfinite(A)):
        raise ValueError("non-finite matrix entries")
    return A


def exact_rows(x, N):
    """Rows ``p`` for which ``(P x P y P)_pq = (P x y P)_pq`` for every y.

    The sum over intermediate sites is only cut off when ``x`` reaches past
    site ``N - 1`` from row ``p``, which happens for ``p >= N - d`` where
    ``d`` is the largest adjoint-shift degree in ``x``.
    """
    return N - as_element(x).bwd_degree()


def oracle_mul_check(x, y, N, eps):
    """Max-abs deviation between the symbolic and the matrix product."""
    x, y = as_element(x), as_element(y)
    A, B = to_matrix(x, N, eps), to_matrix(y, N, eps)
    P = to_matrix(mul(x, y), N, eps)
    rows = exact_rows(x, N)
    if rows <= 0:
        raise ValueError("N = %d leaves no exactly comparable rows" % N)
    return float(np.max(np.abs((A @ B - P)[:rows]), initial=0.0))


def operator_norm(A, tol=1e-10, max_iter=10000):
    """Largest singular value by power iteration on ``A^H A``."""
    A = np.asarray(A, dtype=complex)
    n = A.shape[1]
    if not np.any(A):
        return 0.0
    x = np.ones(n, dtype=complex) / np.sqrt(n)
    if not np.any(A @ x):
        # all-ones start is orthogonal to the row space; use the heaviest column
        x = np.zeros(n, dtype=complex)
        x[int(np.argmax(np.linalg.norm(A, axis=0)))] = 1.0
    est = np.linalg.norm(A @ x)
    for _ in range(max_iter):
        y = A.conj().T @ (A @ x)
        ny = np.linalg.norm(y)
        if ny == 0.0:
            return 0.0
        x = y / ny
        new = np.linalg.norm(A @ x)
        if abs(new - est) <= tol * new:
            return float(new)
        est = new
    raise ConvergenceError("power iteration did not converge in %d steps" % max_iter, last=est)


def numeric_rank(A, rel_tol=1e-9):
    """Rank by Gaussian elimination with complete pivoting."""
    M = np.array(A, dtype=complex)
    if M.size == 0:
        return 0
    m, n = M.shape
    first = None
    rank = 0
    for k in range(min(m, n)):
        sub = np.abs(M[k:, k:])
        i, j = np.unravel_index(int(np.argmax(sub)), sub.shape)
        piv = sub[i, j]
        if first is None:
            first = piv
            if first == 0.0:
                return 0
        if piv <= rel_tol * first:
            break
        i += k
        j += k
        M[[k, i]] = M[[i, k]]
        M[:, [k, j]] = M[:, [j, k]]
        f = M[k + 1:, k] / M[k, k]
        M[k + 1:, k:] -= np.outer(f, M[k, k:])
        rank += 1
    return rank


def _sort_key(z):
    z = complex(z.real + 0.0, z.imag + 0.0)
    return (-abs(z), float(np.angle(z)))


def sort_eigenvalues(vals):
    """Order by modulus descending, then argument ascending."""
    return sorted((complex(v) for v in vals), key=_sort_key)


def hessenberg(A):
    """Upper Hessenberg form by Householder reflections (similarity)."""
    H = np.array(A, dtype=complex)
    n = H.shape[0]
    for k in range(n - 2):
        x = H[k + 1:, k].copy()
        nx = np.linalg.norm(x)
        if nx == 0.0:
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x
        v[0] += phase * nx
        v /= np.linalg.norm(v)
        H[k + 1:, :] -= 2.0 * np.outer(v, v.conj() @ H[k + 1:, :])
        H[:, k + 1:] -= 2.0 * np.outer(H[:, k + 1:] @ v, v.conj())
        H[k + 2:, k] = 0.0
    return H


def _givens(a, b):
    r = np.hypot(abs(a), abs(b))
    if r == 0.0:
        return 1.0, 0.0
    return a / r, b / r


def _qr_step(H, lo, hi, mu):
    """One explicit shifted QR step on the active block ``H[lo:hi+1, lo:hi+1]``."""
    B = H[lo:hi + 1, lo:hi + 1]
    m = B.shape[0]
    B[np.diag_indices(m)] -= mu
    rots = []
    for k in range(m - 1):
        c, s = _givens(B[k, k], B[k + 1, k])
        G = np.array([[np.conj(c), np.conj(s)], [-s, c]])
        B[k:k + 2, k:] = G @ B[k:k + 2, k:]
        rots.append(G)
    for k, G in enumerate(rots):
        B[:k + 2, k:k + 2] = B[:k + 2, k:k + 2] @ G.conj().T
    B[np.diag_indices(m)] += mu


def _is_triangular(A):
    return not np.any(np.tril(A, -1)) or not np.any(np.triu(A, 1))


def eigenvalues(A, tol=1e-12):
    """All eigenvalues, sorted by modulus descending then argument.

    Triangular input returns its diagonal exactly; otherwise Hessenberg
    reduction is followed by Wilkinson-shifted QR with deflation.
    """
    A = np.asarray(A, dtype=complex)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("square matrix required")
    if n > 256:
        raise ValueError("eigenvalues supports n <= 256, got %d" % n)
    if _is_triangular(A):
        return sort_eigenvalues(np.diag(A))
    H = hessenberg(A)
    scale = max(float(np.max(np.abs(H))), 1.0)
    out = []
    hi = n - 1
    its = 0
    total = 0
    while hi >= 0:
        if hi == 0:
            out.append(H[0, 0])
            break
        lo = hi
        while lo > 0:
            sub = abs(H[lo, lo - 1])
            if sub <= tol * (abs(H[lo, lo]) + abs(H[lo - 1, lo - 1])) or sub <= tol * 1e-3 * scale:
                H[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            out.append(H[hi, hi])
            hi -= 1
            its = 0
            continue
        if total >= 100 * n:
            raise ConvergenceError(
                "QR iteration stalled at subdiagonal entry (%d, %d) = %.3e"
                % (hi, hi - 1, abs(H[hi, hi - 1])), last=H)
        a, b = H[hi - 1, hi - 1], H[hi - 1, hi]
        c, d = H[hi, hi - 1], H[hi, hi]
        if its and its % 11 == 0:
            mu = d + 0.75 * abs(c)  # exceptional shift breaks cycles
        else:
            half_tr = 0.5 * (a + d)
            disc = np.sqrt(half_tr * half_tr - (a * d - b * c))
            m1, m2 = half_tr + disc, half_tr - disc
            mu = m1 if abs(m1 - d) <= abs(m2 - d) else m2
        _qr_step(H, lo, hi, mu)
        its += 1
        total += 1
    return sort_eigenvalues(out)


@dataclass
class SweepRow:
    eps: float
    eigenvalues: list
    edge_eig: complex
    n: int


def edge_eigen_sweep(eps_list, N, v):
    """Spectrum of the truncated deformed shift for each eps.

    The edge eigenvalue is the one of largest modulus (first after sorting).
    """
    if N > 256:
        raise ValueError("N must be <= 256")
    T = build_T(ShiftVariant.parse(v))
    rows = []
    for e in eps_list:
        vals = eigenvalues(to_matrix(T, N, e))
        rows.append(SweepRow(float(e), vals, vals[0], N))
    return rows


def _g(x):
    return "%.17g" % x


def sweep_csv(rows):
    lines = ["eps,n,k,re,im,is_edge"]
    for r in rows:
        for k, z in enumerate(r.eigenvalues):
            lines.append("%s,%d,%d,%s,%s,%d" % (_g(r.eps), r.n, k, _g(z.real + 0.0),
                                                _g(z.imag + 0.0), 1 if k == 0 else 0))
    return "\n".join(lines) + "\n"


def heatmap_dump(x, N, eps):
    """CSV ``i,j,re,im`` with one row per matrix entry."""
    A = to_matrix(x, N, eps)
    lines = ["i,j,re,im"]
    for i in range(N):
        for j in range(N):
            z = A[i, j]
            lines.append("%d,%d,%s,%s" % (i, j, _g(z.real + 0.0), _g(z.imag + 0.0)))
    return "\n".join(lines) + "\n"


def apply(x, f, N, eps):
    f = np.asarray(f, dtype=complex)
    if f.shape != (N,):
        raise ValueError("vector length %s does not match N = %d" % (f.shape, N))
    return to_matrix(x, N, eps) @ f


def orbit_span_dim(f, N):
    """Dimension of ``span{C(j,k) f : j, k < N}``."""
    f = np.asarray(f, dtype=complex)
    if f.shape != (N,):
        raise ValueError("vector length %s does not match N = %d" % (f.shape, N))
    if not np.any(f):
        raise ValueError("orbit of the zero vector is trivial")
    vecs = []
    for j in range(N):
        for k in range(N):
            vecs.append(to_matrix(Corner(j, k), N) @ f)
    return numeric_rank(np.array(vecs))

