"""
Exact rank computations.

``gaussian_rank`` clears denominators and runs fraction-free (Bareiss)
elimination over the Gaussian integers, so no intermediate ever leaves
Z[i]. ``sparse_rank`` is plain elimination over Q on dict-of-dicts rows,
which is what the Chevalley-Eilenberg matrices (very sparse, small integer
entries) want.
"""

from fractions import Fraction
from math import lcm

from .scalar import GaussianRational


def _gi_mul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _gi_sub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def _gi_exact_div(x, y):
    n = y[0] * y[0] + y[1] * y[1]
    re = x[0] * y[0] + x[1] * y[1]
    im = x[1] * y[0] - x[0] * y[1]
    if re % n or im % n:
        raise ArithmeticError("inexact Gaussian integer division")
    return (re // n, im // n)


def _to_gaussian_integers(matrix):
    rows = []
    for row in matrix:
        row = [GaussianRational.coerce(v) for v in row]
        den = 1
        for v in row:
            den = lcm(den, Fraction(v.re).denominator, Fraction(v.im).denominator)
        rows.append([(int(v.re * den), int(v.im * den)) for v in row])
    return rows


def gaussian_rank(matrix):
    """Exact rank of a matrix of Gaussian rationals (list of rows)."""
    a = _to_gaussian_integers(matrix)
    if not a or not a[0]:
        return 0
    m, n = len(a), len(a[0])
    prev = (1, 0)
    rank = 0
    for col in range(n):
        if rank == m:
            break
        piv = next((r for r in range(rank, m) if a[r][col] != (0, 0)), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, m):
            f = a[r][col]
            row_r, row_p = a[r], a[rank]
            for c in range(col, n):
                # Bareiss step: (p*a_rc - f*a_pc) / prev is exact in Z[i]
                a[r][c] = _gi_exact_div(_gi_sub(_gi_mul(p, row_r[c]), _gi_mul(f, row_p[c])), prev)
        prev = p
        rank += 1
    return rank


def sparse_rank(rows):
    """Rank over Q of rows given as ``{col: value}`` dicts (consumed)."""
    pivots = {}
    rank = 0
    for row in rows:
        row = {c: Fraction(v) for c, v in row.items() if v}
        while row:
            c = min(row)
            if c not in pivots:
                inv = 1 / row[c]
                pivots[c] = {k: v * inv for k, v in row.items()}
                rank += 1
                break
            prow = pivots[c]
            f = row[c]
            for k, v in prow.items():
                w = row.get(k, 0) - f * v
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
    return rank


def matrix_rank(matrix):
    """Rank over Q (or Q[i]) of a dense list-of-rows matrix."""
    if any(isinstance(v, GaussianRational) and v.im for row in matrix for v in row):
        return gaussian_rank(matrix)
    return sparse_rank([{j: Fraction(GaussianRational.coerce(v).re) for j, v in enumerate(row) if v}
                        for row in matrix])


def solve_unique(matrix, rhs):
    """Solve ``matrix @ x = rhs`` over Q[i] when the solution is unique.

    Returns the solution list, or None when the system is inconsistent or
    underdetermined.
    """
    m = len(matrix)
    n = len(matrix[0]) if m else 0
    a = [[GaussianRational.coerce(v) for v in row] + [GaussianRational.coerce(b)]
         for row, b in zip(matrix, rhs)]
    piv_cols = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = GaussianRational(1) / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(m):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        piv_cols.append(c)
        r += 1
    if any(a[i][n] for i in range(r, m)):
        return None
    if r < n:
        return None
    x = [GaussianRational(0)] * n
    for i, c in enumerate(piv_cols):
        x[c] = a[i][n]
    return x


def matmul_sparse(a_rows, b_rows):
    """Product of two sparse matrices given as ``{row: {col: v}}``."""
    out = {}
    for i, row in a_rows.items():
        acc = {}
        for k, v in row.items():
            for j, w in b_rows.get(k, {}).items():
                acc[j] = acc.get(j, 0) + v * w
        acc = {j: v for j, v in acc.items() if v}
        if acc:
            out[i] = acc
    return out


def sparse_nullspace(rows, ncols):
    """Basis of ``{x : A x = 0}`` over Q for sparse rows ``{col: value}``.

    Returns a list of dense Fraction vectors of length ``ncols``.
    """
    pivots = {}
    for row in rows:
        row = {c: Fraction(v) for c, v in row.items() if v}
        for c in sorted(pivots):
            if c in row:
                f = row[c]
                for k, v in pivots[c].items():
                    w = row.get(k, 0) - f * v
                    if w:
                        row[k] = w
                    else:
                        row.pop(k, None)
        if row:
            c = min(row)
            inv = 1 / row[c]
            row = {k: v * inv for k, v in row.items()}
            for pc, prow in pivots.items():
                if c in prow:
                    f = prow[c]
                    for k, v in row.items():
                        w = prow.get(k, 0) - f * v
                        if w:
                            prow[k] = w
                        else:
                            prow.pop(k, None)
            pivots[c] = row
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for pc, prow in pivots.items():
            x[pc] = -prow.get(fc, 0)
        basis.append(x)
    return basis
