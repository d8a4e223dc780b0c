"""
Site functionals, boundary 2-cocycles and Chevalley-Eilenberg complexes.

Conventions::

    (d1 eta)(X, Y)      = eta([X, Y])
    (d2 w)(X, Y, Z)     = w([X,Y], Z) + w([Y,Z], X) + w([Z,X], Y)

Exterior-power bases are ordered lexicographically on index tuples, so all
assembled matrices (and therefore all reports) are deterministic.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .algebra import (
    Corner, Element, all_symbols, as_element, commutator, entry, mul,
)
from .exact import matmul_sparse, solve_unique, sparse_nullspace, sparse_rank
from .scalar import ONE, ZERO, Scalar


@dataclass(frozen=True)
class Functional:
    """``psi(A) = sum c_pq <e_p, A e_q>`` with finitely many nonzero ``c_pq``."""

    coeffs: dict

    def __post_init__(self):
        clean = {}
        for (p, q), c in self.coeffs.items():
            if p < 0 or q < 0:
                raise ValueError("site indices must be non-negative")
            c = Scalar.coerce(c)
            if c:
                clean[(p, q)] = c
        object.__setattr__(self, "coeffs", clean)

    def __call__(self, a):
        out = ZERO
        for (p, q), c in self.coeffs.items():
            v = entry(a, p, q)
            if v:
                out = out + c * v
        return out

    def diagonal(self):
        return {p: c for (p, q), c in self.coeffs.items() if p == q}

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))


def phi(j):
    """Site functional ``A -> <e_j, A e_j>``."""
    return Functional({(j, j): ONE})


class Cochain2:
    """Antisymmetric bilinear form on Elements.

    Either induced by a Functional (``psi([X, Y])``) or given explicitly on
    pairs of basis symbols, in which case it is extended bilinearly and
    antisymmetrically and is zero on pairs absent from the table.
    """

    def __init__(self, evaluator, kind, source=None):
        self._eval = evaluator
        self.kind = kind
        self.source = source

    @classmethod
    def from_functional(cls, psi):
        return cls(lambda x, y: psi(commutator(x, y)), "functional", psi)

    @classmethod
    def explicit(cls, table):
        full = {}
        for (s, t), c in table.items():
            c = Scalar.coerce(c)
            if s == t and c:
                raise ValueError("antisymmetric table needs zero diagonal, got %r" % ((s, t),))
            if (t, s) in table and Scalar.coerce(table[(t, s)]) != -c:
                raise ValueError("table is not antisymmetric at %r" % ((s, t),))
            full[(s, t)] = c
            full[(t, s)] = -c

        def ev(x, y):
            out = ZERO
            for s, cs in as_element(x).items():
                for t, ct in as_element(y).items():
                    v = full.get((s, t))
                    if v:
                        out = out + cs * ct * v
            return out

        return cls(ev, "explicit", full)

    def __call__(self, x, y):
        return self._eval(as_element(x), as_element(y))


def omega(j, x, y):
    """j-th boundary cocycle ``<e_j, [x, y] e_j>``."""
    if j < 0:
        raise ValueError("site index must be non-negative")
    return entry(commutator(x, y), j, j)


def boundary_cocycle(j):
    return Cochain2(lambda x, y: omega(j, x, y), "functional", phi(j))


def d2_check(w, x, y, z):
    """``w([x,y],z) + w([y,z],x) + w([z,x],y)``."""
    return w(commutator(x, y), z) + w(commutator(y, z), x) + w(commutator(z, x), y)


def _d1_by_products(eta, x, y):
    # deliberately routed through the two products, not the commutator
    return eta(mul(x, y)) - eta(mul(y, x))


def exactness_witness(j, window):
    """Check ``omega_j = d1 phi_j`` on every pair of basis symbols of index <= window.

    Returns ``(phi_j, failures)``.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    f = phi(j)
    syms = [Element.symbol(s) for s in all_symbols(window)]
    failures = 0
    for x in syms:
        for y in syms:
            if omega(j, x, y) != _d1_by_products(f, x, y):
                failures += 1
    return f, failures


def separating_matrix(J):
    """``M[j][k] = omega_k(C(j,0), C(0,j))`` for ``0 <= j, k <= J``."""
    if J < 0:
        raise ValueError("J must be >= 0")
    out = []
    for j in range(J + 1):
        br = commutator(Element.symbol(Corner(j, 0)), Element.symbol(Corner(0, j)))
        out.append([entry(br, k, k) for k in range(J + 1)])
    return out


def independence_matrix(J):
    """``M[m-1][k] = omega_k(U^m, U*^m)`` for ``m = 1..J+1``, ``k = 0..J``.

    ``[S^m, S*^m] = -(C(0,0) + ... + C(m-1,m-1))``, so the matrix is lower
    triangular with -1 on and below the diagonal.
    """
    from .algebra import U, Ustar

    if J < 0:
        raise ValueError("J must be >= 0")
    out = []
    for m in range(1, J + 2):
        br = commutator(U(m), Ustar(m))
        out.append([entry(br, k, k) for k in range(J + 1)])
    return out


def constant_matrix(rows):
    """Drop a matrix of constant Scalars to GaussianRationals."""
    out = []
    for row in rows:
        r = []
        for v in row:
            v = Scalar.coerce(v)
            if not v.is_constant():
                raise ValueError("matrix entry %s depends on eps" % v)
            r.append(v.coefficient(0))
        out.append(r)
    return out


def forms_independent(matrix):
    """True when ``sum_k alpha_k column_k = 0`` forces ``alpha = 0``."""
    m = constant_matrix(matrix)
    sol = solve_unique(m, [0] * len(m))
    return sol is not None and not any(sol)


class FiniteLieAlgebra:
    """Lie algebra on an indexed basis, given by its structure constants.

    ``brackets[(i, j)]`` is a ``{k: coefficient}`` dict for ``[x_i, x_j]``;
    missing pairs bracket to zero and ``(j, i)`` is filled in by
    antisymmetry. Antisymmetry and the Jacobi identity on every basis triple
    are verified on construction.
    """

    def __init__(self, dim, brackets, labels=None):
        self.dim = dim
        self.labels = list(labels) if labels is not None else list(range(dim))
        table = {}
        for (i, j), vec in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError("basis index out of range in %r" % ((i, j),))
            vec = {k: v for k, v in vec.items() if v}
            if i == j and vec:
                raise ValueError("[x_%d, x_%d] must vanish" % (i, i))
            if (j, i) in brackets:
                other = {k: v for k, v in brackets[(j, i)].items() if v}
                if other != {k: -v for k, v in vec.items()}:
                    raise ValueError("bracket table not antisymmetric at %r" % ((i, j),))
            if vec:
                table[(i, j)] = vec
                table[(j, i)] = {k: -v for k, v in vec.items()}
        self._table = table
        self.jacobi_triples_checked = self._check_jacobi()

    def bracket_basis(self, i, j):
        return self._table.get((i, j), {})

    def bracket(self, u, v):
        """Bracket of coordinate vectors given as ``{index: coefficient}``."""
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self._table.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: v for k, v in out.items() if v}

    def is_abelian(self):
        return not self._table

    def _check_jacobi(self):
        n = 0
        for i, j, k in combinations(range(self.dim), 3):
            xi, xj, xk = {i: 1}, {j: 1}, {k: 1}
            total = {}
            for a, b, c in ((xi, xj, xk), (xj, xk, xi), (xk, xi, xj)):
                for idx, v in self.bracket(a, self.bracket(b, c)).items():
                    total[idx] = total.get(idx, 0) + v
            bad = {idx: v for idx, v in total.items() if v}
            if bad:
                raise ValueError("Jacobi identity fails on basis triple %r: %r" % ((i, j, k), bad))
            n += 1
        return n

    @classmethod
    def abelian(cls, dim):
        return cls(dim, {})

    def structure_constants(self):
        return {k: dict(v) for k, v in sorted(self._table.items())}


def corner_window_algebra(M):
    """Matrix-unit algebra ``span{C(a,b) : a, b <= M}`` with the commutator bracket."""
    labels = [Corner(a, b) for a in range(M + 1) for b in range(M + 1)]
    index = {s: i for i, s in enumerate(labels)}
    brackets = {}
    for i, j in combinations(range(len(labels)), 2):
        br = commutator(Element.symbol(labels[i]), Element.symbol(labels[j]))
        vec = {}
        for s, c in br.items():
            vec[index[s]] = Fraction(c.coefficient(0).re)
        if vec:
            brackets[(i, j)] = vec
    return FiniteLieAlgebra(len(labels), brackets, labels)


@dataclass
class ExtensionSpec:
    base: FiniteLieAlgebra
    c: list

    def __post_init__(self):
        d = self.base.dim
        if len(self.c) != d or any(len(row) != d for row in self.c):
            raise ValueError("c must be a %dx%d matrix" % (d, d))
        for i in range(d):
            for j in range(d):
                if self.c[i][j] != -self.c[j][i]:
                    raise ValueError("c is not antisymmetric at (%d, %d)" % (i, j))


def central_extension(spec):
    """``g + C z`` with ``[x + a z, y + b z] = c(x, y) z`` over an abelian base."""
    if not isinstance(spec, ExtensionSpec):
        raise TypeError("ExtensionSpec required")
    base = spec.base
    if not base.is_abelian():
        raise ValueError("central_extension needs an abelian base algebra")
    d = base.dim
    brackets = {}
    for i, j in combinations(range(d), 2):
        v = spec.c[i][j]
        if v:
            brackets[(i, j)] = {d: v}
    return FiniteLieAlgebra(d + 1, brackets, list(base.labels) + ["Z"])


@dataclass
class H2Report:
    M: int
    dim: int
    rank_d1: int
    rank_d2: int
    dim_ker_d2: int
    betti2: int
    complex_ok: bool
    omega_exactness: list
    omega_literal_coboundary: list
    cocycle_basis: list = field(default_factory=list)

    def to_dict(self):
        return {
            "M": self.M,
            "dim": self.dim,
            "rank_d1": self.rank_d1,
            "dim_ker_d2": self.dim_ker_d2,
            "betti2": self.betti2,
            "omega_exactness": list(self.omega_exactness),
        }


def ce_matrices(L):
    """Sparse ``d1 : L* -> L2*`` and ``d2 : L2* -> L3*`` plus the pair index.

    Rows are indexed by sorted index tuples, columns likewise (``d1``
    columns are basis indices).
    """
    n = L.dim
    pairs = list(combinations(range(n), 2))
    pidx = {p: i for i, p in enumerate(pairs)}
    d1 = {}
    for r, (i, j) in enumerate(pairs):
        row = dict(L.bracket_basis(i, j))
        if row:
            d1[r] = row
    d2 = {}
    for r, (i, j, k) in enumerate(combinations(range(n), 3)):
        row = {}
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            for l, v in L.bracket_basis(a, b).items():
                # w(x_l, x_c) in terms of the basis form on the sorted pair
                if l == c:
                    continue
                col = pidx[(l, c)] if l < c else pidx[(c, l)]
                row[col] = row.get(col, 0) + (v if l < c else -v)
        row = {col: v for col, v in row.items() if v}
        if row:
            d2[r] = row
    return d1, d2, pairs


def truncated_H2(M):
    """Brute-force ``H^2`` of the corner window ``span{C(a,b) : a, b <= M}``."""
    if not 1 <= M <= 5:
        raise ValueError("truncated_H2 supports 1 <= M <= 5, got %r" % (M,))
    L = corner_window_algebra(M)
    d1, d2, pairs = ce_matrices(L)
    n = L.dim
    rank_d1 = sparse_rank(d1.values())
    rank_d2 = sparse_rank(d2.values())
    dim_ker_d2 = len(pairs) - rank_d2
    complex_ok = not matmul_sparse(d2, d1)

    # d1 column l is the coboundary of the dual basis form x_l^*
    im_rows = []
    for l in range(n):
        vec = {r: row[l] for r, row in d1.items() if l in row}
        if vec:
            im_rows.append(vec)
    index = {s: i for i, s in enumerate(L.labels)}
    exact_flags, literal_flags = [], []
    for j in range(M + 1):
        w = {}
        for r, (p, q) in enumerate(pairs):
            v = omega(j, Element.symbol(L.labels[p]), Element.symbol(L.labels[q]))
            if v:
                w[r] = Fraction(v.coefficient(0).re)
        lit = {r: row[index[Corner(j, j)]] for r, row in d1.items() if index[Corner(j, j)] in row}
        literal_flags.append(w == lit)
        exact_flags.append(sparse_rank(list(im_rows) + [w]) == rank_d1)

    cocycle_basis = []
    betti2 = dim_ker_d2 - rank_d1
    if betti2:
        span_rank = rank_d1
        span = list(im_rows)
        for vec in sparse_nullspace(d2.values(), len(pairs)):
            cand = {i: v for i, v in enumerate(vec) if v}
            if sparse_rank(span + [cand]) > span_rank:
                span.append(cand)
                span_rank += 1
                cocycle_basis.append({pairs[i]: v for i, v in cand.items()})
            if len(cocycle_basis) == betti2:
                break
    return H2Report(M, n, rank_d1, rank_d2, dim_ker_d2, betti2, complex_ok,
                    exact_flags, literal_flags, cocycle_basis)


def d2_d1_vanishes(M):
    """Exact ``d2 . d1 = 0`` on the corner window (valid for any M)."""
    L = corner_window_algebra(M)
    d1, d2, _ = ce_matrices(L)
    return not matmul_sparse(d2, d1)


def diagonal_reduction_check(psi, window):
    """Check ``psi([X,Y]) = (d1 psi)(X,Y)`` on all basis pairs of index <= window.

    Both ``omega_psi`` and ``sum_j c_jj omega_j`` are then coboundaries, so
    they are trivially cohomologous. The stronger fact that
    ``omega_psi - sum_j c_jj omega_j = d1(psi - sum_j c_jj phi_j)`` holds
    literally is checked too.
    """
    w = Cochain2.from_functional(psi)
    diag = psi.diagonal()
    rest = Functional({k: v for k, v in psi.coeffs.items() if k[0] != k[1]})
    syms = [Element.symbol(s) for s in all_symbols(window)]
    failures = 0
    diff_failures = 0
    for x in syms:
        for y in syms:
            lhs = w(x, y)
            if lhs != _d1_by_products(psi, x, y):
                failures += 1
            diag_part = ZERO
            for j, c in diag.items():
                diag_part = diag_part + c * omega(j, x, y)
            if lhs - diag_part != _d1_by_products(rest, x, y):
                diff_failures += 1
    return {
        "holds": failures == 0 and diff_failures == 0,
        "residual": failures,
        "difference_residual": diff_failures,
        "pairs_checked": len(syms) ** 2,
        "diagonal_part": {str(j): str(c) for j, c in sorted(diag.items())},
        "note": "omega_psi equals d1(psi) exactly, so both omega_psi and the "
                "diagonal combination are coboundaries",
    }


def trace_relation(x, y, M):
    """``sum_{j<=M} omega_j(x, y)``; zero for x, y in the corner window."""
    out = ZERO
    for j in range(M + 1):
        out = out + omega(j, x, y)
    return out

