"""
Exact arithmetic in the algebra spanned by shift powers, adjoint shift
powers and the matrix units ``|e_a><e_b|`` on the half-lattice.

Basis symbols
-------------
``Fwd(n)``       S^n, with ``Fwd(0)`` the identity
``Bwd(n)``       S*^n for n >= 1
``Corner(a, b)`` |e_a><e_b| = S^a E S*^b, with ``E = Corner(0, 0)``

Products of basis symbols are given in closed form by :func:`basis_mul`,
which is the only place structure constants live. Everything else is
bilinear bookkeeping on :class:`Element`.
"""

import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .scalar import EPS, ONE, ZERO, GaussianRational, Scalar

#: Largest index any basis symbol produced by a product may carry.
INDEX_CAP = 64


class IndexCapError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Fwd:
    n: int

    def max_index(self):
        return self.n


@dataclass(frozen=True, slots=True)
class Bwd:
    n: int

    def max_index(self):
        return self.n


@dataclass(frozen=True, slots=True)
class Corner:
    a: int
    b: int

    def max_index(self):
        return max(self.a, self.b)


IDENTITY = Fwd(0)
E_SYM = Corner(0, 0)


def make_symbol(kind, *idx):
    """Validated constructor; ``Bwd(0)`` normalizes to the identity."""
    if any((not isinstance(i, int)) or i < 0 for i in idx):
        raise ValueError("basis indices must be non-negative integers: %r" % (idx,))
    if any(i > INDEX_CAP for i in idx):
        raise IndexCapError("index %d exceeds cap %d" % (max(idx), INDEX_CAP))
    if kind == "fwd":
        return Fwd(*idx)
    if kind == "bwd":
        return Fwd(0) if idx[0] == 0 else Bwd(*idx)
    if kind == "corner":
        return Corner(*idx)
    raise ValueError("unknown symbol kind %r" % kind)


def _sort_key(sym):
    if type(sym) is Fwd:
        return (0, -sym.n, 0)
    if type(sym) is Bwd:
        return (1, -sym.n, 0)
    return (2, -sym.a, -sym.b)


def _capped(sym):
    if sym.max_index() > INDEX_CAP:
        raise IndexCapError("product produced %r beyond index cap %d" % (sym, INDEX_CAP))
    return sym


@lru_cache(maxsize=None)
def basis_mul(x, y):
    """Product of two basis symbols as a tuple of ``(symbol, int)`` terms."""
    tx, ty = type(x), type(y)
    if tx is Fwd:
        m = x.n
        if ty is Fwd:
            return ((_capped(Fwd(m + y.n)), 1),)
        if ty is Bwd:
            n = y.n
            if m >= n:
                head = Fwd(m - n)
                return ((head, 1),) + tuple((Corner(m - n + j, j), -1) for j in range(n))
            head = Bwd(n - m)
            return ((head, 1),) + tuple((Corner(j, j + n - m), -1) for j in range(m))
        return ((_capped(Corner(y.a + m, y.b)), 1),)
    if tx is Bwd:
        n = x.n
        if ty is Fwd:
            m = y.n
            if m >= n:
                return ((Fwd(m - n), 1),)
            return ((Bwd(n - m), 1),)
        if ty is Bwd:
            return ((_capped(Bwd(n + y.n)), 1),)
        if y.a >= n:
            return ((Corner(y.a - n, y.b), 1),)
        return ()
    # x is a Corner
    if ty is Fwd:
        if x.b >= y.n:
            return ((Corner(x.a, x.b - y.n), 1),)
        return ()
    if ty is Bwd:
        return ((_capped(Corner(x.a, x.b + y.n)), 1),)
    if x.b == y.a:
        return ((Corner(x.a, y.b), 1),)
    return ()


class Element:
    """Finite linear combination of basis symbols with Scalar coefficients.

    Zero coefficients are never stored, so two Elements are equal exactly
    when their term maps are equal. Treat instances as immutable.
    """

    __slots__ = ("_t",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for sym, c in dict(terms).items():
                if not isinstance(sym, (Fwd, Bwd, Corner)):
                    raise TypeError("not a basis symbol: %r" % (sym,))
                if type(sym) is Bwd and sym.n == 0:
                    sym = IDENTITY
                c = Scalar.coerce(c)
                if c:
                    t[sym] = t[sym] + c if sym in t else c
        self._t = {k: v for k, v in t.items() if v}

    @classmethod
    def _raw(cls, t):
        e = cls.__new__(cls)
        e._t = t
        return e

    @classmethod
    def symbol(cls, sym, coeff=ONE):
        return cls({sym: coeff})

    @property
    def terms(self):
        return dict(self._t)

    def items(self):
        return sorted(self._t.items(), key=lambda kv: _sort_key(kv[0]))

    def __iter__(self):
        return iter(self._t)

    def __len__(self):
        return len(self._t)

    def __getitem__(self, sym):
        return self._t.get(sym, ZERO)

    def __bool__(self):
        return bool(self._t)

    def __eq__(self, other):
        if isinstance(other, Element):
            return self._t == other._t
        if isinstance(other, int) and other == 0:
            return not self._t
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        t = dict(self._t)
        for s, c in other._t.items():
            w = t.get(s)
            if w is None:
                t[s] = c
            else:
                w = w + c
                if w:
                    t[s] = w
                else:
                    del t[s]
        return Element._raw(t)

    def __neg__(self):
        return Element._raw({s: -c for s, c in self._t.items()})

    def __sub__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Element):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __matmul__(self, other):
        return mul(self, other)

    def scale(self, c):
        c = Scalar.coerce(c)
        if not c:
            return ZERO_ELEMENT
        return Element._raw({s: v for s, v in ((s, v * c) for s, v in self._t.items()) if v})

    def max_index(self):
        """Largest shift degree or corner index present (0 for the zero Element)."""
        return max((s.max_index() for s in self._t), default=0)

    def bwd_degree(self):
        return max((s.n for s in self._t if type(s) is Bwd), default=0)

    def eps_degree(self):
        return max((c.degree for c in self._t.values()), default=-1)

    def eps_coefficient(self, k):
        """The Element multiplying ``eps**k``."""
        out = {}
        for s, c in self._t.items():
            v = c.coefficient(k)
            if v:
                out[s] = Scalar({0: v})
        return Element._raw(out)

    def substitute(self, eps):
        """Replace eps by an exact Gaussian rational."""
        out = {}
        for s, c in self._t.items():
            v = c.substitute(eps)
            if v:
                out[s] = Scalar({0: v})
        return Element._raw(out)

    def corner_part(self):
        return Element._raw({s: c for s, c in self._t.items() if type(s) is Corner})

    def __str__(self):
        from .grammar import format_element

        return format_element(self)

    def __repr__(self):
        return "Element(%s)" % self


ZERO_ELEMENT = Element()


def as_element(x):
    if isinstance(x, Element):
        return x
    if isinstance(x, (Fwd, Bwd, Corner)):
        return Element.symbol(x)
    return Element.symbol(IDENTITY, Scalar.coerce(x))


# Shorthand constructors.
def U(n=1):
    return Element.symbol(Fwd(n))


def Ustar(n=1):
    return Element.symbol(make_symbol("bwd", n))


def C(a, b):
    return Element.symbol(Corner(a, b))


E = Element.symbol(E_SYM)
I = Element.symbol(IDENTITY)


def mul(x, y):
    """Bilinear extension of :func:`basis_mul`."""
    x, y = as_element(x), as_element(y)
    acc = {}
    for sx, cx in x._t.items():
        for sy, cy in y._t.items():
            prod = basis_mul(sx, sy)
            if not prod:
                continue
            c = cx * cy
            for s, k in prod:
                v = c if k == 1 else c * k
                w = acc.get(s)
                acc[s] = v if w is None else w + v
    return Element._raw({s: c for s, c in acc.items() if c})


def commutator(x, y):
    return mul(x, y) - mul(y, x)


def power(x, k):
    if not isinstance(k, int) or k < 0:
        raise ValueError("power needs a non-negative integer exponent, got %r" % (k,))
    out = I
    for _ in range(k):
        out = mul(out, x)
    return out


def product(*xs):
    out = I
    for x in xs:
        out = mul(out, x)
    return out


class ShiftVariant(Enum):
    FORWARD = "forward"
    BACKWARD = "backward"
    HERMITIAN = "hermitian"

    @classmethod
    def parse(cls, v):
        if isinstance(v, cls):
            return v
        return cls(str(v).lower())


def shift(v, n=1):
    """The undeformed part raised to ``n``: S^n, S*^n, or (S + S*)^n."""
    v = ShiftVariant.parse(v)
    if v is ShiftVariant.FORWARD:
        return U(n)
    if v is ShiftVariant.BACKWARD:
        return Ustar(n)
    return power(U(1) + Ustar(1), n)


def build_T(v):
    """Boundary-deformed operator ``U + eps E`` (or ``U + U* + eps E``)."""
    v = ShiftVariant.parse(v)
    boundary = E.scale(EPS)
    if v is ShiftVariant.HERMITIAN:
        return U(1) + Ustar(1) + boundary
    return shift(v) + boundary


def telescoping_residual(m, v):
    """``T^m - U^m - eps * sum_j U^(m-1-j) E T^j``; identically zero."""
    if m < 1:
        raise ValueError("m must be >= 1")
    T = build_T(v)
    Tj = I
    acc = ZERO_ELEMENT
    for j in range(m):
        acc = acc + product(shift(v, m - 1 - j), E, Tj)
        Tj = mul(Tj, T)
    return power(T, m) - shift(v, m) - acc.scale(EPS)


def delta(r, v):
    """``T^r - U^r``, the boundary correction of the r-th power."""
    return power(build_T(v), r) - shift(v, r)


def entry(x, p, q):
    """Exact matrix entry ``<e_p, x e_q>``."""
    if p < 0 or q < 0:
        raise ValueError("site indices must be non-negative")
    out = ZERO
    for s, c in as_element(x)._t.items():
        t = type(s)
        if t is Fwd:
            hit = p == q + s.n
        elif t is Bwd:
            hit = p + s.n == q
        else:
            hit = p == s.a and q == s.b
        if hit:
            out = out + c
    return out


def truncate(x, n):
    """Exact ``n x n`` compression as a list of rows of Scalars."""
    return [[entry(x, p, q) for q in range(n)] for p in range(n)]


def corner_support(x):
    """Row and column index sets of the Corner part of ``x``."""
    rows, cols = set(), set()
    for s in as_element(x)._t:
        if type(s) is Corner:
            rows.add(s.a)
            cols.add(s.b)
    return rows, cols


def corner_rank(x, eps_value, corner_only=False):
    """Exact rank of the Corner part after substituting ``eps = eps_value``.

    A surviving Fwd/Bwd term would make the rank infinite, so it is rejected
    unless ``corner_only`` is set.
    """
    from .exact import gaussian_rank

    y = as_element(x).substitute(GaussianRational.coerce(eps_value))
    band = [s for s in y if type(s) is not Corner]
    if band and not corner_only:
        raise ValueError("Element has non-finite-rank terms %r; pass corner_only=True" % band)
    y = y.corner_part()
    if not y:
        return 0
    rows, cols = corner_support(y)
    ri = {a: i for i, a in enumerate(sorted(rows))}
    ci = {b: j for j, b in enumerate(sorted(cols))}
    mat = [[GaussianRational(0)] * len(ci) for _ in ri]
    for s, c in y._t.items():
        mat[ri[s.a]][ci[s.b]] = c.coefficient(0)
    return gaussian_rank(mat)


def generic_corner_rank(x, corner_only=False, seed=0):
    """Rank of the Corner part for generic eps.

    Substitutes eps = 1 and eps = 2/3; when they disagree a third random
    rational breaks the tie (the maximum over the samples is returned).
    """
    from fractions import Fraction

    r1 = corner_rank(x, 1, corner_only)
    r2 = corner_rank(x, Fraction(2, 3), corner_only)
    if r1 == r2:
        return r1
    rng = random.Random(seed)
    r3 = corner_rank(x, Fraction(rng.randint(3, 997), rng.randint(998, 1999)), corner_only)
    return max(r1, r2, r3)


def jacobiator(x, y, z):
    return (commutator(x, commutator(y, z))
            + commutator(y, commutator(z, x))
            + commutator(z, commutator(x, y)))


def first_order_coefficient(m, n, v):
    """First-order data for ``[T^m, T^n]``.

    Returns ``(true, displayed)`` where ``true`` is the eps^1 coefficient of
    the commutator (always zero) and ``displayed`` is
    ``sum_j [U^m, C(n-1-j, j)] + sum_i [C(m-1-i, i), U^n]``, the first-order
    sum with each ``U^a E U^b`` read as the matrix unit ``C(a, b)``.
    """
    if m < 1 or n < 1:
        raise ValueError("m, n must be >= 1")
    T = build_T(v)
    true = commutator(power(T, m), power(T, n)).eps_coefficient(1)
    Um, Un = shift(v, m), shift(v, n)
    displayed = ZERO_ELEMENT
    for j in range(n):
        displayed = displayed + commutator(Um, C(n - 1 - j, j))
    for i in range(m):
        displayed = displayed + commutator(C(m - 1 - i, i), Un)
    return true, displayed


def first_order_operator_reading(m, n, v):
    """Same sum with ``U^a E U^b`` read as the literal operator product."""
    Um, Un = shift(v, m), shift(v, n)
    out = ZERO_ELEMENT
    for j in range(n):
        out = out + commutator(Um, product(shift(v, n - 1 - j), E, shift(v, j)))
    for i in range(m):
        out = out + commutator(product(shift(v, m - 1 - i), E, shift(v, i)), Un)
    return out


def all_symbols(k):
    """Every basis symbol with all indices <= k."""
    syms = [Fwd(n) for n in range(k + 1)]
    syms += [Bwd(n) for n in range(1, k + 1)]
    syms += [Corner(a, b) for a in range(k + 1) for b in range(k + 1)]
    return syms


def random_scalar(rng, max_eps_degree=2, gaussian=True):
    """Small random Scalar: a few eps powers with Gaussian rational coefficients."""
    from fractions import Fraction

    c = {}
    for _ in range(rng.randint(1, 2)):
        k = rng.randint(0, max_eps_degree)
        re = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
        im = Fraction(rng.randint(-4, 4), rng.randint(1, 4)) if gaussian and rng.random() < 0.5 else 0
        c[k] = GaussianRational(re, im)
    s = Scalar(c)
    return s if s else ONE


def random_symbol(rng, k):
    r = rng.random()
    if r < 0.3:
        return Fwd(rng.randint(0, k))
    if r < 0.55:
        return Bwd(rng.randint(1, max(k, 1)))
    return Corner(rng.randint(0, k), rng.randint(0, k))


def random_element(rng, k=6, n_terms=3, max_eps_degree=2, gaussian=True):
    """Random Element with ``n_terms`` basis symbols of index <= k."""
    if isinstance(rng, int):
        rng = random.Random(rng)
    terms = {}
    for _ in range(n_terms):
        terms[random_symbol(rng, k)] = random_scalar(rng, max_eps_degree, gaussian)
    return Element(terms)
