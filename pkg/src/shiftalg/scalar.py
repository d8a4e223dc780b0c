"""
Exact scalars: polynomials in a formal coupling ``eps`` with Gaussian
rational coefficients.

Real and imaginary parts are kept as ``int`` while they stay integral and
are promoted to ``Fraction`` only when a division forces it. That keeps the
structure-constant heavy code paths (where every coefficient is +-1) on
plain integer arithmetic.
"""

from fractions import Fraction
from numbers import Rational


def _norm(q):
    """Demote an integral Fraction to int."""
    if type(q) is Fraction and q.denominator == 1:
        return q.numerator
    return q


def _qstr(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return "%d/%d" % (q.numerator, q.denominator)


class GaussianRational:
    """An exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im
        elif isinstance(re, complex):
            raise TypeError("floating point complex values are not exact")
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("floating point values are not exact")
        if not isinstance(re, Rational) or not isinstance(im, Rational):
            raise TypeError("rational parts required, got %r, %r" % (re, im))
        self.re = re if type(re) is int else _norm(Fraction(re))
        self.im = im if type(im) is int else _norm(Fraction(im))

    @classmethod
    def coerce(cls, value):
        if isinstance(value, cls):
            return value
        if isinstance(value, str):
            return cls(*_parse_gq(value))
        return cls(value)

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, Rational):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            if not isinstance(other, Rational):
                return NotImplemented
            return GaussianRational(self.re + other, self.im)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, (GaussianRational, Rational)):
            return NotImplemented
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            if not isinstance(other, Rational):
                return NotImplemented
            return GaussianRational(self.re * other, self.im * other)
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm2(self):
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        n = other.norm2()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        p = self * other.conjugate()
        return GaussianRational(_norm(Fraction(p.re, 1) / n), _norm(Fraction(p.im, 1) / n))

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("non-negative integer exponent required")
        out = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        if self.im == 0:
            return _qstr(self.re)
        if self.re == 0:
            return _qstr(self.im) + "i"
        sign = "-" if self.im < 0 else "+"
        return "(%s%s%si)" % (_qstr(self.re), sign, _qstr(abs(self.im)))

    def __repr__(self):
        return "GaussianRational(%s)" % self


def _parse_gq(text):
    """Parse ``"3/10"``, ``"-2i"``, ``"1/2+3/4i"`` (parentheses optional)."""
    s = text.strip().replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError("empty number")
    if s.endswith("i"):
        body = s[:-1]
        # split at the last sign that is not the leading one
        cut = max(body.rfind("+", 1), body.rfind("-", 1))
        if cut > 0 and body[cut - 1] not in "eE":
            re_part, im_part = body[:cut], body[cut:]
        else:
            re_part, im_part = "0", body
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        return Fraction(re_part), Fraction(im_part)
    return Fraction(s), 0


ZERO_Q = GaussianRational(0)
ONE_Q = GaussianRational(1)


class Scalar:
    """Polynomial in ``eps`` with exact Gaussian rational coefficients.

    ``coeffs`` maps an exponent of eps to a nonzero GaussianRational.
    Instances are immutable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                if not isinstance(k, int) or k < 0:
                    raise ValueError("eps exponents must be non-negative integers")
                v = GaussianRational.coerce(v)
                if v:
                    c[k] = v
        self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c):
        s = cls.__new__(cls)
        s._c = c
        s._hash = None
        return s

    @classmethod
    def const(cls, value):
        return cls({0: value})

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Scalar):
            return value
        return cls({0: value})

    @property
    def coeffs(self):
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    @property
    def degree(self):
        return max(self._c) if self._c else -1

    def coefficient(self, k):
        return self._c.get(k, ZERO_Q)

    def is_constant(self):
        return not self._c or set(self._c) == {0}

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self._c == other._c
        if isinstance(other, (GaussianRational, Rational)):
            return self == Scalar.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset((k, (v.re, v.im)) for k, v in self._c.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, Scalar):
            if not isinstance(other, (GaussianRational, Rational)):
                return NotImplemented
            other = Scalar.coerce(other)
        c = dict(self._c)
        for k, v in other._c.items():
            w = c.get(k)
            if w is None:
                c[k] = v
            else:
                w = w + v
                if w:
                    c[k] = w
                else:
                    del c[k]
        return Scalar._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, (Scalar, GaussianRational, Rational)):
            return NotImplemented
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, int) and not isinstance(other, bool):
                if other == 1:
                    return self
                if other == 0:
                    return ZERO
                return Scalar._raw({k: v * other for k, v in self._c.items()})
            if not isinstance(other, (GaussianRational, Rational)):
                return NotImplemented
            other = Scalar.coerce(other)
        a, b = self._c, other._c
        if len(a) == 1 and len(b) == 1:
            (i, x), = a.items()
            (j, y), = b.items()
            return Scalar._raw({i + j: x * y})
        c = {}
        for i, x in a.items():
            for j, y in b.items():
                k = i + j
                w = c.get(k)
                c[k] = x * y if w is None else w + x * y
        return Scalar._raw({k: v for k, v in c.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("non-negative integer exponent required")
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def substitute(self, eps):
        """Exact value at a Gaussian rational eps."""
        eps = GaussianRational.coerce(eps)
        out = ZERO_Q
        for k, v in self._c.items():
            out = out + v * eps ** k
        return out

    def evaluate(self, eps):
        """Floating point value at a numeric (complex) eps."""
        eps = complex(eps)
        return sum((complex(v) * eps ** k for k, v in self._c.items()), 0j)

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return "Scalar(%s)" % format_scalar(self)


def _eps_str(k):
    if k == 0:
        return ""
    if k == 1:
        return "eps"
    return "eps^%d" % k


def format_scalar(s):
    if not s:
        return "0"
    parts = []
    for k, v in sorted(s._c.items()):
        e = _eps_str(k)
        if v == 1 and e:
            body = e
        elif v == -1 and e:
            body = "-" + e
        else:
            body = str(v) + (" " + e if e else "")
        parts.append(body)
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


ZERO = Scalar()
ONE = Scalar({0: 1})
EPS = Scalar({1: 1})
