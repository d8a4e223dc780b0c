"""
Text form of Elements.

    element := ["+"|"-"] term (("+"|"-") term)*
    term    := [scalar ["*"]] symbol ("*" symbol)*  |  scalar
    symbol  := "U^" nat | "U*^" nat | "U'^" nat | "U" | "U*" | "U'"
             | "C(" nat "," nat ")" | "E" | "I"
    scalar  := number ["*"] ["eps" ["^" nat]]  |  "eps" ["^" nat]
    number  := rational | rational "i" | "i" | "(" signed sum of those ")"

``E`` is ``C(0,0)``, ``I`` is ``U^0`` and ``U'`` is accepted as a synonym for
the adjoint ``U*``. Whitespace is ignored.
"""

import re
from fractions import Fraction

from .algebra import Bwd, Corner, Element, Fwd, I, make_symbol, mul
from .scalar import GaussianRational, Scalar


class ParseError(ValueError):
    def __init__(self, message, token, pos):
        super().__init__("%s at position %d (token %r)" % (message, pos, token))
        self.token = token
        self.pos = pos


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<corner>C\(\s*\d+\s*,\s*\d+\s*\))
  | (?P<bwd>U[*']\^\d+|U'|U\*(?!\s*[UCEIe(0-9i]))
  | (?P<fwd>U\^\d+|U)
  | (?P<E>E)
  | (?P<I>I)
  | (?P<eps>eps(?:\^\d+)?)
  | (?P<imag>\d+(?:/\d+)?i|i)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<op>[-+*()])
""", re.VERBOSE)


def tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError("unexpected character", text[pos], pos)
        kind = m.lastgroup
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


def _symbol_from_token(kind, tok):
    if kind == "E":
        return Corner(0, 0)
    if kind == "I":
        return Fwd(0)
    if kind == "corner":
        a, b = re.findall(r"\d+", tok)
        return make_symbol("corner", int(a), int(b))
    n = int(tok.split("^")[1]) if "^" in tok else 1
    return make_symbol("fwd" if kind == "fwd" else "bwd", n)


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, msg):
        kind, tok, pos = self.peek()
        raise ParseError(msg, tok or "<end>", pos)

    def element(self):
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        acc = self.term().scale(sign)
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
            acc = acc + self.term().scale(sign)
        if self.peek()[0] != "end":
            self.fail("expected '+', '-' or end of input")
        return acc

    def number(self):
        kind, tok, pos = self.peek()
        if kind == "num":
            self.take()
            return GaussianRational(Fraction(tok))
        if kind == "imag":
            self.take()
            body = tok[:-1]
            return GaussianRational(0, Fraction(body) if body else 1)
        if kind == "op" and tok == "(":
            self.take()
            acc = GaussianRational(0)
            first = True
            while True:
                kind, tok, pos = self.peek()
                sign = 1
                if kind == "op" and tok in "+-":
                    self.take()
                    sign = -1 if tok == "-" else 1
                elif not first:
                    break
                if self.peek()[0] not in ("num", "imag"):
                    self.fail("expected a number inside parentheses")
                acc = acc + self.number() * sign
                first = False
            if self.peek()[1] != ")":
                self.fail("expected ')'")
            self.take()
            return acc
        return None

    def scalar(self):
        num = self.number()
        if num is not None and self.peek()[:2] == ("op", "*") \
                and self.toks[self.i + 1][0] == "eps":
            self.take()
        kind, tok, pos = self.peek()
        k = None
        if kind == "eps":
            self.take()
            k = int(tok.split("^")[1]) if "^" in tok else 1
        if num is None and k is None:
            return None
        return Scalar({k or 0: num if num is not None else 1})

    def symbol(self):
        kind, tok, pos = self.peek()
        if kind in ("corner", "bwd", "fwd", "E", "I"):
            self.take()
            try:
                return _symbol_from_token(kind, tok)
            except ValueError as exc:
                raise ParseError(str(exc), tok, pos) from None
        return None

    def term(self):
        coeff = self.scalar()
        if coeff is not None and self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            sym = self.symbol()
            if sym is None:
                self.fail("expected a symbol after '*'")
        else:
            sym = self.symbol()
        if sym is None:
            if coeff is None:
                self.fail("expected a scalar or symbol")
            return I.scale(coeff)
        acc = Element.symbol(sym)
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            nxt = self.symbol()
            if nxt is None:
                self.fail("expected a symbol after '*'")
            acc = mul(acc, Element.symbol(nxt))
        return acc.scale(coeff) if coeff is not None else acc


def parse_element(text):
    """Parse the text form into an Element; raises :class:`ParseError`."""
    return _Parser(text).element()


def format_symbol(sym):
    if type(sym) is Fwd:
        return "I" if sym.n == 0 else "U^%d" % sym.n
    if type(sym) is Bwd:
        return "U*^%d" % sym.n
    return "C(%d,%d)" % (sym.a, sym.b)


def _format_term(v, k, sym):
    """Returns (negative, body) for one ``coefficient * eps^k * symbol`` term."""
    parts = []
    neg = False
    if v.im == 0 and v.re < 0:
        neg = True
        v = -v
    elif v.re == 0 and v.im < 0:
        neg = True
        v = -v
    if v != 1:
        parts.append(str(v))
    if k == 1:
        parts.append("eps")
    elif k > 1:
        parts.append("eps^%d" % k)
    if sym != Fwd(0) or not parts:
        parts.append(format_symbol(sym))
    return neg, " ".join(parts)


def format_element(x):
    """Canonical text: symbols in canonical order, eps powers ascending."""
    if not x:
        return "0"
    out = []
    for sym, c in x.items():
        for k, v in c.items():
            out.append(_format_term(v, k, sym))
    neg, body = out[0]
    text = ("-" if neg else "") + body
    for neg, body in out[1:]:
        text += (" - " if neg else " + ") + body
    return text

