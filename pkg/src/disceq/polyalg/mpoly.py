"""Sparse multivariate polynomials over ZZ, QQ and GF(p).

Monomials are exponent tuples; a polynomial is a dict mapping monomials
to nonzero coefficients.  The monomial order only matters for leading
terms and printing, so it travels with the polynomial as a tag.
"""
from __future__ import annotations

import re
from functools import lru_cache

from ..errors import DomainMismatch, ParseError
from .domains import QQ, ZZ, PrimeField

Monomial = tuple


class MonomialOrder:
    """A monomial order given by a sort key; larger key means larger monomial."""

    def __init__(self, name: str, key):
        self.name = name
        self.key = lru_cache(maxsize=None)(key)

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.name == self.name

    def __hash__(self):
        return hash(self.name)


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def _lex_key(e):
    return e


GREVLEX = MonomialOrder("grevlex", _grevlex_key)
LEX = MonomialOrder("lex", _lex_key)


@lru_cache(maxsize=None)
def elim_order(k: int) -> MonomialOrder:
    """Block order: grevlex on the first ``k`` variables, ties broken by grevlex on the rest."""
    return MonomialOrder(f"elim({k})", lambda e: (_grevlex_key(e[:k]), _grevlex_key(e[k:])))


def mono_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class MPoly:
    """Immutable sparse polynomial in ``nvars`` variables."""

    __slots__ = ("domain", "nvars", "order", "terms", "_hash")

    def __init__(self, terms, nvars: int, domain=ZZ, order=GREVLEX):
        self.domain = domain
        self.nvars = nvars
        self.order = order
        mod = getattr(domain, "p", None)
        clean = {}
        for m, c in terms.items():
            if mod is not None:
                c %= mod
            if c:
                clean[m] = c
        self.terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, nvars, domain=ZZ, order=GREVLEX):
        return cls({}, nvars, domain, order)

    @classmethod
    def const(cls, c, nvars, domain=ZZ, order=GREVLEX):
        return cls({(0,) * nvars: domain.convert(c)}, nvars, domain, order)

    @classmethod
    def var(cls, i, nvars, domain=ZZ, order=GREVLEX):
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): domain.convert(1)}, nvars, domain, order)

    def _like(self, terms):
        return MPoly(terms, self.nvars, self.domain, self.order)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.domain != self.domain or other.nvars != self.nvars:
                raise DomainMismatch(
                    f"{self.domain}[{self.nvars}] vs {other.domain}[{other.nvars}]")
            return other
        return MPoly.const(other, self.nvars, self.domain, self.order)

    # basic queries
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, self.domain.convert(0))

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=-1)

    def sorted_terms(self):
        key = self.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def leading_monomial(self):
        return max(self.terms, key=self.order.key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def with_order(self, order):
        return MPoly(self.terms, self.nvars, self.domain, order)

    def change_domain(self, domain):
        return MPoly({m: domain.convert(c) for m, c in self.terms.items()},
                     self.nvars, domain, self.order)

    def content(self) -> int:
        from math import gcd
        g = 0
        for c in self.terms.values():
            g = gcd(g, int(c))
        return g

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return self._like(t)

    __radd__ = __add__

    def __neg__(self):
        return self._like({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = self.domain.convert(other)
            return self._like({m: c * v for m, v in self.terms.items()})
        other = self._coerce(other)
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                t[m] = t.get(m, 0) + c1 * c2
        return self._like(t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = MPoly.const(1, self.nvars, self.domain, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_term(self, mono, c):
        return self._like({mono_add(m, mono): v * c for m, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def evaluate(self, values):
        """Substitute ``values`` (any ring elements supporting + and *) for the variables."""
        total = None
        for m, c in self.terms.items():
            term = c
            for v, e in zip(values, m):
                if e:
                    term = term * (v ** e)
            total = term if total is None else total + term
        return 0 if total is None else total

    def sort_key(self):
        key = self.order.key
        return tuple((key(m), c) for m, c in self.sorted_terms())

    def fmt(self, names=None) -> str:
        if names is None:
            names = default_names(self.nvars)
        if not self.terms:
            return "0"
        out = []
        for m, c in self.sorted_terms():
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in zip(names, m) if e)
            neg = c < 0 if not isinstance(self.domain, PrimeField) else False
            a = -c if neg else c
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            if not out:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return f"MPoly({self.fmt()!r}, {self.domain})"

    __str__ = fmt


def default_names(n: int):
    if n <= 3:
        return ["x", "y", "z"][:n]
    return [f"x{i + 1}" for i in range(n)]


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*^()/]))")


def _tokenize(text: str):
    pos = 0
    toks = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos:].strip()[:1]!r} in {text!r}")
        num, ident, op = m.groups()
        if num is not None:
            toks.append(("num", int(num)))
        elif ident is not None:
            toks.append(("id", ident))
        else:
            toks.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return toks


class _Parser:
    def __init__(self, text, names, domain, order):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.index = {n: k for k, n in enumerate(names)}
        self.n = len(names)
        self.domain = domain
        self.order = order

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def parse(self):
        if not self.toks:
            raise ParseError("empty polynomial text")
        p = self.expr()
        if self.i != len(self.toks):
            raise ParseError(f"trailing input in {self.text!r}")
        return p

    def expr(self):
        p = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self):
        p = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                p = p * self.unary()
            elif kind in ("num", "id") or (kind == "op" and val == "("):
                p = p * self.power()  # juxtaposition, e.g. 2x
            else:
                return p

    def unary(self):
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            p = self.unary()
            return -p if val == "-" else p
        return self.power()

    def power(self):
        base = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, e = self.take()
            if kind != "num":
                raise ParseError(f"exponent must be a nonnegative integer in {self.text!r}")
            return base ** e
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return MPoly.const(val, self.n, self.domain, self.order)
        if kind == "id":
            if val not in self.index:
                raise ParseError(f"unknown variable {val!r} in {self.text!r}")
            return MPoly.var(self.index[val], self.n, self.domain, self.order)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"unexpected token {val!r} in {self.text!r}")


def parse_poly(text: str, names, domain=ZZ, order=GREVLEX) -> MPoly:
    """Parse ``text`` under the shared polynomial grammar.

    >>> parse_poly("u^2 - 4*v", ["u", "v"]).fmt(["u", "v"])
    'u^2 - 4*v'
    """
    if "/" in text:
        raise ParseError(f"division is only allowed at top level of a fraction: {text!r}")
    return _Parser(str(text), list(names), domain, order).parse()


def split_fraction(text: str) -> tuple[str, str | None]:
    """Split ``"num / den"`` at its single top-level slash."""
    depth = 0
    cut = None
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/":
            if depth != 0 or cut is not None:
                raise ParseError(f"fractions allow exactly one top-level '/': {text!r}")
            cut = k
    if cut is None:
        return text, None
    return text[:cut], text[cut + 1:]


def parse_rational_poly(text: str, names, order=GREVLEX) -> MPoly:
    """Parse a polynomial over QQ; a top-level ``/ integer`` is allowed."""
    num, den = split_fraction(str(text))
    p = parse_poly(num, names, QQ, order)
    if den is not None:
        d = parse_poly(den, names, QQ, order)
        if not d.is_constant() or d.is_zero():
            raise ParseError(f"denominator must be a nonzero integer: {text!r}")
        p = p * (1 / d.constant_value())
    return p
