"""Finitely presented domains A = ZZ[X_1..X_r]/I and their fraction fields.

Elements of A are kept in canonical form: the remainder modulo a strong
Groebner basis of I over ZZ (grevlex), so equality is a dictionary
comparison.  Fractions are never reduced to lowest terms; equality of
fractions is decided by cross-multiplication.

Primality of I is an input contract and is not checked, apart from the
cheap necessary test in :meth:`RingPresentation.looks_prime`.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import CharacteristicError, OwnerMismatch, ParseError
from .polyalg.domains import ZZ
from .polyalg.groebner import IdealBasis, ideal_member
from .polyalg.mpoly import GREVLEX, MPoly, parse_poly, split_fraction


class RingPresentation:
    """ZZ[names]/(relations), validated to have characteristic zero."""

    def __init__(self, names, relations=()):
        self.var_names = tuple(names)
        if len(set(self.var_names)) != len(self.var_names):
            raise ParseError("duplicate variable names")
        self.var_count = len(self.var_names)
        rels = []
        for f in relations:
            if isinstance(f, str):
                f = parse_poly(f, self.var_names)
            if f.nvars != self.var_count:
                raise ParseError("relation uses the wrong number of variables")
            if f.is_zero():
                raise ParseError("relations must be nonzero polynomials")
            rels.append(f.with_order(GREVLEX))
        self.relations = tuple(rels)
        self._ideal = IdealBasis(self.relations, self.var_count, ZZ, GREVLEX)
        a = self._ideal.integer_generator()
        if a == 1:
            raise CharacteristicError("1 lies in the relation ideal: the ring is zero")
        if a != 0:
            raise CharacteristicError(f"relation ideal contains {a}: characteristic is not zero")
        self._colon_cache = {}

    # -- basic structure -------------------------------------------------------
    @property
    def cached_gb(self):
        return self._ideal.polys

    @property
    def ideal(self) -> IdealBasis:
        return self._ideal

    @property
    def is_integers(self) -> bool:
        return self.var_count == 0 and not self.relations

    def __eq__(self, other):
        return (isinstance(other, RingPresentation) and self.var_names == other.var_names
                and set(self.cached_gb) == set(other.cached_gb))

    def __hash__(self):
        return hash((self.var_names, frozenset(self.cached_gb)))

    def __repr__(self):
        if self.is_integers:
            return "RingPresentation(ZZ)"
        rels = ", ".join(r.fmt(self.var_names) for r in self.relations)
        return f"RingPresentation(ZZ[{', '.join(self.var_names)}]/({rels}))"

    def looks_prime(self) -> bool:
        """Cheap necessary condition for primality of I.

        Only decides anything for a single relation: it must not factor
        into two non-constant factors over QQ.
        """
        if len(self.relations) != 1:
            return True
        import sympy
        syms = sympy.symbols(self.var_names) if self.var_count > 1 else [sympy.Symbol(self.var_names[0])]
        expr = sympy.sympify(self.relations[0].fmt(self.var_names).replace("^", "**"),
                             locals={n: s for n, s in zip(self.var_names, syms)})
        _, factors = sympy.factor_list(expr)
        nonconst = sum(e for f, e in factors if f.free_symbols)
        return nonconst <= 1

    # -- elements ----------------------------------------------------------------
    def poly(self, text) -> MPoly:
        return parse_poly(text, self.var_names)

    def canonical(self, f: MPoly) -> MPoly:
        return self._ideal.normal_form(f)

    def elem(self, x) -> "RingElem":
        if isinstance(x, RingElem):
            if x.owner is not self and x.owner != self:
                raise OwnerMismatch("element belongs to another ring")
            return x
        if isinstance(x, str):
            x = self.poly(x)
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"{x} is not in the ring")
            x = x.numerator
        if isinstance(x, int):
            x = MPoly.const(x, self.var_count)
        return RingElem(self, self.canonical(x.with_order(GREVLEX)))

    def zero(self):
        return self.elem(0)

    def one(self):
        return self.elem(1)

    def gens(self):
        return [self.elem(MPoly.var(i, self.var_count)) for i in range(self.var_count)]

    def frac(self, num, den=1) -> "FracElem":
        if isinstance(num, FracElem) and den == 1:
            if num.num.owner is not self and num.num.owner != self:
                raise OwnerMismatch("fraction belongs to another ring")
            return num
        if isinstance(num, Fraction) and den == 1:
            num, den = num.numerator, num.denominator
        if isinstance(num, str) and den == 1:
            return self.parse_frac(num)
        return FracElem(self.elem(num), self.elem(den))

    def parse_frac(self, text: str) -> "FracElem":
        num, den = split_fraction(str(text))
        return FracElem(self.elem(num), self.elem(den if den is not None else "1"))

    # -- division in A -------------------------------------------------------------
    def _colon_basis(self, den: MPoly):
        key = den
        hit = self._colon_cache.get(key)
        if hit is None:
            gens = [den] + list(self.cached_gb)
            hit = IdealBasis(gens, self.var_count, ZZ, GREVLEX)
            self._colon_cache[key] = hit
        return hit

    def divide(self, num: "RingElem", den: "RingElem"):
        """``h`` with ``h*den == num`` in A, or ``None``."""
        if den.is_zero():
            raise ZeroDivisionError("division by zero in ring")
        if num.is_zero():
            return self.zero()
        d, n = den.rep, num.rep
        if d.is_constant():
            c = int(d.constant_value())
            if all(v % c == 0 for v in n.terms.values()):
                return RingElem(self, self.canonical(
                    MPoly({m: v // c for m, v in n.terms.items()}, n.nvars)))
            if self.is_integers:
                return None
        if not self._colon_basis(d).contains(n):
            return None
        cof = ideal_member(n, [d] + list(self.cached_gb))
        return self.elem(cof[0])


class RingElem:
    """Element of a presented ring, stored as its canonical remainder."""

    __slots__ = ("owner", "rep")

    def __init__(self, owner: RingPresentation, rep: MPoly):
        self.owner = owner
        self.rep = rep

    def _coerce(self, other):
        if isinstance(other, RingElem):
            if other.owner is not self.owner and other.owner != self.owner:
                raise OwnerMismatch("elements of different rings")
            return other
        if isinstance(other, (int, str, MPoly)):
            return self.owner.elem(other)
        if isinstance(other, Fraction) and other.denominator == 1:
            return self.owner.elem(other.numerator)
        return None

    def __add__(self, other):
        if isinstance(other, FracElem):
            return NotImplemented
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RingElem(self.owner, self.owner.canonical(self.rep + o.rep))

    __radd__ = __add__

    def __neg__(self):
        return RingElem(self.owner, -self.rep)

    def __sub__(self, other):
        if isinstance(other, FracElem):
            return NotImplemented
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RingElem(self.owner, self.owner.canonical(self.rep - o.rep))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, FracElem):
            return NotImplemented
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RingElem(self.owner, self.owner.canonical(self.rep * o.rep))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = self.owner.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, FracElem):
            return self.owner.frac(self) / other
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FracElem(self, o)

    def __eq__(self, other):
        if isinstance(other, FracElem):
            return other == self
        try:
            o = self._coerce(other)
        except OwnerMismatch:
            return False
        if o is None:
            return NotImplemented
        return self.rep == o.rep

    def __hash__(self):
        return hash(self.rep)

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def __bool__(self):
        return not self.rep.is_zero()

    def __int__(self):
        if not self.rep.is_constant():
            raise ValueError(f"{self} is not an integer constant")
        return int(self.rep.constant_value())

    def sort_key(self):
        return self.rep.sort_key()

    def fmt(self) -> str:
        return self.rep.fmt(self.owner.var_names)

    __str__ = fmt

    def __repr__(self):
        return f"RingElem({self.fmt()!r})"


class FracElem:
    """``num/den`` with ``den`` nonzero in A."""

    __slots__ = ("num", "den")
    __hash__ = None

    def __init__(self, num: RingElem, den: RingElem):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.owner is not den.owner and num.owner != den.owner:
            raise OwnerMismatch("numerator and denominator in different rings")
        # strip a common integer content and fix the sign of the denominator
        g = gcd(num.rep.content(), den.rep.content())
        if den.rep.leading_coefficient() < 0:
            g = -g
        if g not in (0, 1):
            A = num.owner
            num = RingElem(A, MPoly({m: c // g for m, c in num.rep.terms.items()}, num.rep.nvars))
            den = RingElem(A, MPoly({m: c // g for m, c in den.rep.terms.items()}, den.rep.nvars))
            num = RingElem(A, A.canonical(num.rep))
            den = RingElem(A, A.canonical(den.rep))
        self.num = num
        self.den = den

    @property
    def owner(self):
        return self.num.owner

    def _coerce(self, other):
        if isinstance(other, FracElem):
            if other.owner is not self.owner and other.owner != self.owner:
                raise OwnerMismatch("fractions over different rings")
            return other
        if isinstance(other, RingElem):
            return FracElem(other, self.owner.one())
        if isinstance(other, (int, str, Fraction)):
            return self.owner.frac(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.den == self.den:
            return FracElem(self.num + o.num, self.den)
        return FracElem(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return FracElem(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FracElem(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return FracElem(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return FracElem(self.num ** k, self.den ** k)

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except OwnerMismatch:
            return False
        if o is None:
            return NotImplemented
        return (self.num * o.den) == (o.num * self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def fmt(self) -> str:
        if self.den == 1:
            return self.num.fmt()
        n, d = self.num.fmt(), self.den.fmt()
        if len(self.num.rep.terms) > 1:
            n = f"({n})"
        if len(self.den.rep.terms) > 1:
            d = f"({d})"
        return f"{n} / {d}"

    __str__ = fmt

    def __repr__(self):
        return f"FracElem({self.fmt()!r})"


# ---------------------------------------------------------------------------
# operations

def make_ring(names=(), relations=()) -> RingPresentation:
    """Build and validate ``ZZ[names]/(relations)`` from polynomial texts."""
    return RingPresentation(names, relations)


INTEGERS = None


def integers() -> RingPresentation:
    global INTEGERS
    if INTEGERS is None:
        INTEGERS = RingPresentation((), ())
    return INTEGERS


def elems_equal(a: RingElem, b: RingElem) -> bool:
    if a.owner is not b.owner and a.owner != b.owner:
        raise OwnerMismatch("elements of different rings")
    return a.rep == b.rep


def frac_in_ring(A: RingPresentation, x: FracElem):
    """The element ``h`` of A with ``h*den == num``, or ``None`` if ``x`` is not in A."""
    x = A.frac(x)
    return A.divide(x.num, x.den)


# ---------------------------------------------------------------------------
# base-field adapters: how algorithms over K see field and ring elements

class RationalBase:
    """K = QQ for A = ZZ: field elements are Fractions, ring elements ints."""

    is_rational = True

    def __init__(self, ring: RingPresentation):
        self.ring = ring

    def __call__(self, x):
        if isinstance(x, FracElem):
            return Fraction(int(x.num), int(x.den))
        if isinstance(x, RingElem):
            return Fraction(int(x))
        if isinstance(x, str):
            return self(self.ring.parse_frac(x))
        return Fraction(x)

    def to_ring(self, x):
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else None

    def from_ring(self, a):
        return Fraction(int(a))

    def ring_elem(self, a):
        return int(a)

    def to_frac(self, x):
        x = Fraction(x)
        return self.ring.frac(x.numerator, x.denominator)

    def key(self, x):
        return Fraction(x)

    def sort_key(self, x):
        return Fraction(x)

    def fmt(self, x) -> str:
        return str(Fraction(x))

    def fmt_ring(self, a) -> str:
        return str(int(a))


class FractionBase:
    """K = Frac(A) for a general presented ring."""

    is_rational = False

    def __init__(self, ring: RingPresentation):
        self.ring = ring

    def __call__(self, x):
        return self.ring.frac(x)

    def to_ring(self, x):
        return frac_in_ring(self.ring, self.ring.frac(x))

    def from_ring(self, a):
        return self.ring.frac(self.ring.elem(a))

    def ring_elem(self, a):
        return self.ring.elem(a)

    def to_frac(self, x):
        return self.ring.frac(x)

    def key(self, x):
        x = self.ring.frac(x)
        if x.den == 1:
            return ("ring", x.num.rep)
        return None

    def sort_key(self, x):
        x = self.ring.frac(x)
        return (x.den.sort_key(), x.num.sort_key())

    def fmt(self, x) -> str:
        return self.ring.frac(x).fmt()

    def fmt_ring(self, a) -> str:
        return self.ring.elem(a).fmt()


def base_field(A: RingPresentation):
    return RationalBase(A) if A.is_integers else FractionBase(A)
