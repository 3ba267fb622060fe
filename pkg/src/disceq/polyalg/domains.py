"""Coefficient domains: the integers, the rationals and prime fields."""
from __future__ import annotations

from fractions import Fraction
from math import gcd


def gcdex(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


class IntegerRing:
    name = "ZZ"
    is_field = False

    def convert(self, c) -> int:
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"{c} is not an integer")
            return c.numerator
        return int(c)

    def divides(self, d, c) -> bool:
        return c % d == 0

    def divmod(self, c, d):
        # remainder canonical in [0, |d|)
        r = c % abs(d)
        return (c - r) // d, r

    def unit_normal(self, c):
        """Unit ``u`` such that ``u*c`` is the canonical associate."""
        return -1 if c < 0 else 1

    def gcdex(self, a, b):
        return gcdex(a, b)

    def lcm(self, a, b):
        return abs(a * b) // gcd(a, b)

    def size(self, c):
        return abs(c)

    def __repr__(self):
        return "ZZ"

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("ZZ")


class RationalField:
    name = "QQ"
    is_field = True

    def convert(self, c) -> Fraction:
        return Fraction(c)

    def divides(self, d, c) -> bool:
        return d != 0

    def divmod(self, c, d):
        return c / d, Fraction(0)

    def unit_normal(self, c):
        return 1 / c

    def gcdex(self, a, b):
        return Fraction(1), 1 / a, Fraction(0)

    def lcm(self, a, b):
        return Fraction(1)

    def size(self, c):
        return 0

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    is_field = True

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"

    def convert(self, c) -> int:
        if isinstance(c, Fraction):
            return c.numerator * pow(c.denominator, -1, self.p) % self.p
        return int(c) % self.p

    def divides(self, d, c) -> bool:
        return d % self.p != 0

    def divmod(self, c, d):
        return c * pow(d, -1, self.p) % self.p, 0

    def unit_normal(self, c):
        return pow(c, -1, self.p)

    def gcdex(self, a, b):
        return 1, pow(a, -1, self.p), 0

    def lcm(self, a, b):
        return 1

    def size(self, c):
        return 0

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


ZZ = IntegerRing()
QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)
