"""Linear algebra over K and the algebras K[X]/(M) built on it.

One class serves both the etale algebra Omega = K[X]/(P) and the
splitting field G = K[u]/(Q).  Field elements of K are handled through a
base adapter (``rings.RationalBase`` or ``rings.FractionBase``) so the same
code runs with plain ``Fraction`` values over QQ.
"""
from __future__ import annotations

from ..errors import DegenerateInput, DimensionMismatch, NonMonic
from ..polyalg.univariate import charpoly, discriminant
from ..rings import base_field


def is_zero(x) -> bool:
    return x == 0


# ---------------------------------------------------------------------------
# Gaussian elimination over a field

def rref(M):
    """Reduced row echelon form (first-nonzero pivoting) and pivot columns."""
    R = [list(row) for row in M]
    rows = len(R)
    cols = len(R[0]) if R else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        k = next((i for i in range(r, rows) if not is_zero(R[i][c])), None)
        if k is None:
            continue
        R[r], R[k] = R[k], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(rows):
            if i != r and not is_zero(R[i][c]):
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M) -> int:
    return len(rref(M)[1])


def column_basis(M):
    """Pivot columns of M and the coefficients expressing every column on them.

    Returns ``(pivots, C)`` with ``column j == sum_k C[k][j] * column pivots[k]``.
    """
    R, pivots = rref(M)
    return pivots, [R[k] for k in range(len(pivots))]


def solve_field(M, b):
    """One solution of ``M x = b`` over the field, or ``None``."""
    n = len(M[0]) if M else 0
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(aug)
    if n in pivots:
        return None
    x = [0] * n
    for k, c in enumerate(pivots):
        x[c] = R[k][n]
    return x


# ---------------------------------------------------------------------------
# univariate polynomials over a field (lists, lowest degree first)

def upoly_trim(a):
    a = list(a)
    while a and is_zero(a[-1]):
        a.pop()
    return a


def upoly_divmod(a, b):
    a, b = upoly_trim(a), upoly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = 1 / b[-1]
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    while len(r) >= len(b):
        c = r[-1] * inv
        k = len(r) - len(b)
        q[k] = c
        for i, bc in enumerate(b):
            r[k + i] = r[k + i] - c * bc
        r = upoly_trim(r[:-1] if is_zero(r[-1]) else r)
    return q, r


def upoly_monic(a):
    a = upoly_trim(a)
    inv = 1 / a[-1]
    return [x * inv for x in a]


def upoly_gcd(a, b):
    a, b = upoly_trim(a), upoly_trim(b)
    while b:
        _, r = upoly_divmod(a, b)
        a, b = b, r
    return upoly_monic(a) if a else []


# ---------------------------------------------------------------------------
# quotient algebras

class QuotientAlgebra:
    """K[X]/(modulus) for a monic modulus over K."""

    def __init__(self, K, modulus, var: str = "X"):
        self.K = K
        mod = [K(c) for c in modulus]
        if len(mod) < 2:
            raise DimensionMismatch("modulus must have positive degree")
        if not (mod[-1] == 1):
            raise NonMonic("modulus is not monic")
        self.modulus = tuple(mod)
        self.degree = len(mod) - 1
        self.var = var
        self._zero = K(0)

    # construction ---------------------------------------------------------
    def elem(self, coords) -> "QElem":
        if isinstance(coords, QElem):
            if coords.owner is not self:
                raise DimensionMismatch("element of another algebra")
            return coords
        if not isinstance(coords, (list, tuple)):
            return self.scalar(coords)
        return QElem(self, self._reduce([self.K(c) for c in coords]))

    def scalar(self, c) -> "QElem":
        return QElem(self, (self.K(c),) + (self._zero,) * (self.degree - 1))

    def zero(self):
        return self.scalar(0)

    def one(self):
        return self.scalar(1)

    def gen(self):
        if self.degree == 1:
            return self.scalar(-self.modulus[0])
        return self.elem([0, 1])

    def basis(self):
        g, out, x = self.gen(), [], self.one()
        for _ in range(self.degree):
            out.append(x)
            x = x * g
        return out

    def _reduce(self, c):
        c = list(c)
        d = self.degree
        mod = self.modulus
        for k in range(len(c) - 1, d - 1, -1):
            top = c[k]
            if is_zero(top):
                continue
            for i in range(d):
                c[k - d + i] = c[k - d + i] - top * mod[i]
        c = c[:d]
        while len(c) < d:
            c.append(self._zero)
        return tuple(c)

    def evaluate_poly(self, coeffs, x: "QElem") -> "QElem":
        """Horner evaluation of a polynomial with K (or algebra) coefficients at x."""
        acc = self.zero()
        for c in reversed(list(coeffs)):
            acc = acc * x + c
        return acc

    # linear structure ---------------------------------------------------------
    def mult_matrix(self, a: "QElem"):
        """Matrix of multiplication by ``a`` on the power basis (columns = images)."""
        cols = []
        x = a
        g = self.gen()
        for _ in range(self.degree):
            cols.append(x.coords)
            x = x * g
        d = self.degree
        return [[cols[j][i] for j in range(d)] for i in range(d)]

    def charpoly(self, a: "QElem"):
        """Characteristic polynomial of ``a``, lowest degree first."""
        return list(reversed(charpoly(self.mult_matrix(a))))

    def is_separable(self) -> bool:
        return not is_zero(discriminant(list(self.modulus)))

    def fmt(self, a: "QElem", var: str | None = None) -> str:
        var = var or self.var
        terms = []
        for i, c in enumerate(a.coords):
            if is_zero(c):
                continue
            s = self.K.fmt(c)
            neg = s.startswith("-") and not any(op in s[1:] for op in (" + ", " - "))
            if neg:
                s = s[1:]
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if i == 0:
                body = s
            elif s == "1":
                body = mono
            else:
                if any(op in s for op in (" + ", " - ")):
                    s = f"({s})"
                body = f"{s}*{mono}"
            terms.append((neg, body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] else "") + terms[0][1]
        for neg, body in terms[1:]:
            out += (" - " if neg else " + ") + body
        return out


class QElem:
    __slots__ = ("owner", "coords")

    def __init__(self, owner: QuotientAlgebra, coords):
        self.owner = owner
        self.coords = tuple(coords)

    def _coerce(self, other):
        if isinstance(other, QElem):
            if other.owner is not self.owner:
                raise DimensionMismatch("elements of different algebras")
            return other
        try:
            return self.owner.scalar(other)
        except (TypeError, ValueError):
            return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QElem(self.owner, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return QElem(self.owner, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QElem(self.owner, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QElem):
            try:
                c = self.owner.K(other)
            except (TypeError, ValueError):
                return NotImplemented
            return QElem(self.owner, tuple(a * c for a in self.coords))
        o = self._coerce(other)
        d = self.owner.degree
        prod = [self.owner._zero] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if is_zero(a):
                continue
            for j, b in enumerate(o.coords):
                if not is_zero(b):
                    prod[i + j] = prod[i + j] + a * b
        return QElem(self.owner, self.owner._reduce(prod))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out, base = self.owner.one(), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "QElem":
        d = self.owner.degree
        e0 = [self.owner.K(1)] + [self.owner._zero] * (d - 1)
        x = solve_field(self.owner.mult_matrix(self), e0)
        if x is None:
            raise ZeroDivisionError("element is not invertible")
        return QElem(self.owner, x)

    def __truediv__(self, other):
        if isinstance(other, QElem):
            return self * other.inverse()
        return self * (1 / self.owner.K(other))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        o = self._coerce(other) if not isinstance(other, QElem) or other.owner is self.owner else None
        if o is None:
            return False
        return all(a == b for a, b in zip(self.coords, o.coords))

    def __hash__(self):
        return hash(self.coords)

    def key(self):
        return tuple(self.owner.K.key(c) for c in self.coords)

    def is_zero(self) -> bool:
        return all(is_zero(c) for c in self.coords)

    def in_base(self) -> bool:
        return all(is_zero(c) for c in self.coords[1:])

    def base_value(self):
        if not self.in_base():
            raise ValueError("element does not lie in the base field")
        return self.coords[0]

    def charpoly(self):
        return self.owner.charpoly(self)

    def trace(self):
        return -self.charpoly()[-2]

    def norm(self):
        c = self.charpoly()[0]
        return c if self.owner.degree % 2 == 0 else -c

    def fmt(self, var: str | None = None) -> str:
        return self.owner.fmt(self, var)

    __str__ = fmt

    def __repr__(self):
        return f"QElem({self.fmt()!r})"


class EtaleAlgebra(QuotientAlgebra):
    """Omega = K[X]/(P) for a monic separable P of degree n >= 2 over K = Frac(A)."""

    def __init__(self, A, min_poly, var: str = "theta"):
        K = base_field(A)
        super().__init__(K, min_poly, var)
        self.ring = A
        if self.degree < 2:
            raise DimensionMismatch("etale algebra needs degree at least 2")
        if not self.is_separable():
            raise DegenerateInput("P has a repeated zero")

    @property
    def min_poly(self):
        return self.modulus

    @property
    def theta(self):
        return self.gen()

    @property
    def n(self) -> int:
        return self.degree
