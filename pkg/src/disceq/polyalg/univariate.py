"""Univariate tools over any commutative coefficient structure.

Polynomials are coefficient lists, lowest degree first.  Only ring
operations are used (no division), so the same code runs over ZZ, QQ,
finitely presented rings, their fraction fields and number fields.
"""
from __future__ import annotations

from ..errors import NonMonic


def _dot(u, v):
    acc = 0
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def charpoly(M):
    """Berkowitz: coefficients ``[1, c_1, ..., c_n]`` of det(x*I - M), highest first."""
    n = len(M)
    if n == 0:
        return [1]
    a11 = M[0][0]
    R = M[0][1:]
    C = [row[0] for row in M[1:]]
    A1 = [row[1:] for row in M[1:]]
    q = charpoly(A1)
    col = [1, -a11]
    v = C
    for _ in range(n - 1):
        col.append(-_dot(R, v))
        v = [_dot(row, v) for row in A1]
    res = []
    for i in range(n + 1):
        acc = 0
        for j in range(min(i, n - 1) + 1):
            acc = acc + col[i - j] * q[j]
        res.append(acc)
    return res


def det(M):
    n = len(M)
    c = charpoly(M)[n]
    return c if n % 2 == 0 else -c


def derivative(F):
    return [k * F[k] for k in range(1, len(F))]


def sylvester(F, G):
    """Sylvester matrix of F (degree n) and G (degree m), coefficients lowest first."""
    n, m = len(F) - 1, len(G) - 1
    size = n + m
    rows = []
    f_hi = list(reversed(F))
    g_hi = list(reversed(G))
    for i in range(m):
        rows.append([0] * i + f_hi + [0] * (size - i - n - 1))
    for i in range(n):
        rows.append([0] * i + g_hi + [0] * (size - i - m - 1))
    return rows


def resultant(F, G):
    if len(F) - 1 + len(G) - 1 == 0:
        return 1
    return det(sylvester(F, G))


def discriminant(F):
    """``prod_{i<j} (a_i - a_j)^2`` over the roots of the monic polynomial F.

    >>> discriminant([-1, 0, 1])   # X^2 - 1
    4
    """
    if len(F) < 2:
        raise NonMonic("discriminant needs degree >= 1")
    if not (F[-1] == 1):
        raise NonMonic("polynomial is not monic")
    n = len(F) - 1
    r = resultant(F, derivative(F))
    return r if (n * (n - 1) // 2) % 2 == 0 else -r


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def poly_from_roots(roots):
    """Coefficients of prod (X - r), lowest first."""
    out = [1]
    for r in roots:
        out = poly_mul(out, [-r, 1])
    return out


def taylor_shift(F, a):
    """Coefficients of F(X + a)."""
    out = [0]
    for c in reversed(F):
        # out = out*(X + a) + c
        nxt = [0] * (len(out) + 1)
        for k, v in enumerate(out):
            nxt[k] = nxt[k] + v * a
            nxt[k + 1] = nxt[k + 1] + v
        nxt[0] = nxt[0] + c
        out = nxt
    while len(out) > len(F):
        out.pop()
    return out
