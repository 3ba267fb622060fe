"""Integral closure of ZZ in a number field G = QQ[u]/(Q).

The fast path is sympy's round-two algorithm.  When it fails, a direct
enlargement is used: a lattice L of integral elements equals the ring of
integers iff, for every prime p with p^2 | disc(L), no element of
(1/p)L outside L is integral.  Those candidates are scanned exhaustively,
which is affordable while p^d stays small.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import gcd, lcm

import sympy

from ..polyalg.univariate import det
from .algebra import QElem, QuotientAlgebra

MAX_SCAN = 200_000


def _is_integral(x) -> bool:
    return all(Fraction(c).denominator == 1 for c in x.charpoly())


def lattice_basis(vectors, dim):
    """A ZZ-basis of the ZZ-span of rational vectors (Hermite form, rows)."""
    D = lcm(*(Fraction(c).denominator for v in vectors for c in v)) if vectors else 1
    rows = [[int(Fraction(c) * D) for c in v] for v in vectors]
    basis = []
    col = 0
    while rows and col < dim:
        rows = [r for r in rows if any(r)]
        piv = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        if not piv:
            col += 1
            continue
        while len(piv) > 1:
            piv.sort(key=lambda r: abs(r[col]))
            head = piv[0]
            new = [head]
            for r in piv[1:]:
                q = r[col] // head[col]
                r2 = [a - q * b for a, b in zip(r, head)]
                (new if r2[col] != 0 else rest).append(r2)
            piv = new
        head = piv[0]
        if head[col] < 0:
            head = [-a for a in head]
        basis.append(head)
        rows = rest
        col += 1
    # reduce entries above the pivots
    for i in range(len(basis)):
        c = next(k for k, a in enumerate(basis[i]) if a)
        for j in range(i):
            q = basis[j][c] // basis[i][c]
            if q:
                basis[j] = [a - q * b for a, b in zip(basis[j], basis[i])]
    return [[Fraction(a, D) for a in r] for r in basis]


def lattice_disc(G: QuotientAlgebra, basis) -> Fraction:
    elems = [b if isinstance(b, QElem) else G.elem(list(b)) for b in basis]
    T = [[(x * y).trace() for y in elems] for x in elems]
    return Fraction(det(T))


def _round_two(G: QuotientAlgebra):
    from sympy.polys.numberfields.basis import round_two
    T = sympy.Poly([int(c) for c in reversed(G.modulus)], sympy.Symbol("x"))
    ZK, _ = round_two(T)
    mat = ZK.matrix.to_Matrix()
    den = int(ZK.denom)
    return [[Fraction(int(mat[i, j]), den) for i in range(mat.shape[0])]
            for j in range(mat.shape[1])]


def _enlarge(G: QuotientAlgebra, basis):
    d = G.degree
    while True:
        disc = lattice_disc(G, basis)
        grown = False
        for p, e in sorted(sympy.factorint(int(disc)).items()):
            if e < 2:
                continue
            if p ** d > MAX_SCAN:
                return basis, False
            elems = [b if isinstance(b, QElem) else G.elem(list(b)) for b in basis]
            for coeffs in product(range(p), repeat=d):
                if not any(coeffs):
                    continue
                x = G.zero()
                for c, b in zip(coeffs, elems):
                    if c:
                        x = x + b * c
                y = x * Fraction(1, p)
                if _is_integral(y):
                    basis = lattice_basis(list(basis) + [list(y.coords)], d)
                    grown = True
                    break
            if grown:
                break
        if not grown:
            return basis, True


def ring_of_integers(G: QuotientAlgebra, extra=()):
    """``(basis elements, certified)`` for the integral closure of ZZ in G.

    ``extra`` may list known integral elements (e.g. roots) to seed the
    enlargement.  ``certified`` is False only if some prime was too large
    to scan.
    """
    if any(Fraction(c).denominator != 1 for c in G.modulus):
        raise ValueError("defining polynomial must have integer coefficients")
    d = G.degree
    if d == 1:
        return (G.one(),), True
    try:
        basis = _round_two(G)
        return tuple(G.elem(b) for b in basis), True
    except Exception:  # sympy's implementation fails on some fields
        pass
    seeds = [list(b.coords) for b in G.basis()]
    for x in extra:
        if _is_integral(x):
            seeds.append(list(x.coords))
    basis = lattice_basis(seeds, d)
    basis, ok = _enlarge(G, basis)
    return tuple(G.elem(list(b)) for b in basis), ok


__all__ = ["ring_of_integers", "lattice_basis", "lattice_disc", "gcd"]
