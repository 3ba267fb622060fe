"""Affine Hilbert function data of an ideal over a prime field.

Everything is read off the leading-monomial ideal of a grevlex basis:
the affine Hilbert function counts standard monomials of degree <= m.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..errors import DomainMismatch
from .domains import PrimeField
from .groebner import groebner
from .mpoly import GREVLEX, mono_divides, mono_lcm, mono_sub


@dataclass(frozen=True)
class HilbertData:
    finite: bool
    dimension: int | None
    regularity: int
    hilbert_poly: tuple  # coefficients in m, lowest degree first
    standard_monomials: tuple
    leading_monomials: tuple
    p: int
    nvars: int
    numerator: tuple  # of the graded Hilbert series of the leading-term ideal

    def hilbert_function(self, m: int) -> int:
        """dim of the residue classes of polynomials of degree <= m."""
        return _affine_count(self.numerator, self.nvars, m)


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


def _numerator(gens):
    """Numerator N(t) of the graded Hilbert series N(t)/(1-t)^r of S/(gens)."""
    gens = _minimalize(gens)
    if not gens:
        return [1]
    *rest, last = gens
    colon = _minimalize([mono_sub(mono_lcm(g, last), last) for g in rest])
    if any(sum(c) == 0 for c in colon):
        shifted = [0]
    else:
        shifted = _numerator(colon)
    shifted = [0] * sum(last) + shifted
    return _poly_sub(_numerator(rest), shifted)


def _affine_count(num, r, m):
    # coefficient of t^m in N(t) / (1-t)^(r+1)
    return sum(c * comb(m - i + r, r) for i, c in enumerate(num) if m >= i)


def _interpolate(points):
    """Coefficients (low first) of the polynomial through ``points`` [(x, y), ...]."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k in range(n):
            coeffs[k] += yi * basis[k] / denom
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _eval(coeffs, x):
    return sum(c * x ** k for k, c in enumerate(coeffs))


def _standard_monomials(lead, nvars, maxdeg):
    out = []

    def rec(prefix, left):
        if len(prefix) == nvars:
            m = tuple(prefix)
            if not any(mono_divides(g, m) for g in lead):
                out.append(m)
            return
        for e in range(left + 1):
            rec(prefix + [e], left - e)

    rec([], maxdeg)
    out.sort(key=GREVLEX.key)
    return tuple(out)


def hilbert_data(gens, nvars=None, p=None) -> HilbertData:
    gens = [g for g in gens if not g.is_zero()]
    if gens:
        dom = gens[0].domain
        nvars = gens[0].nvars
        if not isinstance(dom, PrimeField):
            raise DomainMismatch("hilbert_data needs polynomials over a prime field")
        p = dom.p
        basis = groebner([g.with_order(GREVLEX) for g in gens])
        lead = _minimalize([b.leading_monomial() for b in basis])
    else:
        if nvars is None:
            raise ValueError("nvars required for the zero ideal")
        p = p or 0
        lead = []
    num = _numerator(lead)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    top = len(num) - 1
    pts = [(top + k, _affine_count(num, nvars, top + k)) for k in range(nvars + 1)]
    poly = _interpolate(pts)
    reg = top
    for m in range(top - 1, -1, -1):
        if _affine_count(num, nvars, m) != _eval(poly, m):
            break
        reg = m
    finite = len(poly) == 1
    if finite:
        dim = int(poly[0])
        std = _standard_monomials(lead, nvars, reg)
        assert len(std) == dim
    else:
        dim, std = None, ()
    return HilbertData(finite, dim, reg, poly, std, tuple(lead), p, nvars, tuple(num))
