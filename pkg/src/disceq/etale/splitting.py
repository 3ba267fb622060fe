"""Splitting fields, conjugates and discriminants of algebra elements.

The built-in splitting-field construction works over K = QQ.  It adjoins
one root at a time: factor P over the current field by Trager's norm
method, adjoin a root of a nonlinear factor, and collapse the tower to a
single primitive element whose norm polynomial is squarefree.  Rational
factorization and bivariate resultants are delegated to sympy.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import sympy

from ..errors import (CoefficientNotInRing, NotIntegral, OwnerMismatch,
                      UnsupportedBase, VerificationFailed)
from ..polyalg.univariate import discriminant, poly_from_roots, taylor_shift
from ..rings import RationalBase, frac_in_ring, integers
from .closure import ring_of_integers
from .algebra import EtaleAlgebra, QElem, QuotientAlgebra, upoly_gcd


def integralize_generator(A, P, b0=None):
    """Rescale a monic P over K so that it has coefficients in A.

    With P = X^d + sum_i (b_i/b0) X^(d-i), the element u = b0*w of a root w
    has minimal polynomial Q = X^d + sum_i b_i b0^(i-1) X^(d-i).  Returns
    ``(b0, Q)`` with Q's coefficients as ring elements, lowest degree first.
    """
    coeffs = [A.frac(c) for c in P]
    d = len(coeffs) - 1
    if not (coeffs[-1] == 1):
        raise CoefficientNotInRing("polynomial is not monic")
    if b0 is None:
        b0 = A.one()
        for c in coeffs:
            if not (c.den == 1):
                b0 = b0 * c.den
    b0 = A.elem(b0)
    out = []
    for k, c in enumerate(coeffs):       # coefficient of X^k, i = d - k
        h = frac_in_ring(A, c * b0 ** (d - k))
        if h is None:
            raise CoefficientNotInRing(f"coefficient of X^{k} is not in the ring after scaling")
        out.append(h)
    return b0, out


# ---------------------------------------------------------------------------
# splitting data

@dataclass(frozen=True)
class SplittingData:
    """G = K[u]/(Q) together with the n roots of P expressed on 1, u, ..., u^(d-1)."""

    owner: EtaleAlgebra
    field: QuotientAlgebra
    roots: tuple
    closure_gens: tuple = ()
    closure_certified: bool = True

    @property
    def degree(self) -> int:
        return self.field.degree

    @property
    def u_min_poly(self):
        return self.field.modulus


def _check_integral_coeffs(A, coeffs, what):
    for c in coeffs:
        if frac_in_ring(A, A.frac(c)) is None:
            raise VerificationFailed(f"{what} has a coefficient outside the ring")


def verify_splitting_data(S: SplittingData) -> SplittingData:
    """Check every SplittingData invariant; raise VerificationFailed otherwise."""
    Omega, G = S.owner, S.field
    A = Omega.ring
    if type(G.K) is not type(Omega.K) or G.K.ring != Omega.K.ring:
        raise VerificationFailed("splitting field has a different base")
    _check_integral_coeffs(A, G.modulus, "Q")
    if A.is_integers:
        x = sympy.Symbol("x")
        poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(G.modulus)], x)
        facs = sympy.factor_list(poly)[1]
        if len(facs) != 1 or facs[0][1] != 1:
            raise VerificationFailed("Q is reducible over QQ")
    if len(S.roots) != Omega.degree:
        raise VerificationFailed("wrong number of roots")
    for r in S.roots:
        if r.owner is not G:
            raise VerificationFailed("root is not in the splitting field")
        if not G.evaluate_poly(Omega.modulus, r).is_zero():
            raise VerificationFailed(f"P does not vanish at {r}")
    for i in range(len(S.roots)):
        for j in range(i):
            if S.roots[i] == S.roots[j]:
                raise VerificationFailed("roots are not distinct")
    for g in S.closure_gens:
        check_integral_element(A, g)
    return S


def check_integral_element(A, g: QElem):
    """Certify g integral over A: its characteristic polynomial lies in A[X]."""
    for c in g.charpoly():
        if frac_in_ring(A, g.owner.K.to_frac(c)) is None:
            raise NotIntegral(f"{g} has characteristic polynomial outside A[X]")
    return True


def make_splitting_data(Omega: EtaleAlgebra, Q, roots, closure_gens=None, var="u") -> SplittingData:
    """Build user-supplied splitting data from coordinate lists and verify it.

    Without ``closure_gens`` over QQ the ring of integers is computed; over
    other bases the power basis of u is used and flagged as uncertified.
    """
    G = QuotientAlgebra(Omega.K, Q, var)
    rts = tuple(G.elem(list(r)) for r in roots)
    certified = True
    if closure_gens is not None:
        gens = tuple(G.elem(list(g)) for g in closure_gens)
    elif isinstance(Omega.K, RationalBase):
        gens, certified = ring_of_integers(G, rts)
    else:
        gens, certified = tuple(G.basis()), False
    S = SplittingData(Omega, G, rts, gens, certified)
    return verify_splitting_data(S)


# -- built-in construction over QQ ---------------------------------------------

_X, _Z, _T = sympy.symbols("x z t")


def _to_sympy(coeffs, var):
    return sum((sympy.Rational(c.numerator, c.denominator) * var ** i
                for i, c in enumerate(map(Fraction, coeffs))), sympy.Integer(0))


def _qelem_expr(a: QElem):
    return _to_sympy(a.coords, _Z)


def _from_sympy(expr, var):
    p = sympy.Poly(expr, var)
    out = [Fraction(0)] * (p.degree() + 1)
    for (k,), c in p.terms():
        c = sympy.Rational(c)
        out[k] = Fraction(int(c.p), int(c.q))
    return out


def _squarefree(p: sympy.Poly) -> bool:
    return sympy.degree(sympy.gcd(p, p.diff()), p.gens[0]) == 0


def _lift(poly_over_F, var):
    """Bivariate sympy expression sum_k a_k(z) var^k for F-coefficients a_k."""
    return sum((_qelem_expr(a) * var ** k for k, a in enumerate(poly_over_F)), sympy.Integer(0))


def _factor_over(F: QuotientAlgebra, f):
    """Monic irreducible factors over F of a squarefree polynomial with rational coefficients."""
    M = _to_sympy(F.modulus, _Z)
    fF = [F.scalar(c) for c in f]
    z = F.gen()
    for s in (0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5):
        g = taylor_shift(fF, z * (-s))
        N = sympy.Poly(sympy.resultant(M, _lift(g, _X), _Z), _X)
        if _squarefree(N):
            break
    else:
        raise VerificationFailed("no squarefree norm found")
    out = []
    for Ni, _e in sympy.factor_list(N)[1]:
        Ni_F = [F.scalar(c) for c in _from_sympy(Ni.as_expr(), _X)]
        h = upoly_gcd(g, Ni_F)
        out.append(taylor_shift(h, z * s))
    return out


def _adjoin(F: QuotientAlgebra, h):
    """Field F[y]/(h) as QQ[t]/(N) with t = y + c z primitive."""
    M = _to_sympy(F.modulus, _Z)
    H = _lift(h, sympy.Symbol("y"))
    y = sympy.Symbol("y")
    cs = [0] if F.degree == 1 else []
    for c in cs + [1, -1, 2, -2, 3, -3, 4, -4, 5, -5]:
        N = sympy.Poly(sympy.resultant(M, H.subs(y, _T - c * _Z), _Z), _T)
        if _squarefree(N):
            break
    else:
        raise VerificationFailed("no primitive element found")
    K = F.K
    Fn = QuotientAlgebra(K, _from_sympy(N.as_expr(), _T), "u")
    return Fn


def _build_over_Q(Omega: EtaleAlgebra) -> SplittingData:
    K = Omega.K
    P = [Fraction(c) for c in Omega.modulus]
    n = len(P) - 1
    b0 = lcm(*(c.denominator for c in P))
    Pt = [c * b0 ** (n - k) for k, c in enumerate(P)]      # monic, integral
    F = QuotientAlgebra(K, [0, 1], "u")
    while True:
        factors = _factor_over(F, Pt)
        nonlinear = [h for h in factors if len(h) > 2]
        if not nonlinear:
            break
        nonlinear.sort(key=len)
        F = _adjoin(F, nonlinear[0])
    roots = [(-h[0]) * Fraction(1, b0) for h in factors]
    roots.sort(key=lambda r: tuple(r.coords))
    return SplittingData(Omega, F, tuple(roots))


def splitting_data(Omega: EtaleAlgebra, user: SplittingData | None = None) -> SplittingData:
    if user is not None:
        if user.owner is not Omega:
            raise OwnerMismatch("splitting data belongs to another algebra")
        return verify_splitting_data(user)
    if not isinstance(Omega.K, RationalBase):
        raise UnsupportedBase("built-in splitting fields need K = QQ; supply splitting data")
    S = _build_over_Q(Omega)
    gens, certified = ring_of_integers(S.field, S.roots)
    S = SplittingData(S.owner, S.field, S.roots, gens, certified)
    return verify_splitting_data(S)


# ---------------------------------------------------------------------------
# conjugates and discriminants

def conjugates(alpha: QElem, S: SplittingData):
    if alpha.owner is not S.owner:
        raise OwnerMismatch("element is not in the algebra of the splitting data")
    G = S.field
    return [G.evaluate_poly(alpha.coords, r) for r in S.roots]


def disc_native(alpha: QElem):
    """D(alpha) as a native element of K (Fraction over QQ)."""
    return discriminant(alpha.charpoly())


def disc_element(alpha: QElem):
    """D_{Omega/K}(alpha) via the discriminant of its characteristic polynomial."""
    return alpha.owner.K.to_frac(disc_native(alpha))


def disc_product(alpha: QElem, S: SplittingData):
    """D(alpha) as prod_{i<j} (alpha^(i) - alpha^(j))^2, computed in G."""
    conj = conjugates(alpha, S)
    acc = S.field.one()
    for i in range(len(conj)):
        for j in range(i + 1, len(conj)):
            d = conj[i] - conj[j]
            acc = acc * d * d
    return acc


def charpoly_from_conjugates(alpha: QElem, S: SplittingData):
    return poly_from_roots(conjugates(alpha, S))


def rational_algebra(P, var: str = "theta") -> EtaleAlgebra:
    """Omega = QQ[X]/(P) over A = ZZ."""
    return EtaleAlgebra(integers(), P, var)


__all__ = [
    "SplittingData", "integralize_generator", "splitting_data", "verify_splitting_data",
    "make_splitting_data", "conjugates", "disc_element",
    "disc_native", "disc_product", "charpoly_from_conjugates", "check_integral_element",
    "rational_algebra", "roots_in_field",
]


def roots_in_field(G: QuotientAlgebra, F):
    """All roots in G = QQ[u]/(Q) of a squarefree polynomial F with rational coefficients."""
    if not isinstance(G.K, RationalBase):
        raise UnsupportedBase("root finding is built in only over QQ")
    out = [-h[0] for h in _factor_over(G, [Fraction(c) for c in F]) if len(h) == 2]
    out.sort(key=lambda r: tuple(r.coords))
    return out
