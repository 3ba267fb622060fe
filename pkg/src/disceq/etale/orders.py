"""A-orders in an etale algebra and the two A-equivalence tests."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import (DegenerateInput, DegreeMismatch, NonMonic, NotClosed,
                      NotPrimitive, OwnerMismatch, RankDeficient)
from ..modules import AModule, LinearSystemA, QuotientReport, quotient_finite
from ..polyalg.univariate import derivative, discriminant, taylor_shift
from ..rings import base_field, frac_in_ring
from .algebra import EtaleAlgebra, QElem, is_zero, rank, upoly_gcd, upoly_trim
from .splitting import disc_native


@dataclass(frozen=True)
class OrderModule:
    """The A-module spanned by omega_1 = 1, omega_2, ..., omega_m in Omega."""

    owner: EtaleAlgebra
    gens: tuple
    verified: bool = False

    @property
    def m(self) -> int:
        return len(self.gens)

    @property
    def coord_forms(self):
        """Row k holds the coefficients of l_k, the theta^k coordinate of sum x_j omega_j."""
        n = self.owner.degree
        return [[w.coords[k] for w in self.gens] for k in range(n)]

    def _system(self):
        sys_ = self.__dict__.get("_sys")
        if sys_ is None:
            sys_ = LinearSystemA(self.owner.ring, self.coord_forms)
            object.__setattr__(self, "_sys", sys_)
        return sys_

    def coordinates(self, alpha: QElem):
        """x in A^m with alpha = sum x_k omega_k, or None if alpha is not in the module."""
        if alpha.owner is not self.owner:
            raise OwnerMismatch("element of another algebra")
        return self._system().particular(list(alpha.coords))

    def contains(self, alpha: QElem) -> bool:
        return self.coordinates(alpha) is not None

    def element(self, x) -> QElem:
        acc = self.owner.zero()
        for xk, w in zip(x, self.gens):
            acc = acc + w * self.owner.K.from_ring(xk)
        return acc


def check_order(A, Omega: EtaleAlgebra, gens) -> OrderModule:
    """Verify that 1, gens span an A-order of Omega."""
    if Omega.ring is not A and Omega.ring != A:
        raise OwnerMismatch("algebra is over another ring")
    elems = [Omega.elem(g) for g in gens]
    if not elems or not (elems[0] == 1):
        elems = [Omega.one()] + elems
    O = OrderModule(Omega, tuple(elems))
    if rank(O.coord_forms) != Omega.degree:
        raise RankDeficient("generators do not span Omega over K")
    for i in range(len(elems)):
        for j in range(i, len(elems)):
            if not O.contains(elems[i] * elems[j]):
                raise NotClosed(i + 1, j + 1)
    return OrderModule(Omega, tuple(elems), True)


def order_K_part_reps(O: OrderModule) -> QuotientReport:
    """Representatives of (O ∩ K)/A."""
    A = O.owner.ring
    L = O.coord_forms
    n = O.owner.degree
    K = O.owner.K
    rows = L[1:]
    kern = LinearSystemA(A, rows).kernel() if rows else [[A.one() if k == j else A.zero()
                                                        for k in range(O.m)] for j in range(O.m)]
    vals = []
    for x in kern:
        v = A.frac(0)
        for lk, xk in zip(L[0], x):
            if not xk.is_zero():
                v = v + K.to_frac(lk) * xk
        vals.append(v)
    one = AModule.rank_one(A, [A.frac(1)])
    part = AModule.rank_one(A, [A.frac(1)] + vals)
    report = quotient_finite(one, part)
    report.witness["generators"] = [A.frac(1)] + vals
    report.witness["degree"] = n
    return report


# ---------------------------------------------------------------------------
# equivalence tests

def distinct_zero_count(K, F) -> int:
    """Number of distinct zeros of F over an algebraic closure of K."""
    Fk = [K(c) for c in F]
    if not is_zero(discriminant(Fk)):
        return len(Fk) - 1
    g = upoly_gcd(Fk, derivative(Fk))
    return len(upoly_trim(Fk)) - len(g)


def poly_equiv(A, F1, F2):
    """a in A with F2(X) = F1(X + a), or None.  Coefficients lowest degree first."""
    f1 = [A.elem(c) for c in F1]
    f2 = [A.elem(c) for c in F2]
    if len(f1) != len(f2):
        raise DegreeMismatch("polynomials have different degrees")
    n = len(f1) - 1
    if n < 2:
        raise DegreeMismatch("degree must be at least 2")
    if not (f1[-1] == 1) or not (f2[-1] == 1):
        raise NonMonic("polynomials must be monic")
    K = base_field(A)
    for F in (f1, f2):
        if distinct_zero_count(K, F) < 2:
            raise DegenerateInput("polynomial has fewer than two distinct zeros")
    a = frac_in_ring(A, A.frac(f2[n - 1] - f1[n - 1], n))
    if a is None:
        return None
    shifted = taylor_shift(f1, a)
    if all(x == y for x, y in zip(shifted, f2)):
        return a
    return None


def elem_equiv(alpha1: QElem, alpha2: QElem):
    """a in A with alpha1 = alpha2 + a, or None."""
    if alpha1.owner is not alpha2.owner:
        raise OwnerMismatch("elements of different algebras")
    for a in (alpha1, alpha2):
        if is_zero(disc_native(a)):
            raise NotPrimitive(f"{a} does not generate the algebra")
    d = alpha1 - alpha2
    if not d.in_base():
        return None
    K = alpha1.owner.K
    return frac_in_ring(alpha1.owner.ring, K.to_frac(d.coords[0]))
