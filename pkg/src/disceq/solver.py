"""Representatives of A-equivalence classes for the two discriminant equations.

``solve_poly_disc`` finds monic F in A[X] of degree n with D(F) = delta and
all zeros in G; ``solve_order_disc`` finds alpha in an A-order O with
D(alpha) = delta.  Both enumerate tuples of root differences from a
candidate set, solve a linear system over A per tuple, and then extend
each base solution by a finite system of shifts.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb, floor

from .errors import ConditionFailure, UnsupportedDegree, VerificationFailed, ZeroDelta
from .etale.algebra import EtaleAlgebra, QElem, column_basis, is_zero
from .etale.orders import OrderModule, elem_equiv, order_K_part_reps, poly_equiv
from .etale.splitting import SplittingData, conjugates, disc_native
from .modules import LinearSystemA, QuotientReport, nth_division_reps
from .oracle import CandidateSet, CandidateStrategy, candidate_set
from .polyalg.groebner import IdealBasis
from .polyalg.mpoly import MPoly, elim_order
from .polyalg.domains import ZZ
from .polyalg.univariate import discriminant, poly_from_roots, taylor_shift
from .rings import RingPresentation, frac_in_ring


# ---------------------------------------------------------------------------
# instances and reports

@dataclass(frozen=True)
class PolyDiscInstance:
    ring: RingPresentation
    splitting: SplittingData
    degree: int
    delta: object
    strategy: CandidateStrategy
    closure_gens: tuple | None = None      # A-module generators of A_G (default: from splitting)
    AK_gens: tuple = ()                    # generators of A_K inside K (1 is implied)
    AK_certificates: tuple | None = None   # monic polynomials over A, one per AK generator
    name: str = ""

    def __post_init__(self):
        if self.degree < 2:
            raise UnsupportedDegree("degree must be at least 2")


@dataclass(frozen=True)
class OrderDiscInstance:
    ring: RingPresentation
    algebra: EtaleAlgebra
    order: OrderModule
    delta: object
    splitting: SplittingData
    strategy: CandidateStrategy
    AK_gens: tuple = ()
    AK_certificates: tuple | None = None
    name: str = ""


@dataclass(frozen=True)
class TupleRecord:
    gammas: tuple                 # the free differences gamma_{i,i+1}
    verdict: str                  # cocycle | product | not-integral | unsolvable | solved
    base: tuple | None = None     # base roots (poly) or base element (order)
    shifts: tuple = ()            # shift representatives tried
    produced: tuple = ()          # candidates that passed every filter


@dataclass
class SolutionReport:
    kind: str                     # "poly" or "order"
    representatives: tuple
    complete: bool
    trace: tuple
    quotient_report: QuotientReport
    candidates: CandidateSet
    notes: tuple = field(default_factory=tuple)
    ring: RingPresentation | None = None


# ---------------------------------------------------------------------------
# helpers

def fmt_poly(A: RingPresentation, coeffs, var: str = "X") -> str:
    """Human-readable monic polynomial from coefficients (lowest first)."""
    parts = []
    n = len(coeffs) - 1
    for k in range(n, -1, -1):
        c = A.elem(coeffs[k])
        if c.is_zero():
            continue
        s = c.fmt()
        simple = len(c.rep.terms) == 1
        neg = simple and s.startswith("-")
        body = s[1:] if neg else s
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if k > 0:
            if body == "1":
                body = mono
            else:
                body = (body if simple else f"({body})") + "*" + mono
        parts.append((neg, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] else "") + parts[0][1]
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def _all_gammas(free, n):
    """gamma_ij for i < j from the consecutive differences, keyed by (i, j)."""
    g = {}
    for i in range(n):
        acc = None
        for j in range(i + 1, n):
            acc = free[j - 1] if acc is None else acc + free[j - 1]
            g[(i, j)] = acc
    return g


def _tuple_filters(free, n, keys, deltaK):
    """Cocycle consistency and product check; returns (verdict, gammas)."""
    g = _all_gammas(free, n)
    for (i, j), v in g.items():
        if j > i + 1 and v.key() not in keys:
            return "cocycle", g
    G = free[0].owner
    prod_ = G.one()
    for v in g.values():
        prod_ = prod_ * v * v
    if not (prod_ == G.scalar(deltaK)):
        return "product", g
    return None, g


def _base_coeffs(K, poly):
    """Coefficients of a polynomial over G as elements of K, or None if one is outside K."""
    out = []
    for c in poly:
        if isinstance(c, QElem):
            if not c.in_base():
                return None
            c = c.coords[0]
        out.append(K(c))
    return out


def _ring_coeffs(A, K, poly):
    """Coefficients over A of a polynomial over G, or None."""
    kc = _base_coeffs(K, poly)
    if kc is None:
        return None
    out = [frac_in_ring(A, K.to_frac(c)) for c in kc]
    return None if any(c is None for c in out) else out


def _normalize_poly_Z(coeffs):
    """Shift an integer monic polynomial so that its X^(n-1) coefficient lies in [0, n)."""
    n = len(coeffs) - 1
    a1 = int(coeffs[n - 1])
    a = -(a1 // n)
    return [int(c) for c in taylor_shift([int(c) for c in coeffs], a)]


def _check_condition(A, AK_gens, certs, n):
    qr = nth_division_reps(A, list(AK_gens), n, list(certs) if certs is not None else None)
    if not qr.finite:
        raise ConditionFailure("e10.1.2m", "quotient ((1/n)A ∩ A_K)/A is infinite")
    return qr


# ---------------------------------------------------------------------------
# Theorem 1: monic polynomials

def solve_poly_disc(inst: PolyDiscInstance) -> SolutionReport:
    A, S, n = inst.ring, inst.splitting, inst.degree
    G = S.field
    K = G.K
    delta = A.elem(inst.delta)
    if delta.is_zero():
        raise ZeroDelta("delta must be nonzero")
    deltaK = K(delta)
    certs = inst.AK_certificates
    if certs is None and inst.AK_gens and A.is_integers:
        certs = None
    qr = _check_condition(A, inst.AK_gens, certs, n)
    thetas = [K(t) for t in qr.representatives]
    cand = candidate_set(A, S, n, delta, inst.strategy, AK_gens=[1] + list(inst.AK_gens))
    keys = {e.key() for e in cand.elements}

    AG = list(inst.closure_gens) if inst.closure_gens is not None else list(S.closure_gens)
    if not AG:
        AG = G.basis()
    AG = [G.elem(g) for g in AG]
    d = G.degree
    # columns n*a_k for a_k = g e_i, flattened to n*d coordinates over K
    vec_cols = []
    for i in range(n):
        for g in AG:
            col = [K(0)] * (n * d)
            for c in range(d):
                col[i * d + c] = g.coords[c] * n
            vec_cols.append(col)
    t = len(vec_cols)
    ones = [K(1) if c == 0 else K(0) for _i in range(n) for c in range(d)]

    trace, found = [], []
    for free in product(cand.elements, repeat=n - 1):
        verdict, gam = _tuple_filters(free, n, keys, deltaK)
        labels = tuple(str(x) for x in free)
        if verdict:
            trace.append(TupleRecord(labels, verdict))
            continue
        gi = []
        for i in range(n):
            acc = G.zero()
            for j in range(n):
                if i < j:
                    acc = acc + gam[(i, j)]
                elif j < i:
                    acc = acc - gam[(j, i)]
            gi.append(acc)
        # (X - gamma_1)...(X - gamma_n) must lie in A[X]
        if _ring_coeffs(A, K, poly_from_roots(gi)) is None:
            trace.append(TupleRecord(labels, "not-integral"))
            continue
        gcol = [gi[i].coords[c] for i in range(n) for c in range(d)]
        cols = vec_cols + [ones, gcol]
        mat = [[col[r] for col in cols] for r in range(n * d)]
        pivots, C = column_basis(mat)
        M = [[C[r][k] for k in range(t)] + [-C[r][t]] for r in range(len(pivots))]
        b = [C[r][t + 1] for r in range(len(pivots))]
        sol = LinearSystemA(A, M).particular(b)
        if sol is None:
            trace.append(TupleRecord(labels, "unsolvable"))
            continue
        x0 = [K.from_ring(x) for x in sol[:t]]
        base = []
        for i in range(n):
            acc = G.zero()
            for k, g in enumerate(AG):
                xk = x0[i * len(AG) + k]
                if not is_zero(xk):
                    acc = acc + g * xk
            base.append(acc)
        produced = []
        for th in thetas:
            coeffs = _ring_coeffs(A, K, poly_from_roots([r + th for r in base]))
            if coeffs is None:
                continue
            if not (discriminant(coeffs) == delta):
                continue
            if A.is_integers:
                coeffs = [A.elem(c) for c in _normalize_poly_Z(coeffs)]
            produced.append(coeffs)
            found.append(coeffs)
        trace.append(TupleRecord(labels, "solved", tuple(str(r) for r in base),
                                 tuple(K.fmt(th) for th in thetas),
                                 tuple(fmt_poly(A, f) for f in produced)))

    reps = []
    for F in found:
        if any(poly_equiv(A, R, F) is not None for R in reps):
            continue
        reps.append(F)
    if A.is_integers:
        reps.sort(key=lambda F: [int(c) for c in reversed(F)])
    # soundness: re-verify every representative
    for F in reps:
        if not (discriminant(F) == delta) or not (F[-1] == 1):
            raise VerificationFailed("representative fails its defining equation")
    notes = list(cand.notes)
    complete = cand.complete and S.closure_certified
    if not S.closure_certified:
        notes.append("integral closure of A in G is not certified maximal")
    return SolutionReport("poly", tuple(reps), complete, tuple(trace), qr, cand, tuple(notes), A)


# ---------------------------------------------------------------------------
# Theorem 2: elements of an order

def solve_order_disc(inst: OrderDiscInstance) -> SolutionReport:
    A, Omega, O, S = inst.ring, inst.algebra, inst.order, inst.splitting
    if S.owner is not Omega or O.owner is not Omega:
        raise VerificationFailed("order, algebra and splitting data do not match")
    G = S.field
    K = G.K
    n = Omega.degree
    d = G.degree
    delta = A.elem(inst.delta)
    if delta.is_zero():
        raise ZeroDelta("delta must be nonzero")
    deltaK = K(delta)
    qr = order_K_part_reps(O)
    if not qr.finite:
        raise ConditionFailure("e10.1.5m", "quotient (O ∩ K)/A is infinite")
    thetas = [K(t) for t in qr.representatives]
    cand = candidate_set(A, S, n, delta, inst.strategy, order_gens=O.gens,
                         AK_gens=[1] + list(inst.AK_gens))
    keys = {e.key() for e in cand.elements}
    conj = [conjugates(w, S) for w in O.gens]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    M = []
    for (i, j) in pairs:
        diffs = [cw[i] - cw[j] for cw in conj]
        for c in range(d):
            M.append([df.coords[c] for df in diffs])
    system = LinearSystemA(A, M)

    trace, T = [], []
    for free in product(cand.elements, repeat=n - 1):
        verdict, gam = _tuple_filters(free, n, keys, deltaK)
        labels = tuple(str(x) for x in free)
        if verdict:
            trace.append(TupleRecord(labels, verdict))
            continue
        b = [gam[p].coords[c] for p in pairs for c in range(d)]
        x0 = system.particular(b)
        if x0 is None:
            trace.append(TupleRecord(labels, "unsolvable"))
            continue
        alpha0 = O.element(x0)
        T.append(alpha0)
        produced = [alpha0 + th for th in thetas]
        trace.append(TupleRecord(labels, "solved", (str(alpha0),),
                                 tuple(K.fmt(th) for th in thetas),
                                 tuple(str(a) for a in produced)))

    reps = []
    for a0 in T:
        for th in thetas:
            alpha = a0 + th
            if A.is_integers:
                c0 = Fraction(alpha.coords[0])
                alpha = alpha - floor(c0)
            if not O.contains(alpha) or not (disc_native(alpha) == deltaK):
                continue
            if any(elem_equiv(alpha, r) is not None for r in reps):
                continue
            reps.append(alpha)
    if A.is_integers:
        reps.sort(key=lambda a: [Fraction(c) for c in reversed(a.coords)])
    for a in reps:
        if not O.contains(a) or not (disc_native(a) == deltaK):
            raise VerificationFailed("representative fails its defining equation")
    notes = list(cand.notes)
    return SolutionReport("order", tuple(reps), cand.complete, tuple(trace), qr, cand,
                          tuple(notes), A)


# ---------------------------------------------------------------------------
# ground truth over ZZ

@dataclass(frozen=True)
class BruteForceResult:
    degree: int
    delta: int
    box: int
    polynomials: tuple            # integer coefficient lists, lowest first
    classes: tuple                # tuples of indices into polynomials


def _disc_int(coeffs):
    return int(discriminant([int(c) for c in coeffs]))


def brute_force_poly_disc(n: int, delta: int, box: int) -> BruteForceResult:
    """All monic integer F of degree n with |coefficients| <= box and D(F) = delta."""
    from math import isqrt
    from .rings import integers
    if n not in (2, 3):
        raise UnsupportedDegree("brute force supports degrees 2 and 3")
    if box < 1 or box > 10 ** 4:
        raise ValueError("box must lie in 1..10^4")
    polys = []
    if n == 2:
        for b in range(-box, box + 1):
            num = b * b - delta
            if num % 4 == 0 and abs(num // 4) <= box:
                polys.append([num // 4, b, 1])
    else:
        for a in range(-box, box + 1):
            for b in range(-box, box + 1):
                # D = -27c^2 + (18ab - 4a^3)c + a^2b^2 - 4b^3, solve D = delta for c
                qa, qb, qc = -27, 18 * a * b - 4 * a ** 3, a * a * b * b - 4 * b ** 3 - delta
                disc = qb * qb - 4 * qa * qc
                if disc < 0:
                    continue
                r = isqrt(disc)
                if r * r != disc:
                    continue
                for s in {r, -r}:
                    num = -qb + s
                    if num % (2 * qa) == 0:
                        c = num // (2 * qa)
                        if abs(c) <= box:
                            polys.append([c, b, a, 1])
    polys.sort(key=lambda F: list(reversed(F)))
    for F in polys:
        assert _disc_int(F) == delta
    Z = integers()
    classes = []
    for idx, F in enumerate(polys):
        for cl in classes:
            if poly_equiv(Z, polys[cl[0]], F) is not None:
                cl.append(idx)
                break
        else:
            classes.append([idx])
    return BruteForceResult(n, delta, box, tuple(tuple(F) for F in polys),
                            tuple(tuple(c) for c in classes))


# ---------------------------------------------------------------------------
# the counterexample family over ZZ[n t, C(n,2) t^2, ..., t^n]

@dataclass(frozen=True)
class CounterexampleRecord:
    degree: int
    c: int
    ring: RingPresentation
    delta: object
    polynomials: tuple            # coefficient lists over A, lowest first
    disc_ok: tuple                # D(F_m) == delta for m = 1..m_max
    inequivalent: dict            # (m, m') -> True when no shift in A exists
    closure_gens: tuple           # t, ..., t^(n-1) as fractions over A
    closure_certificates: tuple   # monic polynomials witnessing integrality


def subring_presentation(n: int) -> RingPresentation:
    """Presentation of ZZ[n t, C(n,2) t^2, ..., t^n] by elimination of t."""
    names = [f"U{k}" for k in range(1, n + 1)]
    order = elim_order(1)
    nv = n + 1
    t = MPoly.var(0, nv, ZZ, order)
    gens = [MPoly.var(k, nv, ZZ, order) - t ** k * comb(n, k) for k in range(1, n + 1)]
    basis = IdealBasis(gens, nv, ZZ, order).polys
    rels = []
    for g in basis:
        if all(m[0] == 0 for m in g.terms):
            rels.append(MPoly({m[1:]: c for m, c in g.terms.items()}, n))
    return RingPresentation(names, rels)


def counterexample_family(n: int, c: int, m_max: int) -> CounterexampleRecord:
    if n < 2:
        raise UnsupportedDegree("degree must be at least 2")
    if c == 0:
        raise ValueError("c must be nonzero")
    if not 1 <= m_max <= 20:
        raise ValueError("m_max must lie in 1..20")
    A = subring_presentation(n)
    U = A.gens()
    delta = A.elem(int(discriminant([-c] + [0] * (n - 1) + [1])))
    polys = []
    for m in range(1, m_max + 1):
        # (X + t^(mn+1))^n - c: coefficient of X^(n-j) is C(n,j) t^((mn+1) j) = U_j U_n^(m j)
        F = [A.zero()] * (n + 1)
        F[n] = A.one()
        for j in range(1, n + 1):
            F[n - j] = U[j - 1] * U[n - 1] ** (m * j)
        F[0] = F[0] - c
        polys.append(F)
    disc_ok = tuple(discriminant(F) == delta for F in polys)
    ineq = {}
    for i in range(m_max):
        for j in range(i + 1, m_max):
            ineq[(i + 1, j + 1)] = poly_equiv(A, polys[i], polys[j]) is None
    # t^k = (C(n,k) t^k)/C(n,k) for k < n, integral as a root of X^n - U_n^k
    gens, certs = [], []
    for k in range(1, n):
        gens.append(A.frac(U[k - 1], comb(n, k)))
        certs.append([-(U[n - 1] ** k)] + [0] * (n - 1))
    return CounterexampleRecord(n, c, A, delta, tuple(polys), disc_ok, ineq,
                                tuple(gens), tuple(certs))
