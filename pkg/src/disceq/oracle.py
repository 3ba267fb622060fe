"""Candidate sets for the root differences of solutions.

Every difference eta = alpha_i - alpha_j of a solution is integral and
divides delta after squaring, because delta is the product of all the
squared differences.  Where that divisor condition can be enumerated
exactly (ZZ, imaginary quadratic fields, and the degree-2 case where
eta^2 = delta holds on the nose) the candidate set is complete.  Bounded
search is a heuristic and is always flagged incomplete.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import isqrt

from .errors import StrategyUnsupported, VerificationFailed, ZeroDelta
from .etale.algebra import QElem, QuotientAlgebra
from .etale.splitting import SplittingData, conjugates, roots_in_field
from .modules import LinearSystemA, factor_integer
from .rings import RationalBase, RingPresentation


@dataclass(frozen=True)
class CandidateStrategy:
    """ExhaustiveDivisor, BoundedSearch(height_bound) or UserSupplied(elements)."""

    variant: str                       # "exhaustive" | "bounded" | "user"
    height_bound: int | None = None
    mode: str = "conjugate"            # bounded search: "conjugate" or "lattice"
    elements: tuple = ()
    declared_complete: bool = False

    def __post_init__(self):
        if self.variant not in ("exhaustive", "bounded", "user"):
            raise ValueError(f"unknown strategy {self.variant!r}")
        if self.variant == "bounded":
            if self.height_bound is None or self.height_bound < 1:
                raise ValueError("height bound must be a positive integer")
            if self.mode not in ("conjugate", "lattice"):
                raise ValueError(f"unknown bounded-search mode {self.mode!r}")

    @classmethod
    def exhaustive(cls):
        return cls("exhaustive")

    @classmethod
    def bounded(cls, H: int, mode: str = "conjugate"):
        return cls("bounded", H, mode)

    @classmethod
    def user(cls, elements, complete: bool = False):
        return cls("user", elements=tuple(elements), declared_complete=complete)

    @classmethod
    def parse(cls, text: str, elements=(), complete: bool = False):
        """``exhaustive``, ``bounded:<H>``, ``lattice:<H>`` or ``user``."""
        text = text.strip()
        if text == "exhaustive":
            return cls.exhaustive()
        if text == "user":
            return cls.user(elements, complete)
        head, _, tail = text.partition(":")
        if head in ("bounded", "lattice") and tail.strip().lstrip("-").isdigit():
            return cls.bounded(int(tail), "conjugate" if head == "bounded" else "lattice")
        raise ValueError(f"cannot parse strategy {text!r}")

    def describe(self) -> str:
        if self.variant == "bounded":
            return f"{'bounded' if self.mode == 'conjugate' else 'lattice'}:{self.height_bound}"
        return self.variant


@dataclass(frozen=True)
class CandidateSet:
    elements: tuple
    complete: bool
    notes: tuple = field(default_factory=tuple)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def contains(self, eta: QElem) -> bool:
        return any(eta == e for e in self.elements)


# ---------------------------------------------------------------------------
# integrality tests over A

def _zz_test(x: QElem) -> bool:
    return all(Fraction(c).denominator == 1 for c in x.charpoly())


class _IntegralityTest:
    """Necessary test for x in G being integral over A.

    Over ZZ the characteristic polynomial must be integral.  Over a general
    A its coefficients must lie in A_K, which is tested only when A_K
    generators are available; otherwise every element passes.
    """

    def __init__(self, A: RingPresentation, AK_gens=None):
        self.A = A
        self.sys = None
        if not A.is_integers and AK_gens:
            self.sys = LinearSystemA(A, [[A.frac(g) for g in AK_gens]])

    def __call__(self, x: QElem) -> bool:
        if self.A.is_integers:
            return _zz_test(x)
        cp = x.charpoly()
        if self.sys is None:
            return True
        K = x.owner.K
        return all(self.sys.particular([K.to_frac(c)]) is not None for c in cp)


def _divides_sq(test, eta: QElem, delta) -> bool:
    if eta.is_zero():
        return False
    return test((eta * eta).inverse() * delta)


def _canonical(elems):
    seen, out = set(), []
    for e in elems:
        k = e.key()
        if k in seen:
            continue
        seen.add(k)
        out.append(e)
    out.sort(key=_sort_key)
    return tuple(out)


def _sort_key(e: QElem):
    K = e.owner.K
    return tuple(K.sort_key(c) for c in e.coords)


# ---------------------------------------------------------------------------
# exhaustive strategies (A = ZZ)

def _divisors(n: int):
    n = abs(n)
    fac = {}
    for p in factor_integer(n):
        fac[p] = fac.get(p, 0) + 1
    divs = [1]
    for p, e in fac.items():
        divs = [d * p ** k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _exhaustive_rational(G, delta: int):
    out = []
    for d in _divisors(delta):
        if delta % (d * d) == 0:
            out += [G.scalar(d), G.scalar(-d)]
    return out


def _exhaustive_imag_quadratic(G, basis, delta: int):
    """All eta = x b1 + y b2 in the maximal order with eta^2 | delta."""
    b1, b2 = basis
    A_ = b1.norm()
    C_ = b2.norm()
    B_ = (b1 + b2).norm() - A_ - C_
    D = 4 * A_ * C_ - B_ * B_            # positive for a definite norm form
    N = abs(delta)                        # N(eta) divides |delta|
    ymax = isqrt(int(4 * A_ * N / D)) + 1
    xmax = isqrt(int(4 * C_ * N / D)) + 1
    out = []
    for x in range(-xmax, xmax + 1):
        for y in range(-ymax, ymax + 1):
            nrm = A_ * x * x + B_ * x * y + C_ * y * y
            if nrm == 0 or nrm > N or N % nrm != 0:
                continue
            eta = b1 * x + b2 * y
            if _divides_sq(_zz_test, eta, delta):
                out.append(eta)
    return out


def _is_imag_quadratic(G: QuotientAlgebra) -> bool:
    if G.degree != 2:
        return False
    c0, c1 = Fraction(G.modulus[0]), Fraction(G.modulus[1])
    return c1 * c1 - 4 * c0 < 0


def _exhaustive(A, S: SplittingData, n: int, delta):
    if not A.is_integers:
        raise StrategyUnsupported("exhaustive enumeration needs A = ZZ")
    G = S.field
    delta = int(delta)
    if G.degree == 1:
        return _exhaustive_rational(G, delta), "divisors of delta in ZZ"
    if _is_imag_quadratic(G):
        if not S.closure_certified or len(S.closure_gens) != 2:
            raise StrategyUnsupported("maximal order of G is not available")
        return _exhaustive_imag_quadratic(G, S.closure_gens, delta), \
            "divisor enumeration in an imaginary quadratic maximal order"
    if n == 2:
        roots = roots_in_field(G, [-delta, 0, 1])
        return roots, "square roots of delta in G (n = 2 forces eta^2 = delta)"
    raise StrategyUnsupported("exhaustive enumeration needs G = QQ, G imaginary quadratic, or n = 2")


# ---------------------------------------------------------------------------
# bounded search

def _bounded_conjugate(S: SplittingData, H: int, order_gens=None):
    Omega = S.owner
    gens = list(order_gens) if order_gens else Omega.basis()
    gens = [g for g in gens if not g.in_base()]
    conj = [conjugates(g, S) for g in gens]
    n = Omega.degree
    G = S.field
    out = []
    for cs in product(range(-H, H + 1), repeat=len(gens)):
        if not any(cs):
            continue
        images = []
        for j in range(n):
            acc = G.zero()
            for c, cj in zip(cs, conj):
                if c:
                    acc = acc + cj[j] * c
            images.append(acc)
        for i in range(n):
            for j in range(n):
                if i != j:
                    out.append(images[i] - images[j])
    return out


def _bounded_lattice(S: SplittingData, H: int):
    basis = S.closure_gens or tuple(S.field.basis())
    G = S.field
    out = []
    for cs in product(range(-H, H + 1), repeat=len(basis)):
        if not any(cs):
            continue
        acc = G.zero()
        for c, b in zip(cs, basis):
            if c:
                acc = acc + b * c
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# public API

def candidate_set(A: RingPresentation, S: SplittingData, n: int, delta, strategy: CandidateStrategy,
                  order_gens=None, AK_gens=None) -> CandidateSet:
    """The finite set of possible root differences for D = delta."""
    K = S.field.K
    dK = K(delta) if not isinstance(K, RationalBase) else Fraction(int(delta))
    if dK == 0:
        raise ZeroDelta("delta must be nonzero")
    G = S.field
    if strategy.variant == "exhaustive":
        elems, note = _exhaustive(A, S, n, delta)
        elems = [e for e in elems if not e.is_zero()]
        elems += [-e for e in elems]
        return CandidateSet(_canonical(elems), True, (note,))
    if strategy.variant == "bounded":
        test = _IntegralityTest(A, AK_gens)
        if strategy.mode == "conjugate":
            raw = _bounded_conjugate(S, strategy.height_bound, order_gens)
            note = f"differences of conjugates with coefficients bounded by {strategy.height_bound}"
        else:
            raw = _bounded_lattice(S, strategy.height_bound)
            note = f"integral elements of G with coordinates bounded by {strategy.height_bound}"
        keep = []
        seen = set()
        for e in raw:
            k = e.key()
            if k in seen or e.is_zero():
                continue
            seen.add(k)
            if _divides_sq(test, e, dK):
                keep.append(e)
        keep += [-e for e in keep]
        return CandidateSet(_canonical(keep), False, (note,))
    # user supplied
    elems = [e if isinstance(e, QElem) else G.elem(list(e)) for e in strategy.elements]
    keys = {e.key() for e in elems}
    for e in elems:
        if (-e).key() not in keys:
            raise VerificationFailed(f"user candidate set is not closed under negation: {e}")
    return CandidateSet(_canonical(elems), bool(strategy.declared_complete), ("user supplied",))


def verify_candidate_set(F: CandidateSet, solutions, S: SplittingData) -> bool:
    """True iff every pairwise root difference of every solution lies in F."""
    keys = {e.key() for e in F.elements}
    G = S.field
    for sol in solutions:
        roots = roots_in_field(G, sol)
        if len(roots) != len(sol) - 1:
            return False
        for i, a in enumerate(roots):
            for j, b in enumerate(roots):
                if i != j and (a - b).key() not in keys:
                    return False
    return True
