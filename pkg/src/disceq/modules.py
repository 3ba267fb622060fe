"""Finitely generated A-submodules of K^d and quotients of rank-one modules.

Linear systems over A are solved by clearing denominators row by row and
lifting to ZZ[X_1..X_r], where each relation f_k contributes slack
columns f_k e_i; the resulting module Groebner basis gives both a
particular solution and A-kernel generators.

Quotient finiteness follows the chain reduction: add one generator at a
time, turn each step into a ring quotient A/J via a colon ideal, split
the integer part of the lifted ideal prime by prime, and read off
representatives from standard monomials modulo each prime.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import DimensionMismatch, NotIntegral, NotSubmodule, OwnerMismatch
from .polyalg.domains import GF, ZZ
from .polyalg.groebner import LinearSystemR, elim_integer
from .polyalg.hilbert import HilbertData, hilbert_data
from .polyalg.mpoly import GREVLEX, MPoly
from .rings import FracElem, RingElem, RingPresentation, frac_in_ring


# ---------------------------------------------------------------------------
# types

@dataclass(frozen=True)
class AModule:
    """The A-span of ``gens`` inside K^ambient_dim."""

    owner: RingPresentation
    ambient_dim: int
    gens: tuple

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise DimensionMismatch("ambient dimension must be positive")
        vecs = []
        for g in self.gens:
            if not isinstance(g, (tuple, list)):
                g = (g,)
            if len(g) != self.ambient_dim:
                raise DimensionMismatch("generator has the wrong length")
            vecs.append(tuple(self.owner.frac(x) for x in g))
        object.__setattr__(self, "gens", tuple(vecs))

    @classmethod
    def rank_one(cls, A: RingPresentation, gens) -> "AModule":
        return cls(A, 1, tuple((g,) for g in gens))

    def scalars(self):
        if self.ambient_dim != 1:
            raise DimensionMismatch("module is not inside K")
        return [g[0] for g in self.gens]

    def contains(self, vec) -> bool:
        if not isinstance(vec, (tuple, list)):
            vec = (vec,)
        cols = [list(g) for g in self.gens]
        M = [[c[i] for c in cols] for i in range(self.ambient_dim)]
        if not cols:
            return all(self.owner.frac(x).is_zero() for x in vec)
        return LinearSystemA(self.owner, M).particular(vec) is not None


@dataclass(frozen=True)
class PrimeStep:
    """Data for one prime-power layer of a ring quotient ZZ[X]/I."""

    prime: int
    colon_gens: tuple          # generators of J_i (ZZ polynomials), empty for the first layer
    multiplier: int            # p_1...p_i, the factor in front of the layer's representatives
    hilbert: HilbertData | None
    size: int | None


@dataclass(frozen=True)
class ChainStep:
    """One generator added to the chain N_{k-1} subset N_k."""

    generator: RingElem        # scaled generator, an element of A
    colon_gens: tuple          # generators of J = {x in A : x*g in N_{k-1}}
    integer: int               # a with (I + J) ∩ ZZ = (a)
    primes: tuple              # prime factors of a with multiplicity
    layers: tuple              # PrimeStep records
    size: int | None


@dataclass(frozen=True)
class QuotientReport:
    finite: bool
    representatives: tuple     # FracElem values (rank-one ambient)
    witness: dict = field(default_factory=dict)

    @property
    def primes(self):
        out = set()
        for st in self.witness.get("steps", ()):
            out.update(st.primes)
        return sorted(out)


# ---------------------------------------------------------------------------
# linear systems over A

def _row_scale(A: RingPresentation, row):
    d = A.one()
    for x in row:
        if not (x.den == 1):
            d = d * x.den
    return d


class LinearSystemA:
    """Reusable solver for ``M x = b`` over A with M fixed."""

    def __init__(self, A: RingPresentation, M):
        self.A = A
        self.m = len(M)
        self.n = len(M[0]) if M else 0
        if any(len(row) != self.n for row in M):
            raise DimensionMismatch("ragged matrix")
        rows = [[A.frac(x) for x in row] for row in M]
        self.scales = [_row_scale(A, row) for row in rows]
        lifted = []
        for row, s in zip(rows, self.scales):
            lifted.append([frac_in_ring(A, x * s).rep for x in row])
        r = A.var_count
        extra = []
        for i in range(self.m):
            for f in A.cached_gb:
                v = [MPoly.zero(r) for _ in range(self.m)]
                v[i] = f
                extra.append(v)
        if self.n == 0:
            self.sys = None
        else:
            self.sys = LinearSystemR(lifted, extra, nvars=r, domain=ZZ, order=GREVLEX)

    def particular(self, b):
        A = self.A
        if len(b) != self.m:
            raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {self.m}")
        rhs = []
        for x, s in zip(b, self.scales):
            h = frac_in_ring(A, A.frac(x) * s)
            if h is None:
                return None
            rhs.append(h.rep)
        if self.sys is None:
            return [] if all(h.is_zero() for h in rhs) else None
        x = self.sys.particular(rhs)
        if x is None:
            return None
        return [A.elem(v) for v in x]

    def kernel(self):
        if self.sys is None:
            return []
        out, seen = [], set()
        for v in self.sys.kernel():
            w = tuple(self.A.elem(x) for x in v)
            if all(e.is_zero() for e in w) or w in seen:
                continue
            seen.add(w)
            out.append(list(w))
        return out


def solve_linear_A(A: RingPresentation, M, b):
    """Solve ``M x = b`` with x in A^n.

    Returns ``(x0, kernel_generators)`` or ``None`` if there is no solution.
    Entries of M and b may be ints, ring elements, fractions or texts.
    """
    if len(b) != len(M):
        raise DimensionMismatch("matrix and right-hand side disagree")
    sys_ = LinearSystemA(A, M)
    x0 = sys_.particular(b)
    if x0 is None:
        return None
    return x0, sys_.kernel()


def _same_owner(M1: AModule, M2: AModule):
    if M1.owner is not M2.owner and M1.owner != M2.owner:
        raise OwnerMismatch("modules over different rings")
    if M1.ambient_dim != M2.ambient_dim:
        raise DimensionMismatch("modules in different ambient spaces")


def module_subset(M1: AModule, M2: AModule) -> bool:
    _same_owner(M1, M2)
    A = M1.owner
    if not M1.gens:
        return True
    if not M2.gens:
        return all(all(x.is_zero() for x in g) for g in M1.gens)
    d = M1.ambient_dim
    M = [[g[i] for g in M2.gens] for i in range(d)]
    sys_ = LinearSystemA(A, M)
    return all(sys_.particular(list(g)) is not None for g in M1.gens)


def module_intersect(M1: AModule, M2: AModule) -> AModule:
    _same_owner(M1, M2)
    A, d = M1.owner, M1.ambient_dim
    u = len(M1.gens)
    if not M1.gens or not M2.gens:
        return AModule(A, d, ())
    M = [[g[i] for g in M1.gens] + [-g[i] for g in M2.gens] for i in range(d)]
    gens, seen = [], []
    for v in LinearSystemA(A, M).kernel():
        vec = []
        for i in range(d):
            acc = A.frac(0)
            for k in range(u):
                if not v[k].is_zero():
                    acc = acc + M1.gens[k][i] * v[k]
            vec.append(acc)
        if all(x.is_zero() for x in vec) or any(_vec_eq(vec, s) for s in seen):
            continue
        seen.append(vec)
        gens.append(tuple(vec))
    return AModule(A, d, tuple(gens))


def _vec_eq(a, b):
    return all(x == y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# quotients ZZ[X]/I

def factor_integer(a: int):
    """Prime factors of |a| with multiplicity, by trial division."""
    a = abs(a)
    out, p = [], 2
    while p * p <= a:
        while a % p == 0:
            out.append(p)
            a //= p
        p += 1 if p == 2 else 2
    if a > 1:
        out.append(a)
    return out


def _prime_layer(gens, nvars, p):
    """Representatives of ZZ[X]/I when I ∩ ZZ = (p): lifts of F_p standard monomials."""
    Fp = GF(p)
    red = [g.change_domain(Fp) for g in gens]
    hd = hilbert_data(red, nvars, p=p)
    if not hd.finite:
        return None, hd
    mons = [MPoly({m: 1}, nvars) for m in hd.standard_monomials]
    reps = []
    for coeffs in product(range(p), repeat=len(mons)):
        f = MPoly.zero(nvars)
        for c, m in zip(coeffs, mons):
            if c:
                f = f + m * c
        reps.append(f)
    return reps, hd


def _colon_integer(gens, nvars, q):
    """Generators of {f in ZZ[X] : q*f in (gens)}."""
    sys_ = LinearSystemR([[MPoly.const(q, nvars)]], [[g] for g in gens], nvars=nvars,
                         domain=ZZ, order=GREVLEX)
    return [v[0] for v in sys_.kernel() if not v[0].is_zero()]


def ring_quotient_reps(gens, nvars):
    """Representatives of ZZ[X_1..X_nvars]/(gens) if finite.

    Returns ``(reps or None, a, primes, layers)``.
    """
    gens = [g for g in gens if not g.is_zero()]
    a = elim_integer(gens) if gens else 0
    if a == 0:
        return None, 0, (), ()
    if a == 1:
        return [MPoly.zero(nvars)], 1, (), ()
    primes = factor_integer(a)
    layers = []
    reps, hd = _prime_layer(gens + [MPoly.const(primes[0], nvars)], nvars, primes[0])
    layers.append(PrimeStep(primes[0], (), 1, hd, len(reps) if reps is not None else None))
    if reps is None:
        return None, a, tuple(primes), tuple(layers)
    q = 1
    for i in range(1, len(primes)):
        q *= primes[i - 1]
        nxt = gens + [MPoly.const(q * primes[i], nvars)]
        J = _colon_integer(nxt, nvars, q)
        b = elim_integer(J)
        if b == 1:
            sub, hd = [MPoly.zero(nvars)], None
        else:
            sub, hd = _prime_layer(J, nvars, b)
        layers.append(PrimeStep(primes[i], tuple(J), q, hd, len(sub) if sub is not None else None))
        if sub is None:
            return None, a, tuple(primes), tuple(layers)
        reps = [r + s * q for r in reps for s in sub]
    return reps, a, tuple(primes), tuple(layers)


# ---------------------------------------------------------------------------
# rank-one quotients

def _frac_sort_key(x: FracElem):
    return (x.den.sort_key(), x.num.sort_key())


def _simplify(A, x: FracElem) -> FracElem:
    h = frac_in_ring(A, x)
    return A.frac(h) if h is not None else x


def quotient_finite(M1: AModule, M2: AModule) -> QuotientReport:
    """Decide whether M2/M1 is finite and, if so, list representatives."""
    _same_owner(M1, M2)
    A = M1.owner
    if M1.ambient_dim != 1:
        raise DimensionMismatch("quotients are supported for modules inside K only")
    if not module_subset(M1, M2):
        raise NotSubmodule("first module is not contained in the second")
    a_gens, b_gens = M1.scalars(), M2.scalars()
    scale = A.one()
    for x in a_gens + b_gens:
        if not (x.den == 1):
            scale = scale * x.den
    a = [frac_in_ring(A, x * scale) for x in a_gens]
    b = [frac_in_ring(A, x * scale) for x in b_gens]
    current = [x for x in a if not x.is_zero()]
    reps = [A.zero()]
    steps = []
    witness = {"scale": scale, "steps": steps}
    r = A.var_count
    for g in b:
        if g.is_zero() or any(g == c for c in current):
            continue
        if current:
            K = LinearSystemA(A, [[g] + [-c for c in current]]).kernel()
            J = [v[0] for v in K if not v[0].is_zero()]
        else:
            J = []
        lifted = list(A.cached_gb) + [j.rep for j in J]
        sub, integer, primes, layers = ring_quotient_reps(lifted, r)
        steps.append(ChainStep(g, tuple(J), integer, primes, layers,
                               len(sub) if sub is not None else None))
        if sub is None:
            return QuotientReport(False, (), witness)
        reps = [x + A.elem(s) * g for x in reps for s in sub]
        current.append(g)
    out = []
    for x in sorted(set(reps), key=lambda e: e.sort_key()):
        f = _simplify(A, FracElem(x, scale))
        if any(M1.contains(f - y) for y in out):
            continue
        out.append(f)
    out.sort(key=lambda e: (not e.is_zero(), _frac_sort_key(e)))
    return QuotientReport(True, tuple(out), witness)


def check_integrality(A: RingPresentation, x, certificate=None):
    """Check that ``x`` in K is a root of a monic polynomial over A.

    ``certificate`` lists the coefficients c_0..c_{d-1} (low degree first) of
    a monic X^d + ... ; without one, only elements of A itself are accepted.
    """
    x = A.frac(x)
    if certificate is None:
        if frac_in_ring(A, x) is None:
            raise NotIntegral(f"{x} has no integrality certificate")
        return True
    coeffs = [A.elem(c) for c in certificate]
    acc = A.frac(1)
    for c in reversed(coeffs):
        acc = acc * x + c
    if not acc.is_zero():
        raise NotIntegral(f"{x} is not a root of its certificate")
    return True


def nth_division_reps(A: RingPresentation, closure_gens, n: int, certificates=None) -> QuotientReport:
    """Representatives of ((1/n)A ∩ A_K)/A, with A_K spanned by ``closure_gens``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    gens = [A.frac(g) for g in closure_gens]
    certs = certificates if certificates is not None else [None] * len(gens)
    for g, c in zip(gens, certs):
        check_integrality(A, g, c)
    if not any(g == 1 for g in gens):
        gens = [A.frac(1)] + gens
    third = AModule.rank_one(A, [A.frac(1, n)])
    AK = AModule.rank_one(A, gens)
    inter = module_intersect(third, AK)
    one = AModule.rank_one(A, [A.frac(1)])
    if not inter.gens:
        inter = one
    else:
        inter = AModule.rank_one(A, inter.scalars() + [A.frac(1)])
    rep = quotient_finite(one, inter)
    rep.witness["intersection"] = inter.scalars()
    return rep
