"""Buchberger's algorithm for strong Groebner bases of submodules of R^k.

R is D[X_1..X_r] with D one of ZZ, QQ, GF(p).  Over ZZ the basis is a
*strong* basis: S-polynomials are complemented by GCD-polynomials, so
every leading term of the module is divisible (coefficient included)
by a leading term of the basis, which makes remainders unique.

Module elements are dicts ``{(position, exponents): coeff}`` compared
position-over-term with position 0 largest.  Ideals are the k = 1 case.
"""
from __future__ import annotations

import heapq
from itertools import count

from ..errors import DimensionMismatch, DomainMismatch
from .domains import ZZ
from .mpoly import GREVLEX, MPoly, mono_divides, mono_lcm, mono_sub


class _Elem:
    __slots__ = ("terms", "pos", "exp", "lc")

    def __init__(self, terms, lead):
        self.terms = terms
        self.pos, self.exp = lead
        self.lc = terms[lead]


class ModuleGB:
    """Strong Groebner basis of the submodule generated by ``gens``.

    ``main`` is the number of leading positions that carry the actual
    module; positions ``>= main`` are bookkeeping (cofactor) positions.
    With ``keep_syzygies=False`` elements whose main part vanishes are
    discarded, which is enough for membership-with-cofactors queries.
    """

    def __init__(self, gens, nvars, domain=ZZ, order=GREVLEX, main=None,
                 keep_syzygies=True):
        self.nvars = nvars
        self.domain = domain
        self.order = order
        self.main = main
        self.keep_syzygies = keep_syzygies
        okey = order.key
        self._tkey = lambda t: (-t[0], okey(t[1]))
        self.basis: list[_Elem] = []
        self._build([dict(g) for g in gens if g])

    # -- term helpers -----------------------------------------------------
    def lead(self, f):
        return max(f, key=self._tkey)

    def _is_syzygy(self, lead):
        return self.main is not None and lead[0] >= self.main

    def _normalize(self, f):
        lt = self.lead(f)
        u = self.domain.unit_normal(f[lt])
        if u != 1:
            f = {t: c * u for t, c in f.items()}
            mod = getattr(self.domain, "p", None)
            if mod is not None:
                f = {t: c % mod for t, c in f.items()}
        return _Elem(f, lt)

    @staticmethod
    def _axpy(f, q, shift, g, mod=None):
        """In place: f -= q * x^shift * g."""
        for (p, e), c in g.items():
            t = (p, tuple(a + b for a, b in zip(e, shift)))
            v = f.get(t, 0) - q * c
            if mod is not None:
                v %= mod
            if v:
                f[t] = v
            else:
                f.pop(t, None)

    def _find_reducer(self, pos, exp, c, basis):
        dom = self.domain
        best = None
        for b in basis:
            if b.pos == pos and mono_divides(b.exp, exp):
                if dom.divides(b.lc, c):
                    return b
                if best is None or abs(b.lc) < abs(best.lc):
                    best = b
        return best

    def reduce(self, f, full=True, basis=None):
        """Reduce ``f`` (a term dict); returns the remainder dict."""
        basis = self.basis if basis is None else basis
        dom = self.domain
        mod = getattr(dom, "p", None)
        f = dict(f)
        rem = {}
        while f:
            t = self.lead(f)
            c = f[t]
            b = self._find_reducer(t[0], t[1], c, basis)
            if b is None:
                rem[t] = f.pop(t)
                if not full:
                    break
                continue
            q, r = dom.divmod(c, b.lc)
            if q == 0:
                rem[t] = f.pop(t)
                if not full:
                    break
                continue
            self._axpy(f, q, mono_sub(t[1], b.exp), b.terms, mod)
            if r:
                rem[t] = f.pop(t)
                if not full:
                    break
        rem.update(f)
        return rem

    # -- Buchberger --------------------------------------------------------
    def _build(self, gens):
        dom = self.domain
        single = all(p == 0 for g in gens for (p, _e) in g)
        self._pairs = []
        self._tick = count()
        for g in gens:
            self._add(self.reduce(g, full=False))
        while self._pairs:
            _, _, i, j = heapq.heappop(self._pairs)
            f, g = self.basis[i], self.basis[j]
            L = mono_lcm(f.exp, g.exp)
            a, b = f.lc, g.lc
            sf, sg = mono_sub(L, f.exp), mono_sub(L, g.exp)
            if not dom.is_field and not (dom.divides(a, b) or dom.divides(b, a)):
                gg, s, t = dom.gcdex(a, b)
                h = {}
                self._axpy(h, -s, sf, f.terms)
                self._axpy(h, -t, sg, g.terms)
                self._add(self.reduce(h, full=False))
            coprime = single and all(x == 0 or y == 0 for x, y in zip(f.exp, g.exp))
            if coprime:
                continue
            l = dom.lcm(a, b) if not dom.is_field else 1
            h = {}
            if dom.is_field:
                # field bases are kept monic
                mod = getattr(dom, "p", None)
                self._axpy(h, -1, sf, f.terms, mod)
                self._axpy(h, 1, sg, g.terms, mod)
            else:
                self._axpy(h, -(l // a), sf, f.terms)
                self._axpy(h, l // b, sg, g.terms)
            self._add(self.reduce(h, full=False))
        del self._pairs
        self._interreduce()

    def _add(self, h):
        if not h:
            return
        e = self._normalize(h)
        if not self.keep_syzygies and self._is_syzygy((e.pos, e.exp)):
            return
        j = len(self.basis)
        for i, b in enumerate(self.basis):
            if b.pos == e.pos:
                L = mono_lcm(b.exp, e.exp)
                heapq.heappush(self._pairs, (sum(L), next(self._tick), i, j))
        self.basis.append(e)

    def _interreduce(self):
        dom = self.domain
        elems = sorted(self.basis, key=lambda x: self._tkey((x.pos, x.exp)))
        keep = []
        for k, x in enumerate(elems):
            redundant = False
            for m, y in enumerate(elems):
                if m == k or y.pos != x.pos or not mono_divides(y.exp, x.exp):
                    continue
                if not dom.divides(y.lc, x.lc):
                    continue
                # identical leading terms: keep the earliest one
                if y.exp == x.exp and y.lc == x.lc and m > k:
                    continue
                redundant = True
                break
            if not redundant:
                keep.append(x)
        out = []
        for k, x in enumerate(keep):
            others = keep[:k] + keep[k + 1:]
            tail = {t: c for t, c in x.terms.items() if t != (x.pos, x.exp)}
            terms = self.reduce(tail, full=True, basis=others)
            terms[(x.pos, x.exp)] = x.lc
            out.append(_Elem(terms, (x.pos, x.exp)))
        out.sort(key=lambda x: self._tkey((x.pos, x.exp)), reverse=True)
        self.basis = out

    # -- views ---------------------------------------------------------------
    def elements(self):
        return [dict(b.terms) for b in self.basis]


# ---------------------------------------------------------------------------
# conversions between MPoly vectors and term dicts

def _vec_to_terms(vec, offset=0):
    d = {}
    for i, p in enumerate(vec):
        for m, c in p.terms.items():
            d[(i + offset, m)] = c
    return d


def _terms_to_vec(terms, k, nvars, domain, order, offset=0):
    parts = [dict() for _ in range(k)]
    for (p, m), c in terms.items():
        if offset <= p < offset + k:
            parts[p - offset][m] = c
    return [MPoly(t, nvars, domain, order) for t in parts]


def _check_uniform(polys):
    polys = list(polys)
    if not polys:
        return None
    p0 = polys[0]
    for p in polys[1:]:
        if p.domain != p0.domain or p.nvars != p0.nvars:
            raise DomainMismatch("generators must share domain and variable count")
    return p0


# ---------------------------------------------------------------------------
# ideal-level API

def groebner(gens, order=None):
    """Reduced strong Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    p0 = _check_uniform(gens)
    if p0 is None:
        return []
    order = order or p0.order
    gb = ModuleGB([_vec_to_terms([g]) for g in gens], p0.nvars, p0.domain, order)
    return [_terms_to_vec(e, 1, p0.nvars, p0.domain, order)[0] for e in gb.elements()]


class IdealBasis:
    """A computed basis with normal-form reduction; the workhorse behind ring elements."""

    def __init__(self, gens, nvars, domain=ZZ, order=GREVLEX):
        self.nvars = nvars
        self.domain = domain
        self.order = order
        self._gb = ModuleGB([_vec_to_terms([g.with_order(order)]) for g in gens if g],
                            nvars, domain, order)
        self.polys = [_terms_to_vec(e, 1, nvars, domain, order)[0] for e in self._gb.elements()]

    def normal_form(self, f: MPoly) -> MPoly:
        if not self._gb.basis:
            return f
        r = self._gb.reduce(_vec_to_terms([f]), full=True)
        return _terms_to_vec(r, 1, self.nvars, self.domain, f.order)[0]

    def contains(self, f: MPoly) -> bool:
        return self.normal_form(f).is_zero()

    def integer_generator(self) -> int:
        """Generator ``a >= 0`` of the ideal's intersection with the integers."""
        zero = (0,) * self.nvars
        consts = [abs(int(b.lc)) for b in self._gb.basis if b.exp == zero]
        return min(consts) if consts else 0


def normal_form(g: MPoly, gens) -> MPoly:
    return IdealBasis(gens, g.nvars, g.domain, g.order).normal_form(g)


def ideal_member(g: MPoly, gens):
    """Cofactors ``[g_1..g_s]`` with ``g == sum g_i*f_i``, or ``None`` if ``g`` is not in the ideal."""
    gens = list(gens)
    _check_uniform(gens + [g])
    s = len(gens)
    if g.is_zero():
        return [MPoly.zero(g.nvars, g.domain, g.order) for _ in gens]
    if s == 0:
        return None
    cols = []
    for i, f in enumerate(gens):
        d = _vec_to_terms([f])
        d[(1 + i, (0,) * g.nvars)] = g.domain.convert(1)
        cols.append(d)
    gb = ModuleGB(cols, g.nvars, g.domain, g.order, main=1, keep_syzygies=False)
    r = gb.reduce(_vec_to_terms([g]), full=False)
    if r and gb.lead(r)[0] == 0:
        return None
    w = _terms_to_vec(r, s, g.nvars, g.domain, g.order, offset=1)
    return [-x for x in w]


class LinearSystemR:
    """Solver for ``M x = b`` over R = D[X]; the basis depends on ``M`` only.

    ``extra`` lists additional vectors of R^m (e.g. relations times unit
    vectors) that are added to the column span without cofactor tracking.
    """

    def __init__(self, M, extra=(), nvars=None, domain=ZZ, order=GREVLEX):
        self.m = len(M)
        self.n = len(M[0]) if M else 0
        if any(len(row) != self.n for row in M):
            raise DimensionMismatch("ragged matrix")
        entries = [e for row in M for e in row] + [e for v in extra for e in v]
        p0 = _check_uniform(entries)
        if p0 is not None:
            nvars, domain, order = p0.nvars, p0.domain, p0.order
        self.nvars, self.domain, self.order = nvars, domain, order
        one = domain.convert(1)
        zero_m = (0,) * nvars
        cols = []
        for j in range(self.n):
            d = _vec_to_terms([M[i][j] for i in range(self.m)])
            d[(self.m + j, zero_m)] = one
            cols.append(d)
        for v in extra:
            cols.append(_vec_to_terms(v))
        self.gb = ModuleGB(cols, nvars, domain, order, main=self.m, keep_syzygies=True)

    def particular(self, b):
        if len(b) != self.m:
            raise DimensionMismatch(f"right-hand side has length {len(b)}, expected {self.m}")
        f = _vec_to_terms(b)
        r = self.gb.reduce(f, full=False) if f else {}
        if r and self.gb.lead(r)[0] < self.m:
            return None
        w = _terms_to_vec(r, self.n, self.nvars, self.domain, self.order, offset=self.m)
        return [-x for x in w]

    def kernel(self):
        out = []
        for e in self.gb.elements():
            if all(p >= self.m for (p, _m) in e):
                v = _terms_to_vec(e, self.n, self.nvars, self.domain, self.order, offset=self.m)
                if any(not x.is_zero() for x in v):
                    out.append(v)
        return out


def syzygies(M):
    """Generators of ``{k in R^n : M k = 0}``."""
    return LinearSystemR(M).kernel()


def solve_linear_R(M, b):
    """``(x0, kernel_generators)`` with ``M x0 == b``, or ``None`` if unsolvable."""
    if len(b) != len(M):
        raise DimensionMismatch("matrix and right-hand side disagree")
    sys_ = LinearSystemR(M)
    x0 = sys_.particular(b)
    if x0 is None:
        return None
    return x0, sys_.kernel()


def elim_integer(gens) -> int:
    """Nonnegative generator of ``(gens) ∩ ZZ``; zero means the intersection is trivial."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return 0
    p0 = _check_uniform(gens)
    if p0.domain != ZZ:
        raise DomainMismatch("elim_integer needs integer polynomials")
    return IdealBasis(gens, p0.nvars, ZZ, p0.order).integer_generator()


def mat_vec(M, x):
    out = []
    for row in M:
        acc = None
        for a, b in zip(row, x):
            t = a * b
            acc = t if acc is None else acc + t
        out.append(acc)
    return out
