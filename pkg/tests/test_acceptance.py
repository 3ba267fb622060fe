"""Acceptance criteria 1-6, each at its stated tolerance and time limit.

Every criterion prints one ``[PASS]``/``[FAIL]`` line with its runtime; the
lines are repeated in the terminal summary.  Run directly
(``python tests/test_acceptance.py``) to get only the six lines.
"""
from __future__ import annotations

import io
import json
import sys
import time
from itertools import combinations
from math import comb, gcd
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).resolve().parent))

from disceq.cli import run as cli_run                                        # noqa: E402
from disceq.etale import elem_equiv, poly_equiv, rational_algebra, splitting_data  # noqa: E402
from disceq.etale.splitting import disc_native, disc_product                  # noqa: E402
from disceq.modules import AModule, nth_division_reps, quotient_finite       # noqa: E402
from disceq.oracle import CandidateStrategy                                  # noqa: E402
from disceq.polyalg import (MPoly, ideal_member, normal_form, syzygies)      # noqa: E402
from disceq.polyalg.groebner import mat_vec                                  # noqa: E402
from disceq.polyalg.univariate import discriminant, taylor_shift             # noqa: E402
from disceq.rings import integers, make_ring                                 # noqa: E402
from disceq.solver import (brute_force_poly_disc, counterexample_family,     # noqa: E402
                           solve_order_disc, solve_poly_disc, subring_presentation)

from helpers import zz_order_instance, zz_poly_instance                      # noqa: E402
from strategies import int_polys, mpolys, nonzero                            # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
Z = integers()
RESULTS: list[str] = []
CASES = 200          # randomized cases per property suite


def record(capsys, number: int, title: str, ok: bool, seconds: float, limit: float, detail: str = ""):
    line = (f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} "
            f"({seconds:.2f} s, limit {limit:g} s){' - ' + detail if detail else ''}")
    RESULTS.append(line)
    if capsys is not None:
        with capsys.disabled():
            print("\n" + line)
    else:
        print(line)
    return line


def match_classes(reps, polys, classes, equiv):
    """Each brute-force class is matched by exactly one representative and vice versa."""
    if len(reps) != len(classes):
        return False
    used = set()
    for cls in classes:
        hits = [i for i, R in enumerate(reps) if equiv(R, polys[cls[0]])]
        if len(hits) != 1 or hits[0] in used:
            return False
        used.add(hits[0])
    return True


# ---------------------------------------------------------------------------
# criterion 1

def criterion_1():
    expected = {1: 1, 5: 1, 8: 1, 12: 1, 13: 1, -4: 1, -3: 1, 2: 0, 3: 0, 6: 0, 7: 0}
    details = []
    ok = True
    for delta, count in expected.items():
        rep = solve_poly_disc(zz_poly_instance(2, delta))
        bf = brute_force_poly_disc(2, delta, 50)
        reps = [[int(c) for c in F] for F in rep.representatives]
        good = (len(reps) == count and rep.complete
                and match_classes(reps, bf.polynomials, bf.classes,
                                  lambda R, F: poly_equiv(Z, R, list(F)) is not None)
                and all(discriminant(R) == delta for R in reps))
        ok = ok and good
        details.append(f"{delta}:{len(reps)}")
    return ok, "classes " + " ".join(details)


def test_criterion_1_quadratic_vs_brute_force(capsys):
    t = time.perf_counter()
    ok, detail = criterion_1()
    dt = time.perf_counter() - t
    record(capsys, 1, "quadratic solver vs brute force", ok and dt < 10, dt, 10, detail)
    assert ok and dt < 10


# ---------------------------------------------------------------------------
# criterion 2

def criterion_2():
    inst = zz_poly_instance(3, -23, P=[-1, -1, 0, 1], strategy=CandidateStrategy.bounded(4))
    rep = solve_poly_disc(inst)
    bf = brute_force_poly_disc(3, -23, 20)
    reps = [[int(c) for c in F] for F in rep.representatives]
    matched = True
    for cls in bf.classes:
        hits = [R for R in reps if poly_equiv(Z, R, list(bf.polynomials[cls[0]])) is not None]
        matched = matched and len(hits) == 1
    exact = all(discriminant(R) == -23 for R in reps)
    ok = matched and exact and rep.complete is False
    return ok, (f"{len(bf.classes)} brute-force classes matched, {len(reps)} representatives, "
                f"complete={rep.complete}")


@pytest.mark.slow
def test_criterion_2_cubic_spot_check(capsys):
    t = time.perf_counter()
    ok, detail = criterion_2()
    dt = time.perf_counter() - t
    record(capsys, 2, "cubic spot-check, delta = -23", ok and dt < 300, dt, 300, detail)
    assert ok and dt < 300


# ---------------------------------------------------------------------------
# criterion 3

def _brute_force_order(P, delta, box=10):
    Om = rational_algebra(P)
    sols = [Om.elem([x, y]) for x in range(-box, box + 1) for y in range(-box, box + 1)
            if disc_native(Om.elem([x, y])) == delta]
    classes = []
    for a in sols:
        for cls in classes:
            if elem_equiv(a, cls[0]) is not None:
                cls.append(a)
                break
        else:
            classes.append([a])
    return Om, classes


def criterion_3():
    details, ok = [], True
    for P, delta, expect in (([1, 0, 1], -4, {(0, 1), (0, -1)}),
                             ([-5, 0, 1], 20, {(0, 1), (0, -1)})):
        rep = solve_order_disc(zz_order_instance(P, [[0, 1]], delta))
        coords = {tuple(int(c) for c in a.coords) for a in rep.representatives}
        Om, classes = _brute_force_order(P, delta)
        rep_alg = rep.representatives[0].owner if rep.representatives else Om
        good = coords == expect and len(classes) == len(coords)
        for cls in classes:
            b = rep_alg.elem(list(cls[0].coords))
            good = good and sum(elem_equiv(b, r) is not None for r in rep.representatives) == 1
        ok = ok and good and rep.complete
        details.append(f"delta {delta}: {len(coords)} classes")
    return ok, ", ".join(details)


def test_criterion_3_order_solver(capsys):
    t = time.perf_counter()
    ok, detail = criterion_3()
    dt = time.perf_counter() - t
    record(capsys, 3, "order solver on ZZ[i] and ZZ[sqrt 5]", ok and dt < 10, dt, 10, detail)
    assert ok and dt < 10


# ---------------------------------------------------------------------------
# criterion 4

def _counterexample_instance(n, path: Path):
    A = subring_presentation(n)
    names = list(A.var_names)
    closure = []
    for k in range(1, n):
        # t^k = U_k / C(n, k), a root of X^n - U_n^k
        cert = [f"-{names[-1]}^{k}"] + ["0"] * (n - 1)
        closure.append({"element": f"{names[k - 1]}/{comb(n, k)}", "certificate": cert})
    roots = [["0"], ["1"], ["-1"]][:n] if n == 3 else [["-1"], ["1"]]
    P = "X^3 - X" if n == 3 else "X^2 - 1"
    data = {"schema_version": 1, "kind": "poly-disc", "name": f"counterexample_n{n}",
            "ring": {"names": names, "relations": [r.fmt(names) for r in A.relations]},
            "degree": n, "delta": -108 if n == 3 else 4,
            "splitting": {"P": P, "Q": ["0", "1"], "roots": roots},
            "closure_AK": closure, "strategy": {"variant": "exhaustive"}}
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


def criterion_4(tmp: Path):
    details, ok = [], True
    for n, c in ((2, 1), (3, 2)):
        rec = counterexample_family(n, c, 10)
        qr = nth_division_reps(rec.ring, rec.closure_gens, n,
                               [list(x) for x in rec.closure_certificates])
        inst = _counterexample_instance(n, tmp / f"cx{n}.inst")
        code = cli_run(["solve-poly-disc", str(inst), "-q"], stdout=io.StringIO(), stderr=io.StringIO())
        good = (all(rec.disc_ok) and len(rec.disc_ok) == 10 and all(rec.inequivalent.values())
                and len(rec.inequivalent) == 45 and not qr.finite and code == 2)
        ok = ok and good
        details.append(f"n={n}: D ok {sum(rec.disc_ok)}/10, inequivalent pairs "
                       f"{sum(rec.inequivalent.values())}/45, quotient "
                       f"{'finite' if qr.finite else 'infinite'}, exit {code}")
    golden = cli_run(["solve-poly-disc", str(ROOT / "instances" / "counterexample_ring.inst"), "-q"],
                     stdout=io.StringIO(), stderr=io.StringIO())
    ok = ok and golden == 2
    return ok, "; ".join(details)


def test_criterion_4_counterexample_regression(capsys, tmp_path):
    t = time.perf_counter()
    ok, detail = criterion_4(tmp_path)
    dt = time.perf_counter() - t
    record(capsys, 4, "counterexample family regression", ok and dt < 60, dt, 60, detail)
    assert ok and dt < 60


# ---------------------------------------------------------------------------
# criterion 5

def criterion_5():
    qr = quotient_finite(AModule.rank_one(Z, [Z.frac(6)]), AModule.rank_one(Z, [Z.frac(1)]))
    reps = sorted(int(r.num) for r in qr.representatives)
    ok1 = qr.finite and reps == [0, 1, 2, 3, 4, 5] and set(qr.primes) == {2, 3}
    A = make_ring(["w"], ["w^2 - 5"])
    half = A.parse_frac("(1 + w)/2")
    qr2 = nth_division_reps(A, [A.frac(1), half], 2, [None, [-1, -1]])
    one = AModule.rank_one(A, [A.frac(1)])
    targets = [A.frac(0), half]
    ok2 = qr2.finite and len(qr2.representatives) == 2 and all(
        sum(one.contains([r - t]) for r in qr2.representatives) == 1 for t in targets)
    return ok1 and ok2, (f"ZZ/6ZZ reps {reps} primes {sorted(set(qr.primes))}; "
                         f"ZZ[sqrt 5] reps {[r.fmt() for r in qr2.representatives]}")


def test_criterion_5_quotient_machinery(capsys):
    t = time.perf_counter()
    ok, detail = criterion_5()
    dt = time.perf_counter() - t
    record(capsys, 5, "quotient machinery", ok and dt < 10, dt, 10, detail)
    assert ok and dt < 10


# ---------------------------------------------------------------------------
# criterion 6: property suites, fixed seed (derandomized hypothesis profile)

SUITE_COUNTS: dict[str, int] = {}


def _count(name):
    SUITE_COUNTS[name] = SUITE_COUNTS.get(name, 0) + 1


XY = 2


@settings(max_examples=CASES, derandomize=True, deadline=None)
@given(st.lists(nonzero(mpolys(max_deg=2)), min_size=1, max_size=3),
       st.lists(mpolys(max_deg=1, max_terms=3), min_size=3, max_size=3), mpolys(max_deg=2))
def _suite_membership(gens, mult, noise):
    g = sum((m * f for m, f in zip(mult, gens)), MPoly.zero(XY)) + noise
    cof = ideal_member(g, gens)
    assert (cof is not None) == normal_form(g, gens).is_zero()
    _count("membership <=> zero normal form")


@settings(max_examples=CASES, derandomize=True, deadline=None)
@given(st.lists(nonzero(mpolys(max_deg=2)), min_size=1, max_size=3),
       st.lists(mpolys(max_deg=2, max_terms=3), min_size=3, max_size=3))
def _suite_cofactors(gens, mult):
    g = sum((m * f for m, f in zip(mult, gens)), MPoly.zero(XY))
    cof = ideal_member(g, gens)
    assert cof is not None
    assert sum((c * f for c, f in zip(cof, gens)), MPoly.zero(XY)) == g
    _count("cofactor recombination")


@settings(max_examples=CASES, derandomize=True, deadline=None)
@given(st.integers(1, 2).flatmap(lambda m: st.integers(2, 3).flatmap(
    lambda n: st.lists(st.lists(mpolys(max_deg=1, max_terms=3), min_size=n, max_size=n),
                       min_size=m, max_size=m))),
    st.lists(mpolys(max_deg=1, max_terms=2), min_size=4, max_size=4))
def _suite_syzygy(M, mult):
    K = syzygies(M)
    for v in K:
        assert all(e.is_zero() for e in mat_vec(M, v))
    if K:
        combo = [MPoly.zero(XY)] * len(M[0])
        for r, v in zip(mult, K):
            combo = [a + r * b for a, b in zip(combo, v)]
        assert all(e.is_zero() for e in mat_vec(M, combo))
    _count("syzygy annihilation")


@settings(max_examples=CASES, derandomize=True, deadline=None)
@given(int_polys(2, 5), st.integers(-20, 20))
def _suite_disc_shift(F, a):
    assert discriminant(taylor_shift(F, a)) == discriminant(F)
    _count("discriminant translation invariance (n <= 5)")


_ALGEBRAS = {}


def _algebra(P):
    key = tuple(P)
    if key not in _ALGEBRAS:
        Om = rational_algebra(list(P))
        _ALGEBRAS[key] = Om
    return _ALGEBRAS[key]


@settings(max_examples=CASES, derandomize=True, deadline=None)
@given(int_polys(2, 4, 5).filter(lambda F: discriminant(F) != 0),
       st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4), min_size=4, max_size=4),
       st.fractions(min_value=-9, max_value=9, max_denominator=5))
def _suite_disc_element_shift(P, coords, a):
    Om = _algebra(P)
    al = Om.elem(coords[:Om.degree])
    assert disc_native(al + Om.scalar(a)) == disc_native(al)
    _count("disc_element translation invariance")


_SPLIT = {}


def _split(P):
    if tuple(P) not in _SPLIT:
        Om = rational_algebra(P)
        _SPLIT[tuple(P)] = (Om, splitting_data(Om))
    return _SPLIT[tuple(P)]


@settings(max_examples=CASES, derandomize=True, deadline=None)
@given(st.sampled_from([(-5, 0, 1), (1, 0, 1)]),
       st.fractions(min_value=-9, max_value=9, max_denominator=7),
       st.fractions(min_value=-9, max_value=9, max_denominator=7))
def _suite_product_formula(P, x, y):
    Om, S = _split(list(P))
    al = Om.elem([x, y])
    assert disc_product(al, S) == S.field.scalar(disc_native(al))
    _count("product formula vs Sylvester formula")


def _lattice_index(vectors):
    """Index in ZZ^2 of the lattice spanned by integer vectors: gcd of 2x2 minors."""
    g = 0
    for u, v in combinations(vectors, 2):
        g = gcd(g, u[0] * v[1] - u[1] * v[0])
    return g


_QRINGS = {}


@settings(max_examples=CASES, derandomize=True, deadline=None)
@given(st.sampled_from([2, 3, 5, -1, -2]),
       st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)).filter(lambda p: p != (0, 0)),
                min_size=1, max_size=2),
       st.integers(0, 10 ** 6))
def _suite_representatives(d, gens, salt):
    # A = ZZ[w], w^2 = d; M1 = the ideal (gens), M2 = A
    A = _QRINGS.setdefault(d, make_ring(["w"], [f"w^2 - ({d})"]))
    w = A.gens()[0]
    elems = [A.elem(a) + w * b for a, b in gens]
    # the ideal as a ZZ-lattice: g and g*w for each generator
    vecs = []
    for a, b in gens:
        vecs += [(a, b), (b * d, a)]
    index = _lattice_index(vecs)
    M1 = AModule.rank_one(A, [A.frac(e) for e in elems])
    M2 = AModule.rank_one(A, [A.frac(1)])
    qr = quotient_finite(M1, M2)
    reps = qr.representatives
    assert qr.finite and len(reps) == index
    for r1, r2 in combinations(reps, 2):
        assert not M1.contains([r1 - r2])
    # brute-force coverage at bounded degree: p + q w with |p|, |q| <= 4
    box = [(p, q) for p in range(-4, 5) for q in range(-4, 5)]
    start = salt % len(box)
    for p, q in (box[start:] + box[:start])[:12]:
        x = A.frac(A.elem(p) + w * q)
        assert sum(M1.contains([x - r]) for r in reps) == 1
    _count("representative systems: non-congruent, brute-force coverage")


SUITES = [_suite_membership, _suite_cofactors, _suite_syzygy, _suite_disc_shift,
          _suite_disc_element_shift, _suite_product_formula, _suite_representatives]


def criterion_6():
    SUITE_COUNTS.clear()
    failures = []
    for suite in SUITES:
        try:
            suite()
        except Exception as exc:          # a failing property: report it, keep running the rest
            failures.append(f"{suite.__name__}: {type(exc).__name__}")
    short = all(v >= CASES for v in SUITE_COUNTS.values()) and len(SUITE_COUNTS) == len(SUITES)
    detail = ", ".join(f"{k} {v}" for k, v in SUITE_COUNTS.items())
    if failures:
        detail += "; failures: " + "; ".join(failures)
    return not failures and short, detail


@pytest.mark.slow
def test_criterion_6_property_suites(capsys):
    t = time.perf_counter()
    ok, detail = criterion_6()
    dt = time.perf_counter() - t
    record(capsys, 6, "property suites", ok and dt < 300, dt, 300, detail)
    assert ok and dt < 300


if __name__ == "__main__":
    import tempfile
    checks = [(1, "quadratic solver vs brute force", criterion_1, 10),
              (2, "cubic spot-check, delta = -23", criterion_2, 300),
              (3, "order solver on ZZ[i] and ZZ[sqrt 5]", criterion_3, 10),
              (4, "counterexample family regression", None, 60),
              (5, "quotient machinery", criterion_5, 10),
              (6, "property suites", criterion_6, 300)]
    all_ok = True
    for num, title, fn, limit in checks:
        t = time.perf_counter()
        if fn is None:
            with tempfile.TemporaryDirectory() as tmp:
                ok, detail = criterion_4(Path(tmp))
        else:
            ok, detail = fn()
        dt = time.perf_counter() - t
        record(None, num, title, ok and dt < limit, dt, limit, detail)
        all_ok = all_ok and ok and dt < limit
    sys.exit(0 if all_ok else 1)
