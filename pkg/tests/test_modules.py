from __future__ import annotations

from math import gcd
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from disceq.errors import DimensionMismatch, NotIntegral, NotSubmodule, OwnerMismatch
from disceq.modules import (AModule, LinearSystemA, check_integrality, factor_integer,
                            module_intersect, module_subset, nth_division_reps, quotient_finite,
                            solve_linear_A)
from disceq.rings import frac_in_ring, integers, make_ring


@pytest.fixture(scope="module")
def Z():
    return integers()


@pytest.fixture(scope="module")
def A2():
    return make_ring(["u", "v"], ["u^2 - 4*v"])


@pytest.fixture(scope="module")
def Z5():
    return make_ring(["w"], ["w^2 - 5"])


def rank_one(A, *gens):
    return AModule.rank_one(A, [A.frac(g) if not isinstance(g, str) else A.parse_frac(g) for g in gens])


def _check_system(A, M, b, sol):
    x0, kern = sol
    for row, bi in zip(M, b):
        acc = A.frac(0)
        for m, x in zip(row, x0):
            acc = acc + A.frac(m) * x
        assert acc == A.frac(bi)
        for v in kern:
            acc = A.frac(0)
            for m, x in zip(row, v):
                acc = acc + A.frac(m) * x
            assert acc == 0


def test_solve_linear_A_over_integers(Z):
    sol = solve_linear_A(Z, [[2, 3]], [1])
    x0, kern = sol
    assert [int(x) for x in x0] == [-1, 1]
    assert [[int(x) for x in v] for v in kern] in ([[3, -2]], [[-3, 2]])
    _check_system(Z, [[2, 3]], [1], sol)


def test_solve_linear_A_rejects_t(A2):
    u, _ = A2.gens()
    assert solve_linear_A(A2, [[2]], [u]) is None


def test_solve_linear_A_identity(Z5):
    beta = Z5.elem("3*w - 1")
    x0, _ = solve_linear_A(Z5, [[1]], [beta])
    assert x0[0] == beta


def test_solve_linear_A_fractions(A2):
    # (u/2) x = v has the solution x = u/2 * ... only through t: t*x = t^2 gives x = t, not in A
    t = A2.parse_frac("u/2")
    assert solve_linear_A(A2, [[t]], [A2.frac("v")]) is None
    sol = solve_linear_A(A2, [[t]], [A2.frac("2*v")])
    assert sol is not None and sol[0][0] == A2.gens()[0]
    with pytest.raises(DimensionMismatch):
        solve_linear_A(A2, [[1, 2]], [1, 2])


def test_module_subset_examples(Z, A2):
    assert module_subset(rank_one(Z, 2), rank_one(Z, 1))
    assert not module_subset(rank_one(Z, 1), rank_one(Z, 2))
    assert module_subset(rank_one(A2, "u^2"), rank_one(A2, "v"))
    with pytest.raises(OwnerMismatch):
        module_subset(rank_one(Z, 1), rank_one(A2, 1))


def test_module_intersect_examples(Z):
    M = module_intersect(rank_one(Z, 2), rank_one(Z, 3))
    assert module_subset(M, rank_one(Z, 6)) and module_subset(rank_one(Z, 6), M)
    R = make_ring(["X"], [])
    I = module_intersect(rank_one(R, "2", "X"), rank_one(R, "3"))
    target = rank_one(R, "6", "3*X")
    assert module_subset(I, target) and module_subset(target, I)
    N = rank_one(Z, 4, 6)
    S = module_intersect(N, N)
    assert module_subset(S, N) and module_subset(N, S)


@given(st.integers(1, 30), st.integers(1, 30))
def test_intersection_of_ideals_of_ZZ(a, b):
    Z = integers()
    M = module_intersect(rank_one(Z, a), rank_one(Z, b))
    lcm = a * b // gcd(a, b)
    assert module_subset(M, rank_one(Z, lcm)) and module_subset(rank_one(Z, lcm), M)


def test_quotient_examples(Z):
    qr = quotient_finite(rank_one(Z, 2), rank_one(Z, 1))
    assert qr.finite and [int(frac_in_ring(Z, r)) for r in qr.representatives] == [0, 1]
    qr = quotient_finite(rank_one(Z, 6), rank_one(Z, 1))
    assert qr.finite and len(qr.representatives) == 6
    assert sorted(set(qr.primes)) == [2, 3]
    qr = quotient_finite(rank_one(Z, 5), rank_one(Z, 5))
    assert qr.finite and len(qr.representatives) == 1 and qr.representatives[0] == 0


def test_quotient_requires_submodule(Z):
    with pytest.raises(NotSubmodule):
        quotient_finite(rank_one(Z, 1), rank_one(Z, 2))


def test_quotient_A_plus_At_is_infinite(A2):
    # M2 = A + A*t: the odd powers t, t^3, t^5, ... all lie in M2 (t^(2k+1) = v^k t)
    # and pairwise differ by a polynomial with odd coefficients, so they are
    # incongruent modulo A = ZZ[2t, t^2]
    M1, M2 = rank_one(A2, 1), rank_one(A2, 1, "u/2")
    assert module_subset(M1, M2)
    qr = quotient_finite(M1, M2)
    assert not qr.finite
    t = A2.parse_frac("u/2")
    odd = [t * A2.frac(A2.gens()[1] ** k) for k in range(5)]
    for i in range(len(odd)):
        assert M2.contains([odd[i]])
        for j in range(i):
            assert not M1.contains([odd[i] - odd[j]])


@given(st.integers(1, 12), st.integers(1, 6))
@settings(max_examples=40)
def test_quotient_size_over_integers(a, d):
    Z = integers()
    M1, M2 = rank_one(Z, a), AModule.rank_one(Z, [Z.frac(1, d)])
    qr = quotient_finite(M1, M2)
    assert qr.finite and len(qr.representatives) == a * d
    reps = qr.representatives
    for i in range(len(reps)):
        for j in range(i):
            assert not M1.contains([reps[i] - reps[j]])


def test_quotient_coverage_in_quadratic_ring(Z5):
    # M2/M1 with M1 = 2A, M2 = A: four classes a + b w with a, b in {0, 1}
    M1, M2 = rank_one(Z5, 2), rank_one(Z5, 1)
    qr = quotient_finite(M1, M2)
    assert qr.finite and len(qr.representatives) == 4
    rng = Random(7)
    for _ in range(40):
        x = Z5.frac(Z5.elem(rng.randint(-9, 9)) + Z5.gens()[0] * rng.randint(-9, 9))
        assert sum(M1.contains([x - r]) for r in qr.representatives) == 1


def test_factor_integer():
    assert factor_integer(360) == [2, 2, 2, 3, 3, 5]
    assert factor_integer(97) == [97]
    assert factor_integer(1) == []


def test_check_integrality(Z5, A2):
    assert check_integrality(Z5, Z5.parse_frac("(1 + w)/2"), [-1, -1])
    with pytest.raises(NotIntegral):
        check_integrality(Z5, Z5.parse_frac("w/2"), [-1, 0])
    with pytest.raises(NotIntegral):
        check_integrality(A2, A2.parse_frac("u/2"))


def test_nth_division_examples(Z, Z5, A2):
    qr = nth_division_reps(Z, [1], 2)
    assert qr.finite and [r == 0 for r in qr.representatives] == [True]
    qr = nth_division_reps(Z5, [Z5.frac(1), Z5.parse_frac("(1 + w)/2")], 2, [None, [-1, -1]])
    assert qr.finite and len(qr.representatives) == 2
    assert qr.representatives[0] == 0
    assert qr.representatives[1] == Z5.parse_frac("(1 + w)/2")
    qr = nth_division_reps(A2, [A2.frac(1), A2.parse_frac("u/2")], 2, [None, ["-v", 0]])
    assert not qr.finite


def test_linear_system_kernel_annihilates(Z5):
    M = [[Z5.frac("w"), Z5.frac(5)], [Z5.frac(1), Z5.frac("w")]]
    K = LinearSystemA(Z5, M).kernel()
    assert K
    for v in K:
        for row in M:
            acc = Z5.frac(0)
            for m, x in zip(row, v):
                acc = acc + m * x
            assert acc == 0
