from __future__ import annotations

from itertools import combinations

import pytest

from disceq.errors import ConditionFailure, UnsupportedDegree, ZeroDelta
from disceq.etale import EtaleAlgebra, check_order, elem_equiv, make_splitting_data, poly_equiv
from disceq.etale.splitting import disc_native
from disceq.oracle import CandidateStrategy
from disceq.polyalg.univariate import discriminant
from disceq.rings import frac_in_ring, integers
from disceq.solver import (OrderDiscInstance, PolyDiscInstance, brute_force_poly_disc,
                           counterexample_family, fmt_poly, solve_order_disc, solve_poly_disc,
                           subring_presentation)

from helpers import zz_order_instance, zz_poly_instance

Z = integers()


def ints(F):
    return [int(c) for c in F]


@pytest.mark.parametrize("delta,expect", [
    (5, [-1, 1, 1]),        # X^2 + X - 1
    (-4, [1, 0, 1]),        # X^2 + 1
])
def test_quadratic_examples(delta, expect):
    rep = solve_poly_disc(zz_poly_instance(2, delta))
    assert [ints(F) for F in rep.representatives] == [expect]
    assert rep.complete


def test_quadratic_no_solutions():
    rep = solve_poly_disc(zz_poly_instance(2, 2))
    assert rep.representatives == () and rep.complete


def test_representatives_are_inequivalent_and_exact():
    rep = solve_poly_disc(zz_poly_instance(2, 12))
    for F in rep.representatives:
        assert discriminant(F) == 12 and F[-1] == 1
    for F, G in combinations(rep.representatives, 2):
        assert poly_equiv(Z, F, G) is None


def test_trace_records_every_tuple():
    rep = solve_poly_disc(zz_poly_instance(2, -4))
    assert len(rep.trace) == len(rep.candidates.elements)
    assert {t.verdict for t in rep.trace} <= {"cocycle", "product", "not-integral", "unsolvable", "solved"}


def test_zero_delta():
    with pytest.raises(ZeroDelta):
        solve_poly_disc(zz_poly_instance(2, 0, P=[-5, 0, 1]))


def test_solver_is_deterministic():
    a = solve_poly_disc(zz_poly_instance(2, 13))
    b = solve_poly_disc(zz_poly_instance(2, 13))
    assert a.representatives == b.representatives
    assert [(t.gammas, t.verdict) for t in a.trace] == [(t.gammas, t.verdict) for t in b.trace]


def test_order_examples():
    rep = solve_order_disc(zz_order_instance([1, 0, 1], [[0, 1]], -4))
    assert sorted(tuple(a.coords) for a in rep.representatives) == [(0, -1), (0, 1)]
    rep = solve_order_disc(zz_order_instance([-5, 0, 1], [[0, 1]], 20))
    assert sorted(tuple(a.coords) for a in rep.representatives) == [(0, -1), (0, 1)]
    rep = solve_order_disc(zz_order_instance([1, 0, 1], [[0, 1]], 3))
    assert rep.representatives == () and rep.complete


def test_order_solution_properties():
    inst = zz_order_instance([1, 0, 1], [[0, 1]], -4)
    rep = solve_order_disc(inst)
    for a in rep.representatives:
        assert inst.order.contains(a) and disc_native(a) == -4
    for a, b in combinations(rep.representatives, 2):
        assert elem_equiv(a, b) is None


def test_brute_force_examples():
    # |b| <= 50 odd with c = (b^2 - 5)/4 also in the box: |b| <= 13
    res = brute_force_poly_disc(2, 5, 50)
    assert len(res.polynomials) == 14 and len(res.classes) == 1
    assert all(p[2] == 1 and p[1] ** 2 - 4 * p[0] == 5 for p in res.polynomials)
    assert brute_force_poly_disc(2, 3, 50).polynomials == ()
    cubic = brute_force_poly_disc(3, -23, 20)
    assert (-1, -1, 0, 1) in {tuple(p) for p in cubic.polynomials}
    with pytest.raises(UnsupportedDegree):
        brute_force_poly_disc(4, 1, 3)


def test_subring_presentation_n2():
    A = subring_presentation(2)
    u, v = A.gens()
    assert u ** 2 == v * 4


def test_counterexample_family_n2():
    rec = counterexample_family(2, 1, 3)
    assert rec.delta == rec.ring.elem(4)
    assert all(rec.disc_ok) and all(rec.inequivalent.values())
    U1, U2 = rec.ring.gens()
    # F_1 = (X + t^3)^2 - 1 = X^2 + 2 t^3 X + t^6 - 1 with 2t = U1 and t^2 = U2
    assert rec.polynomials[0] == [U2 ** 3 - 1, U1 * U2, rec.ring.one()]
    # the X coefficient 2 t^3 is divisible by 2, yet t^3 itself is not in A
    assert frac_in_ring(rec.ring, rec.ring.frac(U1 * U2, 2)) is None


def test_counterexample_family_n3():
    rec = counterexample_family(3, 2, 2)
    assert rec.delta == rec.ring.elem(-108)
    assert all(rec.disc_ok) and all(rec.inequivalent.values())


def test_condition_failure_on_counterexample_ring():
    rec = counterexample_family(2, 1, 1)
    A = rec.ring
    Om = EtaleAlgebra(A, [A.frac(-1), A.frac(0), A.frac(1)])
    S = make_splitting_data(Om, [A.frac(0), A.frac(1)], [[A.frac(-1)], [A.frac(1)]])
    inst = PolyDiscInstance(A, S, 2, 4, CandidateStrategy.exhaustive(),
                            AK_gens=rec.closure_gens,
                            AK_certificates=[list(c) for c in rec.closure_certificates])
    with pytest.raises(ConditionFailure) as exc:
        solve_poly_disc(inst)
    assert exc.value.condition == "e10.1.2m"


def test_order_condition_failure():
    rec = counterexample_family(2, 1, 1)
    A = rec.ring
    Om = EtaleAlgebra(A, [A.frac("-U2"), A.frac(0), A.frac(1)])
    t = Om.scalar(A.parse_frac("U1/2"))
    O = check_order(A, Om, [Om.theta, t, t * Om.theta])
    S = make_splitting_data(Om, [A.frac("-U2"), A.frac(0), A.frac(1)],
                            [[A.frac(0), A.frac(1)], [A.frac(0), A.frac(-1)]])
    inst = OrderDiscInstance(A, Om, O, A.elem("4*U2"), S, CandidateStrategy.exhaustive())
    with pytest.raises(ConditionFailure) as exc:
        solve_order_disc(inst)
    assert exc.value.condition == "e10.1.5m"


def test_fmt_poly():
    assert fmt_poly(Z, [-1, 1, 1]) == "X^2 + X - 1"
    assert fmt_poly(Z, [0, 0, 1]) == "X^2"
    assert fmt_poly(Z, [-3, -2, 0, 1]) == "X^3 - 2*X - 3"
