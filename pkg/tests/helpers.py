"""Instance builders shared by the solver and acceptance suites."""
from __future__ import annotations

from disceq.etale import check_order, rational_algebra, splitting_data
from disceq.oracle import CandidateStrategy
from disceq.rings import integers
from disceq.solver import OrderDiscInstance, PolyDiscInstance

# the splitting field used for each quadratic discriminant: that of X^2 - delta,
# or of X^3 - X (which is QQ itself) for square delta
QUADRATIC_FIELD = {1: [0, -1, 0, 1]}


def field_poly(delta: int):
    return QUADRATIC_FIELD.get(delta, [-delta, 0, 1])


def zz_poly_instance(n, delta, P=None, strategy=None):
    Z = integers()
    Om = rational_algebra(P if P is not None else field_poly(delta))
    S = splitting_data(Om)
    return PolyDiscInstance(Z, S, n, delta, strategy or CandidateStrategy.exhaustive())


def zz_order_instance(P, gens, delta, strategy=None):
    Z = integers()
    Om = rational_algebra(P)
    O = check_order(Z, Om, [Om.elem(g) for g in gens])
    return OrderDiscInstance(Z, Om, O, delta, splitting_data(Om),
                             strategy or CandidateStrategy.exhaustive())
