"""Discriminant equations over finitely generated domains."""

__version__ = "0.1.0"

from .errors import ConditionFailure, DiscEqError
from .etale import (EtaleAlgebra, OrderModule, SplittingData, check_order, elem_equiv,
                    make_splitting_data, poly_equiv, rational_algebra, splitting_data)
from .modules import AModule, QuotientReport, nth_division_reps, quotient_finite, solve_linear_A
from .oracle import CandidateSet, CandidateStrategy, candidate_set
from .rings import FracElem, RingElem, RingPresentation, integers, make_ring
from .solver import (OrderDiscInstance, PolyDiscInstance, SolutionReport,
                     brute_force_poly_disc, counterexample_family, solve_order_disc,
                     solve_poly_disc)

__all__ = [
    "ConditionFailure", "DiscEqError",
    "RingPresentation", "RingElem", "FracElem", "make_ring", "integers",
    "AModule", "QuotientReport", "quotient_finite", "nth_division_reps", "solve_linear_A",
    "EtaleAlgebra", "SplittingData", "OrderModule", "splitting_data", "make_splitting_data",
    "check_order", "poly_equiv", "elem_equiv", "rational_algebra",
    "CandidateStrategy", "CandidateSet", "candidate_set",
    "PolyDiscInstance", "OrderDiscInstance", "SolutionReport", "solve_poly_disc",
    "solve_order_disc", "brute_force_poly_disc", "counterexample_family",
]
