"""Etale algebras over K, splitting fields, orders and equivalence tests."""
from .algebra import EtaleAlgebra, QElem, QuotientAlgebra, column_basis, rank, rref, solve_field
from .closure import ring_of_integers
from .orders import (OrderModule, check_order, distinct_zero_count, elem_equiv,
                     order_K_part_reps, poly_equiv)
from .splitting import (SplittingData, charpoly_from_conjugates, check_integral_element,
                        conjugates, disc_element, disc_native, disc_product,
                        integralize_generator, make_splitting_data, rational_algebra,
                        roots_in_field, splitting_data, verify_splitting_data)

AlgElem = QElem

__all__ = [
    "AlgElem", "EtaleAlgebra", "QElem", "QuotientAlgebra", "OrderModule", "SplittingData",
    "check_order", "order_K_part_reps", "poly_equiv", "elem_equiv", "distinct_zero_count",
    "integralize_generator", "splitting_data", "verify_splitting_data", "make_splitting_data",
    "conjugates", "disc_element", "disc_native", "disc_product", "charpoly_from_conjugates",
    "check_integral_element", "ring_of_integers", "rational_algebra", "roots_in_field",
    "column_basis", "rank", "rref", "solve_field",
]
