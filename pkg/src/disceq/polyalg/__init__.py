from .domains import GF, QQ, ZZ
from .groebner import (IdealBasis, LinearSystemR, ModuleGB, elim_integer, groebner,
                       ideal_member, normal_form, solve_linear_R, syzygies)
from .mpoly import GREVLEX, LEX, MPoly, elim_order, parse_poly

__all__ = [
    "GF", "QQ", "ZZ", "MPoly", "GREVLEX", "LEX", "elim_order", "parse_poly",
    "groebner", "ideal_member", "normal_form", "syzygies", "solve_linear_R",
    "elim_integer", "IdealBasis", "LinearSystemR", "ModuleGB",
]
