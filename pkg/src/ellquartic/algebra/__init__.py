"""Exact characteristic-2 arithmetic."""

from .gf import GF2, gf2k, GF2k, GFElement, NotASquareError, common_field, field_sqrt
from .mpoly import ContextMismatch, MPoly, PolyContext, check_certificate, reduce_triangular
from .ratfunc import PoleError, RatFunc, artin_schreier_solve, ratfunc_is_square
from .upoly import UPoly

__all__ = [
    "gf2k", "GF2", "GF2k", "GFElement", "NotASquareError", "common_field", "field_sqrt",
    "ContextMismatch", "MPoly", "PolyContext", "check_certificate", "reduce_triangular",
    "PoleError", "RatFunc", "artin_schreier_solve", "ratfunc_is_square", "UPoly",
]
