"""Cyclotomic fields, certified real signs, exact linear algebra and polynomials."""

from .field import CycNumber, cyclotomic_poly, euler_phi, lcm
from .linalg import CycMatrix, kernel, rank, rank_kernel, rref, solve
from .literal import parse_polynomial, parse_scalar, render
from .poly import MultiPoly, render_poly
from .sign import compare_real, rational_bounds, sign_real

__all__ = [
    "CycMatrix",
    "CycNumber",
    "MultiPoly",
    "compare_real",
    "cyclotomic_poly",
    "euler_phi",
    "kernel",
    "lcm",
    "parse_polynomial",
    "parse_scalar",
    "rank",
    "rank_kernel",
    "rational_bounds",
    "render",
    "render_poly",
    "rref",
    "sign_real",
    "solve",
]
