"""Exact arithmetic core: Gaussian rationals, polynomials, jets, linear algebra."""

from .bivar import BivarPoly
from .gaussian import I, ONE, ZERO, GaussianRational, gq
from .jet import ExpPoly, Jet, jet_mul, jet_of_exppoly, jet_of_poly
from .linalg import det, identity, matmul, nullspace, rank, solve
from .poly import FactoredPoly, Poly, divide_by_root, exact_div, expand
from .text import format_poly, poly_from_json, poly_to_json

__all__ = [
    "BivarPoly",
    "ExpPoly",
    "FactoredPoly",
    "GaussianRational",
    "I",
    "Jet",
    "ONE",
    "Poly",
    "ZERO",
    "det",
    "divide_by_root",
    "exact_div",
    "expand",
    "format_poly",
    "gq",
    "identity",
    "jet_mul",
    "jet_of_exppoly",
    "jet_of_poly",
    "matmul",
    "nullspace",
    "poly_from_json",
    "poly_to_json",
    "rank",
    "solve",
]
