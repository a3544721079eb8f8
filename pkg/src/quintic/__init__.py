"""Deterministic integer factorisation in roughly N^(1/5) operations.

The engine sieves candidate factors by their residues modulo a primorial,
derives lattice-reduced coefficient pairs ``(a, b)`` for every residue class
and size window, and finds collisions between babysteps and giantsteps with
product trees and chirp evaluation.
"""

from .arith import NonInvertible
from .driver import (
    DEFAULT_FALLBACK_THRESHOLD,
    Factorization,
    Params,
    SearchUnavailable,
    choose_params,
    factor,
    factor_prime_or_semiprime,
)
from .lattice import Basis2, Vec2, det2, lagrange_gauss
from .orderfind import bsgs_order, element_of_large_order
from .outcomes import Factors, LargeOrder, NoFactorsFound, Prime
from .pairgen import Pair, compute_pair
from .polyring import Poly, geom_eval, multieval_tree, poly_mul, product_tree
from .search import ccheck, find_collisions, main_search, search_lambda
from .smallfactor import pollard_strassen
from .stats import RunStats

__version__ = "0.1.0"

__all__ = [
    "Basis2",
    "DEFAULT_FALLBACK_THRESHOLD",
    "Factorization",
    "Factors",
    "LargeOrder",
    "NoFactorsFound",
    "NonInvertible",
    "Pair",
    "Params",
    "Poly",
    "Prime",
    "RunStats",
    "SearchUnavailable",
    "Vec2",
    "bsgs_order",
    "ccheck",
    "choose_params",
    "compute_pair",
    "det2",
    "element_of_large_order",
    "factor",
    "factor_prime_or_semiprime",
    "find_collisions",
    "geom_eval",
    "lagrange_gauss",
    "main_search",
    "multieval_tree",
    "poly_mul",
    "pollard_strassen",
    "product_tree",
    "search_lambda",
]
