"""Exact arithmetic substrate: integer polynomials, Laurent polynomials,
fraction-free determinants and certified real-root isolation."""
from .cyclotomic import cyclotomic, real_cyclotomic
from .matrix import bareiss_det, bareiss_det_poly, cofactor_det
from .polynomial import IntPolynomial, LaurentPolynomial, poly_gcd, squarefree_part
from .roots import (
    RationalInterval,
    isolate_real_roots,
    refine_interval,
    sturm_count,
    sturm_sequence,
)

__all__ = [
    "IntPolynomial",
    "LaurentPolynomial",
    "RationalInterval",
    "bareiss_det",
    "bareiss_det_poly",
    "cofactor_det",
    "cyclotomic",
    "isolate_real_roots",
    "poly_gcd",
    "real_cyclotomic",
    "refine_interval",
    "squarefree_part",
    "sturm_count",
    "sturm_sequence",
]
