"""Exact polynomial, cyclotomic-ring and determinant arithmetic."""

from cubezeta.algebra.cyclotomic import (
    CycElem,
    CyclotomicRing,
    CycPoly,
    cyclotomic_poly,
    cyclotomic_ring,
    descend_to_integers,
    embed_two_cos,
    product_of_linear_factors,
    psi_univariate,
)
from cubezeta.algebra.determinant import bareiss_det, poly_matrix_det, ring_det
from cubezeta.algebra.polynomial import IntPoly, newton_interpolate, poly_compose, poly_product

__all__ = [
    "CycElem",
    "CyclotomicRing",
    "CycPoly",
    "IntPoly",
    "bareiss_det",
    "cyclotomic_poly",
    "cyclotomic_ring",
    "descend_to_integers",
    "embed_two_cos",
    "newton_interpolate",
    "poly_compose",
    "poly_matrix_det",
    "poly_product",
    "product_of_linear_factors",
    "psi_univariate",
    "ring_det",
]
