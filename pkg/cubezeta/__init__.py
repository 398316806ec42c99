"""
cubezeta - exact Ihara zeta functions of periodic cubical lattices.

The package computes the reciprocal zeta polynomials of the skeleta of the periodic
q-cubical lattice, factors them into integer cyclotomic-like polynomials and their
Galois-orbit components, decides irreducibility exactly, and cross-checks every
closed form against independent brute-force oracles.
"""

__version__ = "0.1.0"
