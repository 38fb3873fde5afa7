"""Exact computations on automorphisms of Enriques surfaces and their dynamical degrees."""

from .arith import IntPoly, RatPoly, RationalInterval, cyclotomic, inverse_totient, totient
from .gf2 import F2Factorization, F2Poly, f2_factor, reduce_mod2
from .salem import SalemPolynomial, NotSalem, certify_salem, enumerate_salem, trace_poly
from .sieve import DOLGACHEV, classify, gm_square_test, mod2_sieve, report
from .spectra import admissible_orders

__version__ = "0.1.0"
