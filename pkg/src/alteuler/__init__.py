"""Alternating Eulerian polynomials: exact generation, identity checks and
certified zeros."""

from .combinatorics import StatKind, binomial, stat_count, stat_polynomial, stirling2
from .poly import Poly, mobius_clear, poly_eval_float
from .sequences import (
    alt_eulerian_coeff_explicit, alt_eulerian_recurrence, alt_eulerian_transform,
    classical_eulerian, derivative_coeff_explicit, derivative_coeff_recurrence,
    derivative_poly, e_coeff, peak_poly, tilde_p,
)

__version__ = "0.1.0"
