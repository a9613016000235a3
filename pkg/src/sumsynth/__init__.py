"""Exact summation of polynomial sequences in n and n!."""
from .exactnum import ExactMatrix, Inconsistent, Underdetermined, UniqueSolution, solve_exact_linear
from .factsum import ClosedForm, DegreeBounds, NoSolutionWithinBounds, synth_fact_sum, telescope_residual
from .faulhaber import FaulhaberRow, bernoulli, faulhaber_row
from .oracle import sum_oracle, verify_closed_form
from .poly import BiPoly, UniPoly
from .polysum import delta, membership_sz, synth_poly_sum
from .syntax import ParseError, format_canonical, parse_poly
from .weighted import synth_weighted_periodic, synth_weighted_polynomial, weighted_sum_oracle

__version__ = "0.1.0"
