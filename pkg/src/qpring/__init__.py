"""Exact arithmetic in the ring of integer-valued quasi-polynomials."""

from .contfrac import PiecewiseContinuedFraction, expand, format_pcf
from .errors import *  # noqa: F401,F403
from .euclid import DivisionResult, divide_R, divides, poly_divide, quo_R, rem_R
from .ggcd import GgcdMismatch, GgcdResult, ggcd_euclidean, ggcd_pointwise, ideal_pointwise_equal
from .intpoly import X, IntPolynomial, Order, RatPolynomial
from .parser import ExprSyntaxError, NestedQuasiLiteral, parse_expr, parse_matrix
from .quasipoly import QuasiPolynomial, as_quasi, from_poly, from_rational_rep
from .smith import ParamMatrix, SmithData, det_factors, equivalent_everywhere, invariant_factors, smith_form

__version__ = "0.1.0"
