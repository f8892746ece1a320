"""Genus-3 plane quartics with many points via twisted Legendre curves."""

from ._jit import BACKEND
from .classify import (
    admissible_group_orders,
    char3_guaranteed_gap,
    floor_two_sqrt,
    hws_bound,
    legendre_achievable,
    legendre_parameter,
    nq1,
    nq2,
)
from .curves import (
    CurveCount,
    frobenius_trace,
    legendre_count,
    predicted_quartic_count,
    quartic_count,
    twisted_count,
)
from .finite_field import FieldElement, FieldSpec, enumerate_field, ff_arith, make_field, quad_char
from .poly_fp import PolyFp, hasse_polynomial, hasse_trace_residue, poly_roots
from .search import best_curve, char3_verify, family_survey, find_lambda, nq3_lower_table

__version__ = "0.1.0"
