"""Exact bivariate exponential generating functions for two-sex labelled structures,
with a mechanical check of the straight Hermite Mehler identity."""

__version__ = "0.1.0"

from .algebra import WeightPoly, wp_add, wp_format, wp_mul, wp_parse, wp_scale
from .biegf import (
    BiSeries,
    bs_add,
    bs_coeff,
    bs_eq,
    bs_exp,
    bs_inv_one_minus,
    bs_log_inv_one_minus,
    bs_mul,
    bs_one,
    bs_term,
    bs_zero,
)
from .hermite import hermite_biegf, hermite_pair_poly, hermite_poly
from .mehler import VerifyReport, lhs_series, rhs_closed_series, rhs_component_series, verify
from .profiles import (
    Component,
    Profile,
    all_components_series,
    case_series,
    component_weight,
    decompose,
    enumerate_full,
    enumerate_marital,
    profile_weight,
)
