"""Exact value sets of fractional ideals on curve singularities.

Curves are given by branch parametrizations over a number field.  The
package computes value semigroups, values of fractional ideals and of their
duals, Jacobian and residue values, Poincaré polynomials, and the classical
invariants (conductor, delta, Milnor and Tjurina numbers).
"""
from .coeffs import QQ, FieldElement, NumberField, format_rational, parse_rational
from .curve import (
    BranchParam,
    BranchSeed,
    Curve,
    LiftError,
    conductor_delgado,
    conductor_direct,
    delta_mu,
    hensel_lift_branch,
    intersection_multiplicity,
    sqh_parametrize,
)
from .ideal import PRESETS, FractionalIdeal, c_I, dual_direct, dual_values_symmetry, ell, value_set_rank_oracle
from .lattice import ValueSet, negative_window_reconstruct, staircase_c, staircase_length, symmetric_dual
from .logres import (
    InvariantViolation,
    branch_sum_inclusion_check,
    curve_report,
    jacobian_values,
    kahler_values,
    milnor_direct,
    quasihomogeneous_jacobian_check,
    residue_values,
    teissier_check,
    tjurina_direct,
    tjurina_via_values,
    torsion_dimension,
)
from .poincare import LaurentPoly, alpha_I, poincare_poly, poincare_symmetry_check
from .poly import Poly, poly_eval_series
from .semigroup import semigroup_conductor, semigroup_elements, semigroup_gaps
from .series import INF, IndeterminateOrderError, SeriesVector, TruncatedSeries, TruncationError, val
from .stdbasis import value_algo_p1, value_algo_p2
from .strata import DeformationFamily, analyze_sample, evaluate_family, markdown_table, scan_strata

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "FieldElement",
    "NumberField",
    "format_rational",
    "parse_rational",
    "BranchParam",
    "BranchSeed",
    "Curve",
    "LiftError",
    "conductor_delgado",
    "conductor_direct",
    "delta_mu",
    "hensel_lift_branch",
    "intersection_multiplicity",
    "sqh_parametrize",
    "PRESETS",
    "FractionalIdeal",
    "c_I",
    "dual_direct",
    "dual_values_symmetry",
    "ell",
    "value_set_rank_oracle",
    "ValueSet",
    "negative_window_reconstruct",
    "staircase_c",
    "staircase_length",
    "symmetric_dual",
    "InvariantViolation",
    "branch_sum_inclusion_check",
    "curve_report",
    "jacobian_values",
    "kahler_values",
    "milnor_direct",
    "quasihomogeneous_jacobian_check",
    "residue_values",
    "teissier_check",
    "tjurina_direct",
    "tjurina_via_values",
    "torsion_dimension",
    "LaurentPoly",
    "alpha_I",
    "poincare_poly",
    "poincare_symmetry_check",
    "Poly",
    "poly_eval_series",
    "semigroup_conductor",
    "semigroup_elements",
    "semigroup_gaps",
    "INF",
    "IndeterminateOrderError",
    "SeriesVector",
    "TruncatedSeries",
    "TruncationError",
    "val",
    "value_algo_p1",
    "value_algo_p2",
    "DeformationFamily",
    "analyze_sample",
    "evaluate_family",
    "markdown_table",
    "scan_strata",
]
