"""Polynomials preserving entrywise-nonnegative matrices.

Exact-rational workbench: construct the p_a / f_a families, certify
membership at a given order by exhaustive combinatorial verification,
falsify membership at higher orders with concrete witness matrices, and
bracket the optimal coefficient.
"""

from .linalg import (
    mat_mul,
    mat_pow,
    min_entry,
    poly_eval,
    poly_eval_matrix,
)
from .families import (
    BoundTable,
    bound_table,
    make_f_a,
    make_p_a,
    mu,
    safe_a_squared,
)
from .paths import (
    CertificateReport,
    build_certificate,
    enumerate_monomials,
    exact_nu,
    first_cycle,
    min_cycle_length,
    numeric_decomposition_check,
    partition_stats,
    phi,
    psi,
)
from .witness import WitnessReport, cycle_witness, search_witness
from .bracket import BoundEstimate, bracket_optimal_a, membership_sample
from .niep import jll_check, power_sum, transform_list

__all__ = [
    "BoundEstimate",
    "BoundTable",
    "CertificateReport",
    "WitnessReport",
    "bound_table",
    "bracket_optimal_a",
    "build_certificate",
    "cycle_witness",
    "enumerate_monomials",
    "exact_nu",
    "first_cycle",
    "jll_check",
    "make_f_a",
    "make_p_a",
    "mat_mul",
    "mat_pow",
    "membership_sample",
    "min_cycle_length",
    "min_entry",
    "mu",
    "numeric_decomposition_check",
    "partition_stats",
    "phi",
    "poly_eval",
    "poly_eval_matrix",
    "power_sum",
    "psi",
    "safe_a_squared",
    "search_witness",
    "transform_list",
]
