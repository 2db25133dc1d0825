"""Exact Euler series of the E1 page of the cohomology Bousfield-Kan
spectral sequence for spaces of long links in R^N."""
from .combinatorics import (
    BinomialBasisPoly,
    count_cycle_perms,
    count_set_partitions,
    eulerian2,
    poly_eval_binomial_basis,
    stirling1,
    stirling1_ext,
    stirling1_poly,
    stirling2,
    stirling2_ext,
)
from .conf_poincare import ModelParams, conf_poincare, link_term_poincare, stirling_coefficient_check
from .engine import (
    BigradedDimTable,
    EulerSeriesReport,
    e1_line,
    e1_table,
    empirical_slopes,
    euler_report,
    euler_series_closed,
    euler_series_summed,
    growth_rate,
    knot_power_series,
    relative_series,
    tot_lower_bound,
    check_difference_sum,
    check_stirling_sum,
    verify_lemma_5_3,
    verify_prop_5_2,
)
from .exact_arith import (
    IntPolynomial,
    TruncatedSeries,
    alt_binomial_sum,
    binomial,
    poly_add,
    poly_eval,
    poly_mul,
    series_inverse,
    substitute_power,
)

__version__ = "0.1.0"
