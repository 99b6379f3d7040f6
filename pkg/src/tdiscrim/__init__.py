"""Optimal designs for discriminating between polynomial regression models.

Given the model pair of degrees n - 2 and n on [-1, 1], this package
computes the designs that separate the two models fastest: explicitly for
small values of the leading-coefficient ratio, by numerical continuation
beyond that, worst-case versions over ratio intervals, and independent
optimality checks for all of them. A small simulation module measures what
the optimal design buys in terms of F-test power.
"""

from .checks import (
    AlternationReport,
    alternation_check,
    appendix_identity,
    equivalence_system,
    global_inequality,
    verification_report,
)
from .closed_form import (
    ClosedFormDesign,
    canonical_weights,
    critical_b,
    support_points,
    t_optimal_design,
    zero_b_family,
)
from .continuation import (
    ContinuationState,
    bbar_limit,
    d1_optimal_start,
    h_form,
    inequality_margin,
    solve_at,
    stationarity_residual,
    taylor_coefficients,
    trajectory,
)
from .designs import (
    Design,
    DiscriminationProblem,
    best_l2_coefficients,
    moment_matrix,
    t_criterion,
)
from .errors import ConvergenceError, OptimalityError, RegimeError, SolverError
from .maximin import RatioInterval, maximin_design, r_value
from .minimax import (
    BestApproxResult,
    closed_form_psi,
    extremal_set,
    remez,
    target_polynomial,
)
from .polynomials import Polynomial, chebyshev_extrema, chebyshev_t, compose_affine
from .power import (
    EQUIDISTANT_48,
    T_OPTIMAL_48,
    ExactDesign,
    PowerResult,
    f_critical,
    f_test_power_analytic,
    f_test_power_mc,
    noncentral_f_sf,
    noncentrality,
    table1,
    table1_csv,
)

__version__ = "0.1.0"

__all__ = [
    "AlternationReport",
    "BestApproxResult",
    "ClosedFormDesign",
    "ContinuationState",
    "ConvergenceError",
    "Design",
    "DiscriminationProblem",
    "EQUIDISTANT_48",
    "ExactDesign",
    "OptimalityError",
    "Polynomial",
    "PowerResult",
    "RatioInterval",
    "RegimeError",
    "SolverError",
    "T_OPTIMAL_48",
    "alternation_check",
    "appendix_identity",
    "bbar_limit",
    "best_l2_coefficients",
    "canonical_weights",
    "chebyshev_extrema",
    "chebyshev_t",
    "closed_form_psi",
    "compose_affine",
    "critical_b",
    "d1_optimal_start",
    "equivalence_system",
    "extremal_set",
    "f_critical",
    "f_test_power_analytic",
    "f_test_power_mc",
    "global_inequality",
    "h_form",
    "inequality_margin",
    "maximin_design",
    "moment_matrix",
    "noncentral_f_sf",
    "noncentrality",
    "r_value",
    "remez",
    "solve_at",
    "stationarity_residual",
    "support_points",
    "t_criterion",
    "t_optimal_design",
    "table1",
    "table1_csv",
    "target_polynomial",
    "taylor_coefficients",
    "trajectory",
    "verification_report",
    "zero_b_family",
]
