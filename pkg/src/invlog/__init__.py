"""Verified computation of logarithmic coefficients of inverse functions.

Two independent routes to Gamma_n (series reversion vs. a reversion-free
coefficient identity), constructors for the named extremal functions of six
function classes, every sharp bound in closed form, and harnesses that
check the bounds and their sharpness numerically.
"""

from .series import (
    AnalyticSeries,
    Series,
    UnitSeries,
    add,
    compose,
    constant,
    differentiate,
    divide_by_z,
    exp_zero,
    extend,
    identity,
    integrate_termwise,
    log_unit,
    monomial,
    multiply,
    pow_scalar,
    reciprocal,
    revert,
    scale,
    shift,
    subtract,
    truncate,
)
from .families import (
    ClassSpec,
    SchwarzFn,
    blaschke_series,
    f_alpha_extremal,
    gc_extremal,
    k_AB_n,
    koebe,
    member_from_schwarz,
    sample_schwarz,
    schwarz_series,
    spiral_extremal,
    u_extremal,
    u_lambda_member,
)
from .gammas import (
    GammaVector,
    gamma12_U,
    gamma123_F_alpha,
    gamma_via_bn,
    gamma_via_reversion,
    inverse_coeffs,
)
from .bounds import (
    BoundResult,
    bound_F_gamma1,
    bound_F_gamma2,
    bound_F_gamma3,
    bound_Gc,
    bound_U_gamma1,
    bound_U_gamma2,
    bound_bn_Gc,
    bound_class_S,
    bound_for,
    bound_spiral,
    bound_star_AB,
    bound_star_order,
    f_alpha_mu_upsilon,
    inverse_coeff_bound_S,
    ps_psi_bound,
    ps_region,
    v_of_x,
    verify_d1234,
)
from .harness import (
    VerifyReport,
    cross_check,
    explore_convex_large_n,
    sharpness_check,
    verify_bounds,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticSeries", "Series", "UnitSeries",
    "add", "compose", "constant", "differentiate", "divide_by_z", "exp_zero",
    "extend", "identity", "integrate_termwise", "log_unit", "monomial",
    "multiply", "pow_scalar", "reciprocal", "revert", "scale", "shift",
    "subtract", "truncate",
    "ClassSpec", "SchwarzFn", "blaschke_series", "f_alpha_extremal",
    "gc_extremal", "k_AB_n", "koebe", "member_from_schwarz", "sample_schwarz",
    "schwarz_series", "spiral_extremal", "u_extremal", "u_lambda_member",
    "GammaVector", "gamma12_U", "gamma123_F_alpha", "gamma_via_bn",
    "gamma_via_reversion", "inverse_coeffs",
    "BoundResult", "bound_F_gamma1", "bound_F_gamma2", "bound_F_gamma3",
    "bound_Gc", "bound_U_gamma1", "bound_U_gamma2", "bound_bn_Gc",
    "bound_class_S", "bound_for", "bound_spiral", "bound_star_AB",
    "bound_star_order", "f_alpha_mu_upsilon", "inverse_coeff_bound_S",
    "ps_psi_bound", "ps_region", "v_of_x", "verify_d1234",
    "VerifyReport", "cross_check", "explore_convex_large_n",
    "sharpness_check", "verify_bounds",
    "__version__",
]
