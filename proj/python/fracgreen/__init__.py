"""Green's function of c + (-Laplacian)^(alpha/2) on the periodic domain [-pi, pi].

Thin wrapper around the C++ core. The main entry points are
``green_fourier``, ``green_integral``, ``green_at_pi``, ``ml_eval``,
``scan_pi_zeros`` and ``verify``.
"""

from ._fracgreen import (  # noqa: F401
    FracgreenError,
    I1_asym,
    I2_asym,
    I_ab,
    I_ab_split,
    ZeroRecord,
    c_alpha,
    default_scan_cmax,
    green_at_pi,
    green_closed_alpha2,
    green_closed_alpha4,
    green_deriv_alpha4,
    green_deriv_integral,
    green_fourier,
    green_integral,
    ml_asymptotic_sub2,
    ml_asymptotic_sup2,
    ml_deriv_identity_residual,
    ml_eval,
    ml_integral_rep,
    ml_series,
    predict_first_zero,
    profile,
    scan_pi_zeros,
    transcendental_roots_alpha4,
    verify,
)

__all__ = [
    "FracgreenError",
    "I1_asym",
    "I2_asym",
    "I_ab",
    "I_ab_split",
    "ZeroRecord",
    "c_alpha",
    "default_scan_cmax",
    "green_at_pi",
    "green_closed_alpha2",
    "green_closed_alpha4",
    "green_deriv_alpha4",
    "green_deriv_integral",
    "green_fourier",
    "green_integral",
    "ml_asymptotic_sub2",
    "ml_asymptotic_sup2",
    "ml_deriv_identity_residual",
    "ml_eval",
    "ml_integral_rep",
    "ml_series",
    "predict_first_zero",
    "profile",
    "scan_pi_zeros",
    "transcendental_roots_alpha4",
    "verify",
]
