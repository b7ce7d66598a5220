"""Noncolliding random walk kernels, martingale polynomials, and sampling."""

from ._ncrw import (
    EquidistantConfig,
    SiteConfiguration,
    bm_density,
    correlation,
    correlation_exact,
    det_martingale,
    dyson_kernel,
    dyson_kernel_equidistant,
    euler_coefficients,
    extended_sine_kernel,
    walk_polynomial_coefficients,
    gh_secant_density,
    hermite_martingale,
    infinite_kernel_value,
    kernel_value,
    kernel_value_exact,
    martingale_coefficients,
    relaxation_gap,
    sample_secant_path,
    sample_weighted_summary,
    secant_cdf_inverse,
    secant_density,
    sine_kernel_discrete,
    theta3,
    transition_prob,
    transition_prob_exact,
    vandermonde_ratio,
)

__all__ = [
    "EquidistantConfig",
    "SiteConfiguration",
    "bm_density",
    "correlation",
    "correlation_exact",
    "det_martingale",
    "dyson_kernel",
    "dyson_kernel_equidistant",
    "euler_coefficients",
    "extended_sine_kernel",
    "walk_polynomial_coefficients",
    "gh_secant_density",
    "hermite_martingale",
    "infinite_kernel_value",
    "kernel_value",
    "kernel_value_exact",
    "martingale_coefficients",
    "relaxation_gap",
    "sample_secant_path",
    "sample_weighted_summary",
    "secant_cdf_inverse",
    "secant_density",
    "sine_kernel_discrete",
    "theta3",
    "transition_prob",
    "transition_prob_exact",
    "vandermonde_ratio",
]
