"""Dirichlet eta derivatives, generalized Wallis products and the
closed-form identities linking them to pi, the Euler-Mascheroni
constant and the Glaisher-Kinkelin constant, at configurable decimal
precision.
"""

from .constants import (
    ConstantSet,
    constant_set,
    gamma_from_eta,
    gamma_harmonic,
    glaisher_from_limit,
    glaisher_from_zeta,
    hyperfactorial_log,
    ln_glaisher_from_limit,
    ln_glaisher_from_zeta,
    zeta_prime_2,
)
from .precision import (
    PrecisionContext,
    Real,
    add,
    as_real,
    div,
    exp,
    format_real,
    ln,
    make_context,
    mul,
    output_ulp,
    pi,
    power,
    sub,
)
from .products import (
    PrecisionExhaustedError,
    ProductRow,
    Target,
    TargetRoute,
    closed_form_target,
    convergence_order,
    exact_partial_product,
    log_factor,
    order_from_errors,
    partial_product,
    series_target,
)
from .series import (
    Method,
    SeriesResult,
    acceleration_order,
    acceleration_weights,
    eta_averaged,
    eta_direct,
    eta_prime_accelerated,
    eta_prime_extrapolated,
    eta_prime_grouped,
    iter_pair_log_sums,
    pair_log_factor,
    richardson_extrapolate,
)
from .cli import VerificationReport, run_verify

__version__ = "0.1.0"

__all__ = [
    "PrecisionContext",
    "Real",
    "make_context",
    "as_real",
    "add",
    "sub",
    "mul",
    "div",
    "ln",
    "exp",
    "power",
    "pi",
    "format_real",
    "output_ulp",
    "Method",
    "SeriesResult",
    "eta_direct",
    "eta_averaged",
    "eta_prime_grouped",
    "eta_prime_accelerated",
    "eta_prime_extrapolated",
    "richardson_extrapolate",
    "iter_pair_log_sums",
    "pair_log_factor",
    "acceleration_order",
    "acceleration_weights",
    "ConstantSet",
    "constant_set",
    "gamma_harmonic",
    "gamma_from_eta",
    "hyperfactorial_log",
    "glaisher_from_limit",
    "glaisher_from_zeta",
    "ln_glaisher_from_limit",
    "ln_glaisher_from_zeta",
    "zeta_prime_2",
    "Target",
    "TargetRoute",
    "ProductRow",
    "PrecisionExhaustedError",
    "log_factor",
    "partial_product",
    "exact_partial_product",
    "closed_form_target",
    "series_target",
    "convergence_order",
    "order_from_errors",
    "VerificationReport",
    "run_verify",
]
