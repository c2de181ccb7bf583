"""Generalized Wallis products: partial products, targets, convergence.

The product under study is

    prod_{n>=1} (2n)^(2/(2n)^s) / ((2n-1)^(1/(2n-1)^s) (2n+1)^(1/(2n+1)^s)),

whose log partial sums are exactly twice the grouped partial sums of
eta'(s).  Accumulation happens in log space through the shared scan in
``series``; values are exponentiated only at emission, so the
series/product identity is exact at working precision rather than
approximate.

Closed-form limits: pi/2 at s=0, 2^(2 gamma - ln 2) at s=1 and
(4 pi e^gamma / A^12)^(pi^2/6) at s=2.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .constants import (
    constant_set,
    gamma_harmonic,
    ln_glaisher_from_limit,
    ln_glaisher_from_zeta,
)
from .precision import PrecisionContext, Real, pi
from .series import (
    _coerce,
    acceleration_order,
    eta_prime_accelerated,
    eta_prime_extrapolated,
    iter_pair_log_sums,
    pair_log_factor,
)

__all__ = [
    "TargetRoute",
    "Target",
    "ProductRow",
    "PrecisionExhaustedError",
    "log_factor",
    "partial_product",
    "exact_partial_product",
    "closed_form_target",
    "series_target",
    "convergence_order",
    "order_from_errors",
]


class TargetRoute(str, Enum):
    CLOSED_FORM_S0 = "ClosedForm_s0"
    CLOSED_FORM_S1 = "ClosedForm_s1"
    CLOSED_FORM_S2 = "ClosedForm_s2"
    ETA_PRIME_SERIES = "EtaPrimeSeries"


@dataclass(frozen=True)
class Target:
    """A limit value the partial products are compared against."""

    s: Real
    value: Real
    route: TargetRoute

    def __post_init__(self) -> None:
        if not self.value > 0:
            raise ValueError("target value must be positive")


@dataclass(frozen=True)
class ProductRow:
    """One emitted state of the pair-product scan."""

    pair_index: int
    log_factor: Real
    cumulative_log: Real
    cumulative_value: Real
    abs_error: Real | None


class PrecisionExhaustedError(ArithmeticError):
    """Observed errors sank below working precision; estimates would be noise."""


def log_factor(n: int, s: Real | int | str, ctx: PrecisionContext) -> Real:
    """Log of the n-th whole pair of the product (see series.pair_log_factor)."""
    return pair_log_factor(n, s, ctx)


def partial_product(
    s: Real | int | str,
    n_pairs: int,
    ctx: PrecisionContext,
    target: Target | None = None,
    emit_every: int = 1,
) -> list[ProductRow]:
    """Scan the first n_pairs pairs, emitting rows every emit_every pairs.

    The final pair is always emitted.  cumulative_log at pair N is
    bit-identical to twice eta_prime_grouped(s, N); cumulative_value is
    exp(cumulative_log), evaluated only at emission.
    """
    if emit_every < 1:
        raise ValueError("emit_every must be >= 1")
    s = _coerce(s, ctx)
    rows: list[ProductRow] = []
    dec = ctx.decimal_context()
    for n, t, cum in iter_pair_log_sums(s, n_pairs, ctx):
        if n % emit_every == 0 or n == n_pairs:
            with localcontext(dec):
                value = cum.exp()
                err = abs(value - target.value) if target is not None else None
            rows.append(ProductRow(n, t, cum, value, err))
    return rows


def exact_partial_product(n_pairs: int) -> Fraction:
    """The s=0 partial product as an exact rational: prod 4n^2/(4n^2-1)."""
    if n_pairs < 1:
        raise ValueError("n_pairs must be >= 1")
    result = Fraction(1)
    for n in range(1, n_pairs + 1):
        result *= Fraction(4 * n * n, 4 * n * n - 1)
    return result


def closed_form_target(
    s_case: int,
    ctx: PrecisionContext,
    glaisher_route: str = "auto",
    glaisher_limit_n: int = 2000,
) -> Target:
    """Closed-form limit for s in {0, 1, 2}.

    gamma always comes from the harmonic route.  For s=2 the route of
    ln A is selectable: "limit" (hyperfactorial at glaisher_limit_n,
    the non-circular witness used inside verification), "zeta" (the
    high-precision relation) or "auto" (the production policy).
    """
    if s_case not in (0, 1, 2):
        raise ValueError("closed forms exist for s in {0, 1, 2}")
    p = pi(ctx)
    if s_case == 0:
        with localcontext(ctx.decimal_context()):
            return Target(Decimal(0), p / 2, TargetRoute.CLOSED_FORM_S0)
    gamma = gamma_harmonic(ctx)
    if s_case == 1:
        with localcontext(ctx.decimal_context()):
            ln2 = Decimal(2).ln()
            value = ((2 * gamma - ln2) * ln2).exp()
        return Target(Decimal(1), value, TargetRoute.CLOSED_FORM_S1)
    if glaisher_route == "limit":
        ln_a = ln_glaisher_from_limit(glaisher_limit_n, ctx)
    elif glaisher_route == "zeta":
        ln_a = ln_glaisher_from_zeta(ctx)
    elif glaisher_route == "auto":
        ln_a = constant_set(ctx).ln_glaisher
    else:
        raise ValueError(f"unknown glaisher route {glaisher_route!r}")
    with localcontext(ctx.decimal_context()):
        zeta2 = p * p / 6
        log_arg = Decimal(4).ln() + p.ln() + gamma - 12 * ln_a
        value = (zeta2 * log_arg).exp()
    return Target(Decimal(2), value, TargetRoute.CLOSED_FORM_S2)


def series_target(
    s: Real | int | str,
    ctx: PrecisionContext,
    n_min: int = 1000,
    levels: int = 6,
) -> Target:
    """exp(2 eta'(s)) by the best series route for this s.

    Accelerated summation for s >= 1; grouped series with Richardson
    extrapolation (n_min * 2^j, j = 0..levels) for 0 <= s < 1.
    """
    s = _coerce(s, ctx)
    if s < 0:
        raise ValueError(f"series target needs s >= 0, got {s}")
    if s >= 1:
        result = eta_prime_accelerated(s, acceleration_order(ctx), ctx)
    else:
        result = eta_prime_extrapolated(s, n_min, levels, ctx)
    with localcontext(ctx.decimal_context()):
        value = (2 * result.value).exp()
    return Target(s, value, TargetRoute.ETA_PRIME_SERIES)


def order_from_errors(errors: Sequence[Real], ctx: PrecisionContext) -> Real:
    """Mean of log2(e_j / e_{j+1}) over consecutive error pairs."""
    if len(errors) < 2:
        raise ValueError("need at least two errors")
    with localcontext(ctx.decimal_context()):
        ln2 = Decimal(2).ln()
        total = Decimal(0)
        for a, b in zip(errors, errors[1:]):
            total += (a / b).ln() / ln2
        return total / (len(errors) - 1)


def convergence_order(
    s: Real | int | str,
    n_min: int,
    doublings: int,
    ctx: PrecisionContext,
    target: Target | None = None,
) -> Real:
    """Empirical convergence order of the pair product toward its limit.

    Measures e_j = |cumulative_value(n_min * 2^j) - target| for
    j = 0..doublings and returns the mean per-doubling log2 error ratio.
    The default target is the closed form for s in {0, 1, 2} and the
    series limit otherwise.
    """
    s = _coerce(s, ctx)
    if n_min < 1:
        raise ValueError("n_min must be >= 1")
    if doublings < 2:
        raise ValueError("doublings must be >= 2")
    if target is None:
        if s in (0, 1, 2):
            target = closed_form_target(int(s), ctx)
        else:
            target = series_target(s, ctx)
    checkpoints = [n_min * 2**j for j in range(doublings + 1)]
    marks = set(checkpoints)
    errors: list[Real] = []
    dec = ctx.decimal_context()
    noise = 10 * Decimal(1).scaleb(-ctx.working_digits)
    for n, _, cum in iter_pair_log_sums(s, checkpoints[-1], ctx):
        if n in marks:
            with localcontext(dec):
                e = abs(cum.exp() - target.value)
            if e < noise:
                raise PrecisionExhaustedError(
                    f"error {e} at N={n} is below 10x working epsilon; "
                    "raise digits to measure convergence this deep"
                )
            errors.append(e)
    return order_from_errors(errors, ctx)
