"""Dirichlet eta function and its derivative for real s.

Three evaluation strategies, each with an a priori error bound:

* direct alternating partial sums (s > 0),
* the averaged pair representation 1/2 + (1/2)*sum(brackets) (s > -1),
* the grouped derivative series whose pair terms are exactly the
  logarithms of the generalized Wallis product factors (s >= 0),

plus Chebyshev-style acceleration of the alternating derivative series
(s >= 1) and Richardson extrapolation of partial sums sampled at
geometrically doubled lengths.

Summation is strictly sequential in index order with Neumaier
compensation, so identical inputs give bit-identical results.  The
grouped scan here is the single source of truth for the Wallis product
module: the cumulative log of the N-pair partial product equals twice
the grouped partial sum by construction, not by approximation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .precision import PrecisionContext, Real

__all__ = [
    "Method",
    "SeriesResult",
    "eta_direct",
    "eta_averaged",
    "eta_prime_grouped",
    "eta_prime_accelerated",
    "eta_prime_extrapolated",
    "richardson_extrapolate",
    "pair_log_factor",
    "iter_pair_log_sums",
    "acceleration_order",
    "acceleration_weights",
]


class Method(str, Enum):
    DIRECT = "Direct"
    AVERAGED = "Averaged"
    GROUPED_DERIVATIVE = "GroupedDerivative"
    ACCELERATED = "Accelerated"
    RICHARDSON = "RichardsonExtrapolated"


@dataclass(frozen=True)
class SeriesResult:
    """Value of eta(s) or eta'(s) with method metadata and error bound.

    ``error_bound`` is an a priori bound on |value - limit|; it is never
    zero (a floor of a few working ulps keeps it honest once rounding,
    not truncation, dominates).
    """

    value: Real
    s: Real
    terms_used: int
    error_bound: Real
    method: Method

    def __post_init__(self) -> None:
        if self.terms_used < 1:
            raise ValueError("terms_used must be >= 1")
        if not self.error_bound > 0 or not self.error_bound.is_finite():
            raise ValueError("error_bound must be positive and finite")


class _CompensatedSum:
    """Neumaier compensated accumulator; addition order is the caller's."""

    __slots__ = ("partial", "carry")

    def __init__(self) -> None:
        self.partial = Decimal(0)
        self.carry = Decimal(0)

    def add(self, x: Real) -> None:
        s = self.partial
        t = s + x
        if abs(s) >= abs(x):
            self.carry += (s - t) + x
        else:
            self.carry += (x - t) + s
        self.partial = t

    def total(self) -> Real:
        return self.partial + self.carry


def _error_floor(ctx: PrecisionContext) -> Real:
    # a few working ulps: rounding noise can exceed a vanishing
    # truncation bound, and bounds must stay honest
    return Decimal(1).scaleb(-(ctx.working_digits - 4))


def _halve_exactly(x: Real, ctx: PrecisionContext) -> Real:
    # x/2 needs at most one extra decimal digit, so this never rounds;
    # doubling the result at working precision recovers x bit-exactly
    with localcontext(ctx.decimal_context(extra_digits=2)):
        return x / 2


def _coerce(s: Real | int | str, ctx: PrecisionContext) -> Real:
    if isinstance(s, float):
        raise TypeError("float is inexact here; pass a str, int or Decimal")
    if isinstance(s, (int, str)):
        return +Decimal(s) if isinstance(s, str) else Decimal(s)
    return s


def _inv_power(k: int, s: Real) -> Real:
    """k**(-s) under the ambient decimal context."""
    if s == 0:
        return Decimal(1)
    if s == s.to_integral_value() and abs(s) <= 64:
        return Decimal(1) / Decimal(k) ** int(s)
    return (-s * Decimal(k).ln()).exp()


def _log_weight(k: int, s: Real) -> Real:
    """ln(k)/k**s under the ambient decimal context."""
    if k == 1:
        return Decimal(0)
    return Decimal(k).ln() * _inv_power(k, s)


# ---------------------------------------------------------------------------
# direct alternating series
# ---------------------------------------------------------------------------


def eta_direct(s: Real | int | str, n_terms: int, ctx: PrecisionContext) -> SeriesResult:
    """Alternating partial sum sum_{k=1}^{n} (-1)^(k+1) k^(-s) for s > 0.

    The error bound is the classic alternating-series remainder
    (n_terms+1)^(-s).
    """
    s = _coerce(s, ctx)
    if s <= 0:
        raise ValueError(
            f"direct alternating series needs s > 0, got {s}; "
            "use eta_averaged for -1 < s <= 0"
        )
    if n_terms < 2:
        raise ValueError("n_terms must be >= 2")
    with localcontext(ctx.decimal_context()):
        acc = _CompensatedSum()
        for k in range(1, n_terms + 1):
            term = _inv_power(k, s)
            acc.add(term if k % 2 == 1 else -term)
        value = acc.total()
        bound = max(_inv_power(n_terms + 1, s), _error_floor(ctx))
    return SeriesResult(value, s, n_terms, bound, Method.DIRECT)


# ---------------------------------------------------------------------------
# averaged pair representation
# ---------------------------------------------------------------------------


def eta_averaged(s: Real | int | str, n_groups: int, ctx: PrecisionContext) -> SeriesResult:
    """1/2 + (1/2) * sum of the first n_groups bracketed pair terms, s > -1.

    Bracket j is (-1)^(j+1) * (j^(-s) - (j+1)^(-s)); brackets alternate
    in sign with decreasing magnitude, so the remainder after N brackets
    is at most |bracket_{N+1}|, i.e. |value - limit| <= |bracket_{N+1}|/2.
    At s = 0 every bracket vanishes and the value is exactly 1/2.
    """
    s = _coerce(s, ctx)
    if s <= -1:
        raise ValueError(f"averaged representation needs s > -1, got {s}")
    if n_groups < 1:
        raise ValueError("n_groups must be >= 1")
    with localcontext(ctx.decimal_context()):
        acc = _CompensatedSum()
        prev = _inv_power(1, s)
        for j in range(1, n_groups + 1):
            nxt = _inv_power(j + 1, s)
            bracket = prev - nxt
            acc.add(bracket if j % 2 == 1 else -bracket)
            prev = nxt
        half_sum = _halve_exactly(acc.total(), ctx)
        value = Decimal("0.5") + half_sum
        tail_bracket = abs(prev - _inv_power(n_groups + 2, s))
        bound = max(_halve_exactly(tail_bracket, ctx), _error_floor(ctx))
    return SeriesResult(value, s, n_groups, bound, Method.AVERAGED)


# ---------------------------------------------------------------------------
# grouped derivative series == log of the Wallis pair product
# ---------------------------------------------------------------------------


def pair_log_factor(n: int, s: Real | int | str, ctx: PrecisionContext) -> Real:
    """t_n = 2 ln(2n)/(2n)^s - ln(2n-1)/(2n-1)^s - ln(2n+1)/(2n+1)^s.

    One t_n is the log of one whole pair of the generalized Wallis
    product.  At s = 0 the algebraically identical form -ln(1 - 1/(4n^2))
    avoids cancellation between three nearly equal logarithms.
    """
    s = _coerce(s, ctx)
    if n < 1:
        raise ValueError("pair index must be >= 1")
    if s < 0:
        raise ValueError(f"pair factors are defined for s >= 0, got {s}")
    with localcontext(ctx.decimal_context()):
        if s == 0:
            return _pair_term_s0(n)
        return _pair_term(
            _log_weight(2 * n - 1, s), _log_weight(2 * n, s), _log_weight(2 * n + 1, s)
        )


def _pair_term_s0(n: int) -> Real:
    return -(Decimal(1) - Decimal(1) / (4 * n * n)).ln()


def _pair_term(f_prev_odd: Real, f_even: Real, f_next_odd: Real) -> Real:
    acc = _CompensatedSum()
    acc.add(2 * f_even)
    acc.add(-f_prev_odd)
    acc.add(-f_next_odd)
    return acc.total()


def iter_pair_log_sums(
    s: Real | int | str, n_pairs: int, ctx: PrecisionContext
) -> Iterator[tuple[int, Real, Real]]:
    """Yield (n, t_n, cumulative log sum) for n = 1 .. n_pairs.

    This scan is the single accumulation path shared by the grouped
    derivative series and the Wallis partial products: prefixes of any
    two scans with the same s and context are bit-identical.
    """
    s = _coerce(s, ctx)
    if s < 0:
        raise ValueError(f"pair factors are defined for s >= 0, got {s}")
    if n_pairs < 1:
        raise ValueError("n_pairs must be >= 1")
    # the working context is entered per pair and exited before each
    # yield, so nothing leaks into the consumer and two interleaved
    # scans cannot contaminate each other
    dec = ctx.decimal_context()
    acc = _CompensatedSum()
    if s == 0:
        for n in range(1, n_pairs + 1):
            with localcontext(dec):
                t = _pair_term_s0(n)
                acc.add(t)
                cum = acc.total()
            yield n, t, cum
    else:
        f_prev_odd = Decimal(0)  # ln(1)/1^s
        for n in range(1, n_pairs + 1):
            with localcontext(dec):
                f_even = _log_weight(2 * n, s)
                f_next_odd = _log_weight(2 * n + 1, s)
                t = _pair_term(f_prev_odd, f_even, f_next_odd)
                acc.add(t)
                cum = acc.total()
            yield n, t, cum
            f_prev_odd = f_next_odd


def _grouped_tail_bound(n_groups: int, s: Real, ctx: PrecisionContext) -> Real:
    """Rigorous bound on |sum_{n>N} t_n| / 2.

    Each t_n is a second central difference of f(x) = ln(x)/x^s, hence
    t_n = -f''(xi) with xi in (2n-1, 2n+1), and |f''(x)| <= g(x) =
    x^(-s-2) (s(s+1) ln x + 2s+1), decreasing for x >= 3.  Summing
    g(2n-1) over the tail and comparing with the integral gives the
    bound below (a = 2N+1).
    """
    with localcontext(ctx.decimal_context()):
        a = Decimal(2 * n_groups + 1)
        ln_a = a.ln()
        g_a = (s * (s + 1) * ln_a + 2 * s + 1) * _inv_power(2 * n_groups + 1, s + 2)
        integral = (
            (s * ln_a + s / (s + 1) + (2 * s + 1) / (s + 1))
            * _inv_power(2 * n_groups + 1, s + 1)
            / 2
        )
        return (g_a + integral) / 2


def eta_prime_grouped(
    s: Real | int | str, n_groups: int, ctx: PrecisionContext
) -> SeriesResult:
    """(1/2) * sum of the first n_groups pair terms t_n, for s >= 0.

    Twice the returned value is the cumulative log of the n_groups-pair
    Wallis partial product, bit-exactly (the halving never rounds).
    """
    s = _coerce(s, ctx)
    if s < 0:
        raise ValueError(f"grouped derivative series needs s >= 0, got {s}")
    if n_groups < 1:
        raise ValueError("n_groups must be >= 1")
    total = Decimal(0)
    for _, _, cum in iter_pair_log_sums(s, n_groups, ctx):
        total = cum
    value = _halve_exactly(total, ctx)
    with localcontext(ctx.decimal_context()):
        bound = max(_grouped_tail_bound(n_groups, s, ctx), _error_floor(ctx))
    return SeriesResult(value, s, n_groups, bound, Method.GROUPED_DERIVATIVE)


# ---------------------------------------------------------------------------
# accelerated alternating series for eta'(s)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def acceleration_weights(order: int) -> tuple[int, tuple[int, ...]]:
    """Exact integer weights (d, (c_0, ..., c_{order-1})) for the
    Chebyshev alternating-series scheme.

    d = ((3+sqrt(8))^order + (3-sqrt(8))^order)/2 via the integer
    recurrence t_k = 6 t_{k-1} - t_{k-2}; the c_k follow the classic
    b/c recurrence and are integers.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    t_prev, t_cur = 2, 6
    for _ in range(order - 1):
        t_prev, t_cur = t_cur, 6 * t_cur - t_prev
    d = t_cur // 2
    b = Fraction(-1)
    c = Fraction(-d)
    weights = []
    for k in range(order):
        c = b - c
        if c.denominator != 1:
            raise AssertionError("acceleration weights must be integers")
        weights.append(int(c))
        b = b * Fraction(2 * (k + order) * (k - order), (2 * k + 1) * (k + 1))
    return d, tuple(weights)


def acceleration_order(ctx: PrecisionContext) -> int:
    """Order at which the truncation bound drops below working precision."""
    per_term = math.log10(3 + math.sqrt(8))
    return math.ceil((ctx.working_digits + 3) / per_term) + 4


def eta_prime_accelerated(
    s: Real | int | str, order: int, ctx: PrecisionContext
) -> SeriesResult:
    """eta'(s) = sum_{k>=1} (-1)^k ln(k)/k^s, accelerated, for s >= 1.

    Applies the integer-weight Chebyshev scheme to a_j = ln(j+2)/(j+2)^s
    (the k=1 term vanishes).  A priori error bound:
    3 * (3+sqrt(8))^(-order) * max|a_j| over the used range.
    """
    s = _coerce(s, ctx)
    if s < 1:
        raise ValueError(
            f"acceleration needs s >= 1 (eventually monotone terms), got {s}; "
            "use eta_prime_grouped with extrapolation instead"
        )
    if order < 4:
        raise ValueError("order must be >= 4")
    d, weights = acceleration_weights(order)
    with localcontext(ctx.decimal_context(extra_digits=5)):
        acc = _CompensatedSum()
        max_a = Decimal(0)
        for j, w in enumerate(weights):
            a = _log_weight(j + 2, s)
            if a > max_a:
                max_a = a
            acc.add(w * a)
        raw = acc.total() / d
    with localcontext(ctx.decimal_context()):
        value = +raw
        shrink = (Decimal(3) + Decimal(8).sqrt()) ** (-order)
        bound = max(3 * shrink * max_a, _error_floor(ctx))
    return SeriesResult(value, s, order, bound, Method.ACCELERATED)


# ---------------------------------------------------------------------------
# Richardson extrapolation
# ---------------------------------------------------------------------------


def richardson_extrapolate(
    partials: Sequence[tuple[int, Real]],
    levels: int,
    ctx: PrecisionContext,
    s: Real | int | str = 0,
) -> SeriesResult:
    """Richardson tableau corner for partial sums sampled at N, 2N, 4N, ...

    Assumes an asymptotic error expansion in integer powers of 1/N and
    eliminates 1/N .. 1/N^levels.  The reported error bound is the
    difference between the last two tableau corners (floored at a few
    working ulps, e.g. for constant input).
    """
    s = _coerce(s, ctx)
    if len(partials) < 2:
        raise ValueError("need at least two partial sums")
    if levels < 1 or levels > len(partials) - 1:
        raise ValueError(f"levels must be in 1..{len(partials) - 1}")
    ns = [n for n, _ in partials]
    for a, b in zip(ns, ns[1:]):
        if b != 2 * a:
            raise ValueError(
                f"sample lengths must double at every step, got {a} then {b}"
            )
    with localcontext(ctx.decimal_context()):
        rows: list[list[Real]] = []
        for i, (_, v) in enumerate(partials):
            row = [+v]
            for j in range(1, min(i, levels) + 1):
                p = Decimal(2) ** j
                row.append((p * row[j - 1] - rows[i - 1][j - 1]) / (p - 1))
            rows.append(row)
        value = rows[-1][levels]
        estimate = abs(rows[-1][levels] - rows[-1][levels - 1])
        bound = max(estimate, _error_floor(ctx))
    return SeriesResult(value, s, ns[-1], bound, Method.RICHARDSON)


def eta_prime_extrapolated(
    s: Real | int | str,
    n_min: int,
    levels: int,
    ctx: PrecisionContext,
) -> SeriesResult:
    """Grouped partial sums at n_min * 2^j, j = 0..levels, extrapolated.

    This is the production route for eta'(s) when 0 <= s < 1, where the
    grouped series converges only like 1/N.  A single scan collects all
    checkpoints; each checkpoint value is bit-identical to a standalone
    eta_prime_grouped call of the same length.
    """
    s = _coerce(s, ctx)
    if n_min < 1:
        raise ValueError("n_min must be >= 1")
    if levels < 1:
        raise ValueError("levels must be >= 1")
    checkpoints = [n_min * 2**j for j in range(levels + 1)]
    targets = set(checkpoints)
    partials: list[tuple[int, Real]] = []
    for n, _, cum in iter_pair_log_sums(s, checkpoints[-1], ctx):
        if n in targets:
            partials.append((n, _halve_exactly(cum, ctx)))
    return richardson_extrapolate(partials, levels, ctx, s=s)
