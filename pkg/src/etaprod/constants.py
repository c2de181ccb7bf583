"""Mathematical constants by independent routes.

pi, ln 2, the Euler-Mascheroni constant, zeta(2), zeta'(2), the
hyperfactorial and the Glaisher-Kinkelin constant A.  Each constant
that appears on both sides of an identity check has two routes: a
production route and an independent witness route, so the checks stay
non-circular.

* gamma: Euler-Maclaurin-corrected harmonic sums (production) vs. the
  inversion of the accelerated eta'(1) series (cross-check only).
* A: the hyperfactorial limit with one asymptotic correction (witness,
  error O(n^-4)) vs. the zeta'(2) relation (production above 20 digits).
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext
from math import isqrt

from .precision import PrecisionContext, Real, ln, pi
from .series import _CompensatedSum, acceleration_order, eta_prime_accelerated

__all__ = [
    "ConstantSet",
    "gamma_harmonic",
    "gamma_from_eta",
    "hyperfactorial_log",
    "glaisher_from_limit",
    "ln_glaisher_from_limit",
    "glaisher_from_zeta",
    "ln_glaisher_from_zeta",
    "zeta_prime_2",
    "constant_set",
]


@dataclass(frozen=True)
class ConstantSet:
    """All constants of one context, computed by the production routes."""

    pi: Real
    ln2: Real
    gamma: Real
    zeta2: Real
    zeta_prime2: Real
    ln_glaisher: Real
    glaisher: Real
    digits: int


_GAMMA_CACHE: dict[int, Real] = {}
_CONSTANT_CACHE: dict[tuple[int, int], ConstantSet] = {}


def _ceil_root(value: int, root: int) -> int:
    """ceil(value ** (1/root)) for positive integers, exactly."""
    r = 1 << -(-value.bit_length() // root)
    while True:
        nr = ((root - 1) * r + value // r ** (root - 1)) // root
        if nr >= r:
            break
        r = nr
    while r**root < value:
        r += 1
    return r


def gamma_harmonic(ctx: PrecisionContext) -> Real:
    """Euler-Mascheroni constant from H_n - ln n with corrections
    -1/(2n) + 1/(12n^2) - 1/(120n^4) + 1/(252n^6).

    n is chosen so the first omitted term 1/(240 n^8) is below one unit
    of working precision.  This is the production (independent) route.
    """
    key = ctx.working_digits
    cached = _GAMMA_CACHE.get(key)
    if cached is not None:
        return cached
    n = _ceil_root(10**ctx.working_digits // 240 + 1, 8)
    with localcontext(ctx.decimal_context()):
        acc = _CompensatedSum()
        one = Decimal(1)
        for k in range(1, n + 1):
            acc.add(one / k)
        nd = Decimal(n)
        n2 = nd * nd
        value = (
            acc.total()
            - nd.ln()
            - 1 / (2 * nd)
            + 1 / (12 * n2)
            - 1 / (120 * n2 * n2)
            + 1 / (252 * n2 * n2 * n2)
        )
    _GAMMA_CACHE[key] = value
    return value


def gamma_from_eta(ctx: PrecisionContext, eta_prime_one: Real | None = None) -> Real:
    """gamma = (eta'(1) + (ln 2)^2 / 2) / ln 2, the dependent route.

    Uses the accelerated eta'(1) unless a value is supplied; kept only
    for cross-checking against gamma_harmonic.
    """
    if eta_prime_one is None:
        eta_prime_one = eta_prime_accelerated(1, acceleration_order(ctx), ctx).value
    with localcontext(ctx.decimal_context()):
        ln2 = Decimal(2).ln()
        return (eta_prime_one + ln2 * ln2 / 2) / ln2


def hyperfactorial_log(n: int, ctx: PrecisionContext) -> Real:
    """ln H(n) = sum_{k=1}^{n} k ln k, accumulated in index order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    with localcontext(ctx.decimal_context()):
        acc = _CompensatedSum()
        for k in range(2, n + 1):
            acc.add(k * Decimal(k).ln())
        return acc.total()


def ln_glaisher_from_limit(n: int, ctx: PrecisionContext) -> Real:
    """ln A from the hyperfactorial limit at finite n, error O(n^-4).

    ln A ~ ln H(n) - (n^2/2 + n/2 + 1/12) ln n + n^2/4 - 1/(720 n^2);
    the 1/(720 n^2) correction term turns the raw O(n^-2) limit into
    O(n^-4).  The combination cancels ~log10(n^2 ln n) leading digits,
    so it is evaluated with extra internal digits.
    """
    if n < 10:
        raise ValueError("n must be >= 10")
    extra = 12 + len(str(n)) * 2
    with localcontext(ctx.decimal_context(extra_digits=extra)):
        acc = _CompensatedSum()
        for k in range(2, n + 1):
            acc.add(k * Decimal(k).ln())
        nd = Decimal(n)
        n2 = nd * nd
        raw = (
            acc.total()
            - (n2 / 2 + nd / 2 + Decimal(1) / 12) * nd.ln()
            + n2 / 4
            - 1 / (720 * n2)
        )
    return ctx.decimal_context().plus(raw)


def glaisher_from_limit(n: int, ctx: PrecisionContext) -> Real:
    """The Glaisher-Kinkelin constant by the hyperfactorial limit route."""
    value = ln_glaisher_from_limit(n, ctx)
    with localcontext(ctx.decimal_context()):
        return value.exp()


def zeta_prime_2(ctx: PrecisionContext) -> Real:
    """zeta'(2) = 2 eta'(2) - ln 2 * pi^2 / 6, eta'(2) accelerated."""
    eta2 = eta_prime_accelerated(2, acceleration_order(ctx), ctx).value
    with localcontext(ctx.decimal_context()):
        p = pi(ctx)
        return 2 * eta2 - Decimal(2).ln() * p * p / 6


def ln_glaisher_from_zeta(ctx: PrecisionContext) -> Real:
    """ln A = (gamma + ln(2 pi) - 6 zeta'(2)/pi^2) / 12.

    High-precision production route: gamma from the harmonic route,
    zeta'(2) from the accelerated series.
    """
    zp2 = zeta_prime_2(ctx)
    gamma = gamma_harmonic(ctx)
    with localcontext(ctx.decimal_context()):
        p = pi(ctx)
        return (gamma + (2 * p).ln() - 6 * zp2 / (p * p)) / 12


def glaisher_from_zeta(ctx: PrecisionContext) -> Real:
    """The Glaisher-Kinkelin constant by the zeta'(2) relation."""
    value = ln_glaisher_from_zeta(ctx)
    with localcontext(ctx.decimal_context()):
        return value.exp()


def _auto_limit_n(digits: int) -> int:
    # truncation ~ 1/(5040 n^4); aim two digits below the output digits
    return max(10, _ceil_root(10 ** (digits + 2) // 5040 + 1, 4))


def constant_set(ctx: PrecisionContext) -> ConstantSet:
    """All constants at context precision, cached per context.

    gamma always comes from the harmonic route.  A comes from the
    hyperfactorial limit (auto-chosen n) up to 20 requested digits and
    from the zeta'(2) relation above that.
    """
    key = (ctx.digits, ctx.guard_digits)
    cached = _CONSTANT_CACHE.get(key)
    if cached is not None:
        return cached
    p = pi(ctx)
    ln2 = ln(2, ctx)
    gamma = gamma_harmonic(ctx)
    with localcontext(ctx.decimal_context()):
        zeta2 = p * p / 6
    zp2 = zeta_prime_2(ctx)
    if ctx.digits <= 20:
        ln_a = ln_glaisher_from_limit(_auto_limit_n(ctx.digits), ctx)
    else:
        ln_a = ln_glaisher_from_zeta(ctx)
    with localcontext(ctx.decimal_context()):
        glaisher = ln_a.exp()
    result = ConstantSet(
        pi=p,
        ln2=ln2,
        gamma=gamma,
        zeta2=zeta2,
        zeta_prime2=zp2,
        ln_glaisher=ln_a,
        glaisher=glaisher,
        digits=ctx.digits,
    )
    _CONSTANT_CACHE[key] = result
    return result
