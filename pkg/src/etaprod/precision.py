"""Fixed-decimal-precision real arithmetic.

All quantities in this package are decimal floating-point numbers
(``decimal.Decimal``) carried at a working precision of
``digits + guard_digits`` significant decimal digits.  The decimal
representation (integer significand, decimal exponent) makes "digits"
exact and keeps every result bit-reproducible across runs and machines.

Elementary functions: ``ln`` and ``exp`` come from the C ``decimal``
module (correctly rounded), ``power`` is composed as ``exp(y*ln(x))``
for positive bases, and ``pi`` is evaluated with Machin's arctangent
formula.  Operations never produce NaN or infinity: they raise instead.
"""

from __future__ import annotations

import decimal
import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction

__all__ = [
    "Real",
    "PrecisionContext",
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
]

Real = Decimal

# Decimal exponent range; the spec of this library promises at least 1e6.
EXPONENT_LIMIT = 10**7

_TRAPS = {
    decimal.InvalidOperation: True,
    decimal.DivisionByZero: True,
    decimal.Overflow: True,
}


@dataclass(frozen=True)
class PrecisionContext:
    """Requested output digits plus internal guard digits.

    Every operation performed under this context works at
    ``digits + guard_digits`` significant decimal digits; the guard
    digits absorb accumulated rounding so the leading ``digits`` stay
    trustworthy.
    """

    digits: int
    guard_digits: int

    def __post_init__(self) -> None:
        if self.digits < 10:
            raise ValueError(
                f"digits={self.digits}: at least 10 digits are required "
                "for the verification suites"
            )
        if self.guard_digits < 8:
            raise ValueError(f"guard_digits={self.guard_digits}: minimum is 8")

    @property
    def working_digits(self) -> int:
        return self.digits + self.guard_digits

    def decimal_context(self, extra_digits: int = 0) -> decimal.Context:
        """A fresh decimal context at working precision (+ extra digits)."""
        return decimal.Context(
            prec=self.working_digits + extra_digits,
            rounding=decimal.ROUND_HALF_EVEN,
            Emax=EXPONENT_LIMIT,
            Emin=-EXPONENT_LIMIT,
            traps=[t for t, on in _TRAPS.items() if on],
        )

    @property
    def epsilon(self) -> Real:
        """One unit in the last working digit of a number of magnitude 1."""
        return Decimal(1).scaleb(-(self.working_digits - 1))


def make_context(digits: int) -> PrecisionContext:
    """Context with the default guard policy ``max(8, ceil(digits/10))``."""
    if not isinstance(digits, int):
        raise TypeError("digits must be an integer")
    if digits < 10:
        raise ValueError(
            f"digits={digits}: at least 10 digits are required "
            "for the verification suites"
        )
    return PrecisionContext(digits=digits, guard_digits=max(8, -(-digits // 10)))


def as_real(value: Real | int | str | Fraction, ctx: PrecisionContext) -> Real:
    """Coerce an exact value to a Real at working precision.

    Floats are rejected: their binary rounding would silently corrupt
    the decimal digits this package promises.
    """
    if isinstance(value, float):
        raise TypeError("float is inexact here; pass a str, int, Fraction or Decimal")
    with localcontext(ctx.decimal_context()):
        if isinstance(value, Fraction):
            return Decimal(value.numerator) / Decimal(value.denominator)
        return +Decimal(value)


# ---------------------------------------------------------------------------
# field operations
# ---------------------------------------------------------------------------


def add(a: Real, b: Real, ctx: PrecisionContext) -> Real:
    with localcontext(ctx.decimal_context()):
        return a + b


def sub(a: Real, b: Real, ctx: PrecisionContext) -> Real:
    with localcontext(ctx.decimal_context()):
        return a - b


def mul(a: Real, b: Real, ctx: PrecisionContext) -> Real:
    with localcontext(ctx.decimal_context()):
        return a * b


def div(a: Real, b: Real, ctx: PrecisionContext) -> Real:
    if b == 0:
        raise ZeroDivisionError("division by zero")
    with localcontext(ctx.decimal_context()):
        return a / b


# ---------------------------------------------------------------------------
# elementary functions
# ---------------------------------------------------------------------------


def ln(x: Real | int, ctx: PrecisionContext) -> Real:
    """Natural logarithm; requires x > 0.  ln(1) is exactly 0."""
    x = Decimal(x) if isinstance(x, int) else x
    if x <= 0:
        raise ValueError(f"ln requires a positive argument, got {x}")
    with localcontext(ctx.decimal_context()):
        return x.ln()


def exp(x: Real | int, ctx: PrecisionContext) -> Real:
    """Exponential; exp(0) is exactly 1.  Raises OverflowError out of range."""
    x = Decimal(x) if isinstance(x, int) else x
    try:
        with localcontext(ctx.decimal_context()):
            return x.exp()
    except decimal.Overflow:
        raise OverflowError(
            f"exp({x}) exceeds the supported decimal exponent range "
            f"(+/-{EXPONENT_LIMIT})"
        ) from None


def power(x: Real | int, y: Real | int, ctx: PrecisionContext) -> Real:
    """x**y for x > 0, evaluated as exp(y*ln(x))."""
    x = Decimal(x) if isinstance(x, int) else x
    y = Decimal(y) if isinstance(y, int) else y
    if x <= 0:
        raise ValueError(f"power requires a positive base, got {x}")
    if y == 0:
        return Decimal(1)
    with localcontext(ctx.decimal_context()):
        return (y * x.ln()).exp()


# ---------------------------------------------------------------------------
# pi (Machin's formula)
# ---------------------------------------------------------------------------

_PI_CACHE: dict[int, Real] = {}


def _arctan_reciprocal(q: int, prec: int) -> Real:
    """atan(1/q) for integer q >= 2 by its Taylor series at precision prec."""
    with localcontext(
        decimal.Context(prec=prec, Emax=EXPONENT_LIMIT, Emin=-EXPONENT_LIMIT)
    ):
        x = Decimal(1) / q
        xx = x * x
        threshold = Decimal(1).scaleb(-(prec + 2))
        total = Decimal(0)
        term = x
        k = 0
        while term > threshold:
            total += term / (2 * k + 1) if k % 2 == 0 else -term / (2 * k + 1)
            term *= xx
            k += 1
        return total


def pi(ctx: PrecisionContext) -> Real:
    """pi = 16*atan(1/5) - 4*atan(1/239), cached per working precision."""
    key = ctx.working_digits
    cached = _PI_CACHE.get(key)
    if cached is not None:
        return cached
    prec = ctx.working_digits + 10
    with localcontext(
        decimal.Context(prec=prec, Emax=EXPONENT_LIMIT, Emin=-EXPONENT_LIMIT)
    ):
        raw = 16 * _arctan_reciprocal(5, prec) - 4 * _arctan_reciprocal(239, prec)
    value = ctx.decimal_context().plus(raw)
    _PI_CACHE[key] = value
    return value


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def format_real(x: Real, digits: int | PrecisionContext) -> str:
    """Decimal string rounded half-even to `digits` significant digits.

    This is the only serialization of Real values; parsing the string
    back with Decimal() reproduces the rounded value exactly.
    """
    if isinstance(digits, PrecisionContext):
        digits = digits.digits
    if digits < 1:
        raise ValueError("digits must be positive")
    c = decimal.Context(prec=digits, rounding=decimal.ROUND_HALF_EVEN)
    return str(c.plus(x))


def output_ulp(x: Real, digits: int | PrecisionContext) -> Real:
    """One unit in the last place of x when rendered at `digits` digits."""
    if isinstance(digits, PrecisionContext):
        digits = digits.digits
    if x == 0:
        return Decimal(1).scaleb(-digits + 1)
    return Decimal(1).scaleb(x.adjusted() - digits + 1)


def _math_ceil_root(value: int, root: int) -> int:
    """ceil(value**(1/root)) for positive integers, exactly."""
    if value <= 0:
        raise ValueError("value must be positive")
    r = round(value ** (1.0 / root)) if value.bit_length() < 900 else None
    if r is None:
        # integer nth root by repeated isqrt only works for powers of two
        # roots; fall back to Newton on ints
        r = 1 << -(-value.bit_length() // root)
        while True:
            nr = ((root - 1) * r + value // r ** (root - 1)) // root
            if nr >= r:
                break
            r = nr
    while r**root < value:
        r += 1
    while r > 1 and (r - 1) ** root >= value:
        r -= 1
    return r
