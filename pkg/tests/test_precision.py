"""Decimal arithmetic core: contexts, field ops, exp/ln/power, pi, formatting."""

from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from etaprod import (
    PrecisionContext,
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
from etaprod.precision import _PI_CACHE

# frozen via scripts/recompute_oracles.py
PI_30 = "3.14159265358979323846264338328"
PI_15 = "3.14159265358979"
LN2_30 = "0.693147180559945309417232121458"
E_30 = "2.71828182845904523536028747135"
SQRT2_30 = "1.41421356237309504880168872421"
CBRT3_30 = "1.44224957030740838232163831078"


class TestContext:
    def test_default_guard_policy(self):
        assert make_context(30) == PrecisionContext(digits=30, guard_digits=8)
        assert make_context(100) == PrecisionContext(digits=100, guard_digits=10)
        assert make_context(10).guard_digits == 8

    def test_rejects_too_few_digits(self):
        with pytest.raises(ValueError):
            make_context(5)
        with pytest.raises(ValueError):
            make_context(9)
        with pytest.raises(ValueError):
            PrecisionContext(digits=8, guard_digits=8)
        with pytest.raises(ValueError):
            PrecisionContext(digits=30, guard_digits=4)

    def test_working_digits(self):
        assert make_context(30).working_digits == 38

    def test_as_real_rejects_float(self, ctx30):
        with pytest.raises(TypeError):
            as_real(0.5, ctx30)
        assert as_real("0.5", ctx30) == Decimal("0.5")
        assert as_real(Fraction(1, 4), ctx30) == Decimal("0.25")


class TestFieldOps:
    def test_add(self, ctx30):
        assert add(Decimal(1), Decimal(1), ctx30) == 2

    def test_div_expands_to_context_precision(self, ctx30):
        q = div(Decimal(1), Decimal(3), ctx30)
        assert format_real(q, 30) == "0." + "3" * 30

    def test_div_by_zero(self, ctx30):
        with pytest.raises(ZeroDivisionError):
            div(Decimal(1), Decimal(0), ctx30)

    @given(
        a=st.integers(min_value=-(10**15), max_value=10**15),
        b=st.integers(min_value=-(10**15), max_value=10**15),
    )
    def test_ops_match_exact_rationals(self, ctx30, a, b):
        # results agree with exact Fraction arithmetic to one working ulp
        ra, rb = Decimal(a), Decimal(b)
        checks = [
            (add(ra, rb, ctx30), Fraction(a) + b),
            (sub(ra, rb, ctx30), Fraction(a) - b),
            (mul(ra, rb, ctx30), Fraction(a) * b),
        ]
        if b != 0:
            checks.append((div(ra, rb, ctx30), Fraction(a, b)))
        for got, want in checks:
            err = abs(Fraction(got) - want)
            assert err <= Fraction(output_ulp(got, ctx30.working_digits))


class TestLn:
    def test_ln_one_is_exactly_zero(self, ctx30):
        assert ln(Decimal(1), ctx30) == 0

    def test_ln_two(self, ctx30):
        assert format_real(ln(2, ctx30), 30) == LN2_30

    def test_ln_rejects_nonpositive(self, ctx30):
        with pytest.raises(ValueError):
            ln(Decimal(0), ctx30)
        with pytest.raises(ValueError):
            ln(Decimal(-3), ctx30)


class TestExp:
    def test_exp_zero_is_exactly_one(self, ctx30):
        assert exp(Decimal(0), ctx30) == 1

    def test_exp_one(self, ctx30):
        assert format_real(exp(1, ctx30), 30) == E_30

    def test_exp_ln_two(self, ctx30):
        x = exp(ln(2, ctx30), ctx30)
        assert abs(x - 2) <= Decimal("2e-30")

    def test_exp_overflow(self, ctx30):
        with pytest.raises(OverflowError):
            exp(Decimal(10) ** 8, ctx30)

    def test_exp_large_argument_within_range(self, ctx30):
        # decimal exponents up to 1e7 are supported
        x = exp(Decimal(3_000_000), ctx30)
        assert x.adjusted() >= 10**6

    @given(n=st.integers(min_value=1, max_value=10**6))
    @settings(max_examples=100)
    def test_exp_ln_inverse(self, ctx30, n):
        # x spans [1e-3, 1e3]; |exp(ln x) - x| <= 1e-30 * x
        x = div(Decimal(n), Decimal(1000), ctx30)
        back = exp(ln(x, ctx30), ctx30)
        assert abs(back - x) <= Decimal("1e-30") * x


class TestPower:
    def test_square_root_of_two(self, ctx30):
        half = as_real("0.5", ctx30)
        assert format_real(power(2, half, ctx30), 30) == SQRT2_30

    def test_cube_root_of_three(self, ctx30):
        third = div(Decimal(1), Decimal(3), ctx30)
        assert format_real(power(3, third, ctx30), 30) == CBRT3_30

    def test_zero_exponent_is_exactly_one(self, ctx30):
        assert power(7, Decimal(0), ctx30) == 1

    @given(n=st.integers(min_value=1, max_value=10**6))
    def test_unit_exponent(self, ctx30, n):
        # guard digits keep the exp(ln x) composition within one ulp of
        # the requested output digits
        x = div(Decimal(n), Decimal(1000), ctx30)
        assert abs(power(x, Decimal(1), ctx30) - x) <= output_ulp(x, ctx30.digits)

    def test_rejects_nonpositive_base(self, ctx30):
        with pytest.raises(ValueError):
            power(Decimal(-2), Decimal("0.5"), ctx30)
        with pytest.raises(ValueError):
            power(Decimal(0), Decimal(2), ctx30)


class TestPi:
    def test_thirty_digits(self, ctx30):
        assert format_real(pi(ctx30), 30) == PI_30

    def test_fifteen_digits(self, ctx15):
        assert format_real(pi(ctx15), 15) == PI_15

    def test_pi_over_pi(self, ctx30):
        assert div(pi(ctx30), pi(ctx30), ctx30) == 1

    def test_cache_determinism(self, ctx30):
        first = pi(ctx30)
        _PI_CACHE.clear()
        second = pi(ctx30)
        assert str(first) == str(second)


class TestPrecisionInvariants:
    @pytest.mark.parametrize("digits", [20, 30])
    def test_precision_monotonicity(self, digits):
        # recomputing at digits+10 and rounding back reproduces the answer
        lo, hi = make_context(digits), make_context(digits + 10)
        for compute in (pi, lambda c: ln(2, c), lambda c: exp(1, c)):
            assert format_real(compute(hi), digits) == format_real(compute(lo), digits)

    def test_determinism_bit_identical(self, ctx30):
        a = power(3, div(Decimal(1), Decimal(7), ctx30), ctx30)
        b = power(3, div(Decimal(1), Decimal(7), ctx30), ctx30)
        assert str(a) == str(b)


class TestFormatting:
    def test_round_half_even(self):
        assert format_real(Decimal("2.5"), 1) == "2"
        assert format_real(Decimal("3.5"), 1) == "4"
        assert format_real(Decimal("1.25"), 2) == "1.2"

    @given(
        mantissa=st.integers(min_value=-(10**38), max_value=10**38).filter(bool),
        scale=st.integers(min_value=-30, max_value=30),
    )
    def test_round_trip(self, mantissa, scale):
        x = Decimal(mantissa).scaleb(scale)
        s = format_real(x, 30)
        assert Decimal(s) == Decimal(format_real(Decimal(s), 30))
        assert s == format_real(Decimal(s), 30)

    def test_round_trip_is_exact_at_context_digits(self, ctx30):
        x = pi(ctx30)
        s = format_real(x, ctx30.working_digits)
        assert Decimal(s) == x
