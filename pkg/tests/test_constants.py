"""Constant routes: gamma, hyperfactorial, Glaisher, zeta'(2), the full set."""

from decimal import Decimal, localcontext

import pytest

import oracles
from etaprod import (
    constant_set,
    exp,
    format_real,
    gamma_from_eta,
    gamma_harmonic,
    glaisher_from_limit,
    glaisher_from_zeta,
    hyperfactorial_log,
    ln,
    ln_glaisher_from_zeta,
    make_context,
    output_ulp,
    zeta_prime_2,
)
from etaprod.constants import _CONSTANT_CACHE, _GAMMA_CACHE

# frozen via scripts/recompute_oracles.py
GAMMA_30 = "0.577215664901532860606512090082"
GAMMA_15 = "0.577215664901533"
ZETA_PRIME_2_30 = "-0.937548254315843753702574094568"
LN_GLAISHER_30 = "0.248754477033784262547252993576"
GLAISHER_30 = "1.28242712910062263687534256887"
GLAISHER_LIMIT_2000_30 = "1.28242712910062262097223035660"


class TestGammaHarmonic:
    def test_thirty_digits(self, ctx30):
        assert format_real(gamma_harmonic(ctx30), 30) == GAMMA_30

    def test_fifteen_digits(self, ctx15):
        assert format_real(gamma_harmonic(ctx15), 15) == GAMMA_15

    def test_exp_consistency(self, ctx30):
        g = gamma_harmonic(ctx30)
        with localcontext(ctx30.decimal_context()):
            prod = exp(g, ctx30) * exp(-g, ctx30)
            assert abs(prod - 1) <= 2 * ctx30.epsilon

    def test_cache_determinism(self, ctx30):
        first = gamma_harmonic(ctx30)
        _GAMMA_CACHE.clear()
        second = gamma_harmonic(ctx30)
        assert str(first) == str(second)


class TestGammaFromEta:
    def test_agrees_with_harmonic_route(self, ctx30):
        # two genuinely different routes to the same constant
        a = gamma_harmonic(ctx30)
        b = gamma_from_eta(ctx30)
        assert abs(a - b) <= Decimal("1e-25")

    def test_agrees_at_lower_precision(self, ctx20):
        a = gamma_harmonic(ctx20)
        b = gamma_from_eta(ctx20)
        assert abs(a - b) <= Decimal("1e-15")
        assert format_real(b, 15) == GAMMA_15

    def test_formula_shape_with_zero_derivative(self, ctx30):
        # dropping the eta'(1) term leaves exactly ln(2)/2
        v = gamma_from_eta(ctx30, eta_prime_one=Decimal(0))
        with localcontext(ctx30.decimal_context()):
            assert abs(v - ln(2, ctx30) / 2) <= 3 * ctx30.epsilon


class TestHyperfactorial:
    def test_h1_is_zero(self, ctx30):
        assert hyperfactorial_log(1, ctx30) == 0

    def test_h3_is_log_108(self, ctx30):
        got = hyperfactorial_log(3, ctx30)
        assert abs(got - ln(108, ctx30)) <= Decimal("3e-37")

    def test_h4_is_log_27648(self, ctx30):
        got = hyperfactorial_log(4, ctx30)
        assert abs(got - ln(27648, ctx30)) <= Decimal("3e-37")

    def test_recurrence_up_to_500(self, ctx30):
        # ln H(n+1) - ln H(n) = (n+1) ln(n+1) at working precision
        prev = hyperfactorial_log(1, ctx30)
        for n in range(1, 501):
            cur = hyperfactorial_log(n + 1, ctx30)
            with localcontext(ctx30.decimal_context()):
                delta = cur - prev
                term = (n + 1) * Decimal(n + 1).ln()
                tolerance = 2 * output_ulp(cur, ctx30.working_digits)
                assert abs(delta - term) <= tolerance, n
            prev = cur

    def test_domain(self, ctx30):
        with pytest.raises(ValueError):
            hyperfactorial_log(0, ctx30)


class TestGlaisherLimit:
    def test_matches_frozen_value_at_n2000(self, ctx30):
        got = glaisher_from_limit(2000, ctx30)
        assert format_real(got, 30) == GLAISHER_LIMIT_2000_30

    def test_agrees_with_zeta_route_at_n400(self, ctx30):
        a = glaisher_from_limit(400, ctx30)
        b = glaisher_from_zeta(ctx30)
        assert abs(a - b) <= Decimal("1e-10")

    def test_fourth_order_error_decay(self, ctx30):
        # halving the truncation error ratio: n=10 vs n=20 shrinks ~16x
        reference = glaisher_from_limit(400, ctx30)
        e10 = abs(glaisher_from_limit(10, ctx30) - reference)
        e20 = abs(glaisher_from_limit(20, ctx30) - reference)
        ratio = e10 / e20
        assert Decimal(14) < ratio < Decimal(18)

    def test_domain(self, ctx30):
        with pytest.raises(ValueError):
            glaisher_from_limit(9, ctx30)


class TestGlaisherZeta:
    def test_thirty_digits(self, ctx30):
        assert format_real(glaisher_from_zeta(ctx30), 30) == GLAISHER_30

    def test_log_value(self, ctx30):
        assert format_real(ln_glaisher_from_zeta(ctx30), 30) == LN_GLAISHER_30

    def test_zeta_prime_2(self, ctx30):
        assert format_real(zeta_prime_2(ctx30), 30) == ZETA_PRIME_2_30

    def test_zeta_prime_2_round_trip(self, ctx30):
        # invert the relation through ln A and come back
        zp2 = zeta_prime_2(ctx30)
        ln_a = ln_glaisher_from_zeta(ctx30)
        g = gamma_harmonic(ctx30)
        with localcontext(ctx30.decimal_context()):
            from etaprod import pi

            p = pi(ctx30)
            back = (g + (2 * p).ln() - 12 * ln_a) * p * p / 6
            assert abs(back - zp2) <= output_ulp(zp2, ctx30.digits)


class TestConstantSet:
    def test_thirty_digit_values(self, ctx30):
        cs = constant_set(ctx30)
        assert format_real(cs.pi, 30) == "3.14159265358979323846264338328"
        assert format_real(cs.gamma, 30) == GAMMA_30
        assert format_real(cs.glaisher, 30) == GLAISHER_30
        assert format_real(cs.zeta_prime2, 30) == ZETA_PRIME_2_30
        assert cs.digits == 30

    def test_internal_consistency(self, ctx30):
        cs = constant_set(ctx30)
        with localcontext(ctx30.decimal_context()):
            assert abs(cs.glaisher - cs.ln_glaisher.exp()) <= output_ulp(
                cs.glaisher, ctx30.digits
            )
            assert abs(cs.zeta2 - cs.pi * cs.pi / 6) <= output_ulp(
                cs.zeta2, ctx30.digits
            )

    def test_limit_route_below_twenty_digits(self, ctx15):
        cs = constant_set(ctx15)
        assert format_real(cs.glaisher, 15) == "1.28242712910062"

    def test_cache_identity_and_determinism(self, ctx30):
        first = constant_set(ctx30)
        assert constant_set(ctx30) is first
        _CONSTANT_CACHE.clear()
        _GAMMA_CACHE.clear()
        second = constant_set(ctx30)
        assert str(first.glaisher) == str(second.glaisher)
        assert str(first.zeta_prime2) == str(second.zeta_prime2)

    def test_paper_printed_prefix(self, ctx30):
        # the constant's leading six figures
        assert format_real(constant_set(ctx30).glaisher, 30).startswith("1.28242")


class TestOracleReproduction:
    def test_gamma_oracle_reproduces_frozen_value(self):
        # independent route at desk-scale parameters: n = 1e5, eight
        # correction terms, 45 internal digits
        got = oracles.oracle_gamma(10**5, 45, terms=8)
        assert oracles.to_digits(got, 30) == GAMMA_30
        assert oracles.to_digits(got, 15) == GAMMA_15

    def test_glaisher_oracles_reproduce_frozen_values(self):
        ln_a = oracles.oracle_ln_glaisher(2000, 40)
        with localcontext(oracles._ctx(40)):
            assert oracles.to_digits(ln_a.exp(), 30) == GLAISHER_LIMIT_2000_30

    def test_zeta_prime_oracle_reproduces_frozen_value(self):
        etap2 = oracles.oracle_eta_prime(Decimal(2), 80, 45)
        ln2 = oracles.oracle_ln2(45)
        p = oracles.oracle_pi(45)
        with localcontext(oracles._ctx(45)):
            zp2 = 2 * etap2 - ln2 * p * p / 6
            ln_a = (
                oracles.oracle_gamma(10**5, 45)
                + (2 * p).ln()
                - 6 * zp2 / (p * p)
            ) / 12
            assert oracles.to_digits(zp2, 30) == ZETA_PRIME_2_30
            assert oracles.to_digits(ln_a, 30) == LN_GLAISHER_30
            assert oracles.to_digits(ln_a.exp(), 30) == GLAISHER_30
