#!/usr/bin/env python3
"""Regenerate every frozen oracle value used by the test suite.

The heavy reference parameters live here (harmonic gamma at n = 10^6,
Glaisher limit at n = 2000, acceleration order 120) so the tests can
pin their expected strings while staying fast.  Run from the repository
root:

    python scripts/recompute_oracles.py
"""

from __future__ import annotations

import sys
import time
from decimal import Decimal, localcontext
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import oracles  # noqa: E402
from oracles import _ctx, to_digits  # noqa: E402


def main() -> None:
    t0 = time.time()
    prec = 45

    pi = oracles.oracle_pi(prec)
    ln2 = oracles.oracle_ln2(prec)
    e1 = oracles.oracle_e(prec)
    sqrt2 = oracles.oracle_nth_root(2, 2, prec)
    cbrt3 = oracles.oracle_nth_root(3, 3, prec)
    gamma = oracles.oracle_gamma(10**6, 60, terms=8)
    eta_neg_half = oracles.oracle_eta(Decimal("-0.5"), 120, prec)
    etap1 = oracles.oracle_eta_prime(Decimal(1), 120, prec)
    etap2 = oracles.oracle_eta_prime(Decimal(2), 120, prec)
    ln_a_limit = oracles.oracle_ln_glaisher(2000, 40)

    with localcontext(_ctx(prec)):
        pi_half = pi / 2
        zeta2 = pi * pi / 6
        zeta2_half = pi * pi / 12
        half_ln_pi_half = pi_half.ln() / 2
        etap1_closed = (2 * gamma - ln2) * ln2 / 2
        target_s1 = ((2 * gamma - ln2) * ln2).exp()
        target_s2 = (2 * etap2).exp()
        zeta_prime2 = 2 * etap2 - ln2 * zeta2
        ln_a_zeta = (gamma + (2 * pi).ln() - 6 * zeta_prime2 / (pi * pi)) / 12
        glaisher = ln_a_zeta.exp()
        glaisher_limit = ln_a_limit.exp()
        t1_s1 = ln2 - Decimal(3).ln() / 3
        t1_s2 = ln2 / 2 - Decimal(3).ln() / 9
        f1_s1 = t1_s1.exp()
        f1_s2 = t1_s2.exp()

    out = [
        ("PI_30", to_digits(pi, 30)),
        ("PI_15", to_digits(pi, 15)),
        ("PI_HALF_30", to_digits(pi_half, 30)),
        ("LN2_30", to_digits(ln2, 30)),
        ("E_30", to_digits(e1, 30)),
        ("SQRT2_30", to_digits(sqrt2, 30)),
        ("CBRT3_30", to_digits(cbrt3, 30)),
        ("GAMMA_30", to_digits(gamma, 30)),
        ("GAMMA_15", to_digits(gamma, 15)),
        ("ZETA2_30", to_digits(zeta2, 30)),
        ("ZETA2_HALF_30", to_digits(zeta2_half, 30)),
        ("ETA_NEG_HALF_30", to_digits(eta_neg_half, 30)),
        ("ETA_PRIME_1_30", to_digits(etap1, 30)),
        ("ETA_PRIME_1_CLOSED_30", to_digits(etap1_closed, 30)),
        ("ETA_PRIME_2_30", to_digits(etap2, 30)),
        ("HALF_LN_PI_HALF_30", to_digits(half_ln_pi_half, 30)),
        ("ZETA_PRIME_2_30", to_digits(zeta_prime2, 30)),
        ("LN_GLAISHER_30", to_digits(ln_a_zeta, 30)),
        ("GLAISHER_30", to_digits(glaisher, 30)),
        ("GLAISHER_LIMIT_2000_30", to_digits(glaisher_limit, 30)),
        ("TARGET_S1_30", to_digits(target_s1, 30)),
        ("TARGET_S2_30", to_digits(target_s2, 30)),
        ("PAIR1_LOG_S1_30", to_digits(t1_s1, 30)),
        ("PAIR1_LOG_S2_30", to_digits(t1_s2, 30)),
        ("PAIR1_VALUE_S1_30", to_digits(f1_s1, 30)),
        ("PAIR1_VALUE_S2_30", to_digits(f1_s2, 30)),
    ]
    width = max(len(name) for name, _ in out)
    for name, value in out:
        print(f'{name:<{width}} = "{value}"')
    print(f"# regenerated in {time.time() - t0:.1f}s", file=sys.stderr)


if __name__ == "__main__":
    main()
