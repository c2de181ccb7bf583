"""Command-line surface: constants, series, products, verification, orders.

Subcommands
    constants   constant table at the requested precision
    eta         eta(s) by the direct or averaged series
    eta-prime   eta'(s) by the grouped, accelerated or extrapolated route
    product     generalized Wallis partial-product table
    verify      check the closed-form identities for s = 0, 1, 2
    order       empirical convergence order of the pair product

All numbers are serialized as decimal strings at the requested digit
count, never as binary floats, so identical invocations produce
byte-identical output.  Exit codes: 0 success / all checks passed,
1 verification failure or a domain error while computing, 2 invalid
invocation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from decimal import Decimal

from . import products, series
from .constants import constant_set
from .precision import PrecisionContext, Real, format_real, make_context
from .products import PrecisionExhaustedError, Target

__all__ = ["VerificationReport", "run_verify", "main", "build_parser"]

DEFAULT_TOLERANCES = {"s0": "1e-12", "s1": "1e-20", "s2": "1e-8"}


@dataclass(frozen=True)
class VerificationReport:
    """One identity check: both sides, error, tolerance, verdict."""

    case: str
    lhs: Real
    rhs: Real
    abs_error: Real
    tolerance: Real
    passed: bool
    digits: int
    routes: str


def run_verify(
    case: str, digits: int, tolerance: Decimal | None = None
) -> list[VerificationReport]:
    """Verify exp(2 eta'(s)) against the closed form for the given case(s).

    The right-hand sides use only non-circular constant routes: gamma
    from harmonic sums and, for s=2, A from the hyperfactorial limit at
    n=2000.
    """
    ctx = make_context(digits)
    cases = ["s0", "s1", "s2"] if case == "all" else [case]
    reports = []
    for c in cases:
        s_case = int(c[1])
        lhs = products.series_target(s_case, ctx).value
        rhs = products.closed_form_target(
            s_case, ctx, glaisher_route="limit", glaisher_limit_n=2000
        ).value
        abs_error = abs(lhs - rhs)
        tol = tolerance if tolerance is not None else Decimal(DEFAULT_TOLERANCES[c])
        routes = {
            "s0": "pi:machin",
            "s1": "gamma:harmonic",
            "s2": "gamma:harmonic,A:limit(n=2000)",
        }[c]
        reports.append(
            VerificationReport(
                case=c,
                lhs=lhs,
                rhs=rhs,
                abs_error=abs_error,
                tolerance=tol,
                passed=abs_error <= tol,
                digits=digits,
                routes=routes,
            )
        )
    return reports


# ---------------------------------------------------------------------------
# serialization helpers
# ---------------------------------------------------------------------------


def _fmt(x: Real, digits: int) -> str:
    return format_real(x, digits)


def _series_result_obj(r: series.SeriesResult, digits: int) -> dict:
    return {
        "value": _fmt(r.value, digits),
        "s": _fmt(r.s, digits),
        "terms_used": r.terms_used,
        "error_bound": _fmt(r.error_bound, digits),
        "method": r.method.value,
    }


def _report_obj(r: VerificationReport) -> dict:
    return {
        "case": r.case,
        "lhs": _fmt(r.lhs, r.digits),
        "rhs": _fmt(r.rhs, r.digits),
        "abs_error": _fmt(r.abs_error, r.digits),
        "tolerance": str(r.tolerance),
        "passed": r.passed,
        "digits": r.digits,
        "routes": r.routes,
    }


def _row_obj(row: products.ProductRow, digits: int) -> dict:
    return {
        "pair_index": row.pair_index,
        "log_factor": _fmt(row.log_factor, digits),
        "cumulative_log": _fmt(row.cumulative_log, digits),
        "cumulative_value": _fmt(row.cumulative_value, digits),
        "abs_error": None if row.abs_error is None else _fmt(row.abs_error, digits),
    }


def _to_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _to_csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# subcommand runners
# ---------------------------------------------------------------------------


def _cmd_constants(args: argparse.Namespace) -> int:
    ctx = make_context(args.digits)
    cs = constant_set(ctx)
    d = args.digits
    fields = [
        ("pi", cs.pi),
        ("ln2", cs.ln2),
        ("gamma", cs.gamma),
        ("zeta2", cs.zeta2),
        ("zeta_prime2", cs.zeta_prime2),
        ("ln_glaisher", cs.ln_glaisher),
        ("glaisher", cs.glaisher),
    ]
    if args.format == "json":
        obj = {name: _fmt(v, d) for name, v in fields}
        obj["digits"] = d
        text = _to_json(obj)
    else:
        rows = [[name, _fmt(v, d)] for name, v in fields]
        rows.append(["digits", str(d)])
        text = _to_csv(["constant", "value"], rows)
    _emit(text, args.output)
    return 0


def _cmd_eta(args: argparse.Namespace) -> int:
    ctx = make_context(args.digits)
    s = Decimal(args.s)
    if args.method == "direct":
        result = series.eta_direct(s, args.terms, ctx)
    else:
        result = series.eta_averaged(s, args.terms, ctx)
    return _emit_series_result(result, args)


def _cmd_eta_prime(args: argparse.Namespace) -> int:
    ctx = make_context(args.digits)
    s = Decimal(args.s)
    if args.method == "grouped":
        result = series.eta_prime_grouped(s, args.terms, ctx)
    elif args.method == "accelerated":
        order = args.order if args.order else series.acceleration_order(ctx)
        result = series.eta_prime_accelerated(s, order, ctx)
    else:
        result = series.eta_prime_extrapolated(s, args.n_min, args.levels, ctx)
    return _emit_series_result(result, args)


def _emit_series_result(result: series.SeriesResult, args: argparse.Namespace) -> int:
    obj = _series_result_obj(result, args.digits)
    if args.format == "json":
        text = _to_json(obj)
    else:
        text = _to_csv(list(obj.keys()), [[str(v) for v in obj.values()]])
    _emit(text, args.output)
    return 0


def _product_target(args: argparse.Namespace, ctx: PrecisionContext, s: Decimal) -> Target | None:
    choice = args.target
    if choice == "none":
        return None
    if choice == "closed" or (choice == "auto" and s in (0, 1, 2)):
        if s not in (0, 1, 2):
            raise ValueError("closed-form targets exist only for s in {0, 1, 2}")
        return products.closed_form_target(int(s), ctx)
    if choice == "series":
        return products.series_target(s, ctx)
    return None


def _cmd_product(args: argparse.Namespace) -> int:
    ctx = make_context(args.digits)
    s = Decimal(args.s)
    target = _product_target(args, ctx, s)
    rows = products.partial_product(
        s, args.pairs, ctx, target=target, emit_every=args.every
    )
    d = args.digits
    if args.format == "json":
        obj = {
            "s": _fmt(s, d),
            "pairs": args.pairs,
            "emit_every": args.every,
            "target": None
            if target is None
            else {"s": _fmt(target.s, d), "value": _fmt(target.value, d),
                  "route": target.route.value},
            "rows": [_row_obj(r, d) for r in rows],
        }
        text = _to_json(obj)
    else:
        csv_rows = [
            [
                str(r.pair_index),
                _fmt(r.log_factor, d),
                _fmt(r.cumulative_value, d),
                "" if r.abs_error is None else _fmt(r.abs_error, d),
            ]
            for r in rows
        ]
        text = _to_csv(["n", "log_factor", "cumulative_value", "abs_error"], csv_rows)
    _emit(text, args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    tolerance = Decimal(args.tolerance) if args.tolerance else None
    reports = run_verify(args.case, args.digits, tolerance)
    if args.format == "json":
        objs = [_report_obj(r) for r in reports]
        text = _to_json(objs[0] if len(objs) == 1 else {"reports": objs})
    else:
        header = ["case", "lhs", "rhs", "abs_error", "tolerance", "passed",
                  "digits", "routes"]
        rows = [
            [r.case, _fmt(r.lhs, r.digits), _fmt(r.rhs, r.digits),
             _fmt(r.abs_error, r.digits), str(r.tolerance),
             str(r.passed).lower(), str(r.digits), r.routes]
            for r in reports
        ]
        text = _to_csv(header, rows)
    _emit(text, args.output)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_order(args: argparse.Namespace) -> int:
    ctx = make_context(args.digits)
    s = Decimal(args.s)
    estimate = products.convergence_order(s, args.n_min, args.doublings, ctx)
    obj = {
        "s": _fmt(s, args.digits),
        "n_min": args.n_min,
        "doublings": args.doublings,
        "order": _fmt(estimate, args.digits),
    }
    if args.format == "json":
        text = _to_json(obj)
    else:
        text = _to_csv(list(obj.keys()), [[str(v) for v in obj.values()]])
    _emit(text, args.output)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--digits", type=int, default=30,
                     help="requested output digits (default 30, minimum 10)")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--output", default=None, metavar="PATH",
                     help="write to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="etaprod",
        description="Dirichlet eta derivatives, generalized Wallis products "
                    "and their closed-form identities at configurable "
                    "decimal precision.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("constants", help="constant table")
    _add_common(p)
    p.set_defaults(func=_cmd_constants)

    p = subs.add_parser("eta", help="eta(s) partial sums")
    _add_common(p)
    p.add_argument("--s", required=True, help="series parameter (decimal string)")
    p.add_argument("--method", choices=("direct", "averaged"), default="direct")
    p.add_argument("--terms", type=int, default=1000,
                   help="terms (direct) or bracket groups (averaged)")
    p.set_defaults(func=_cmd_eta)

    p = subs.add_parser("eta-prime", help="eta'(s) by several routes")
    _add_common(p)
    p.add_argument("--s", required=True)
    p.add_argument("--method", choices=("grouped", "accelerated", "extrapolated"),
                   default="accelerated")
    p.add_argument("--terms", type=int, default=1000,
                   help="pair groups for the grouped route")
    p.add_argument("--order", type=int, default=0,
                   help="acceleration order (0 = choose from precision)")
    p.add_argument("--n-min", type=int, default=1000,
                   help="smallest sample length for the extrapolated route")
    p.add_argument("--levels", type=int, default=6,
                   help="extrapolation levels (doublings) for the extrapolated route")
    p.set_defaults(func=_cmd_eta_prime)

    p = subs.add_parser("product", help="partial-product table")
    _add_common(p)
    p.add_argument("--s", required=True)
    p.add_argument("--pairs", type=int, required=True, help="number of whole pairs")
    p.add_argument("--every", type=int, default=1, metavar="K",
                   help="emit a row every K pairs (final pair always emitted)")
    p.add_argument("--target", choices=("auto", "closed", "series", "none"),
                   default="auto",
                   help="error column target (auto: closed form when s is 0, 1 or 2)")
    p.set_defaults(func=_cmd_product)

    p = subs.add_parser("verify", help="check the s=0,1,2 identities")
    _add_common(p)
    p.add_argument("--case", choices=("s0", "s1", "s2", "all"), default="all")
    p.add_argument("--tolerance", default=None,
                   help="absolute tolerance (default per case: s0 1e-12, "
                        "s1 1e-20, s2 1e-8)")
    p.set_defaults(func=_cmd_verify)

    p = subs.add_parser("order", help="empirical convergence order")
    _add_common(p)
    p.add_argument("--s", required=True)
    p.add_argument("--n-min", type=int, default=1000)
    p.add_argument("--doublings", type=int, default=3)
    p.set_defaults(func=_cmd_order)

    return parser


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.digits < 10:
        parser.error("--digits must be at least 10")
    if args.command in ("eta", "eta-prime", "product", "order"):
        try:
            s = Decimal(args.s)
        except Exception:
            parser.error(f"--s must be a decimal number, got {args.s!r}")
        if not s.is_finite():
            parser.error("--s must be finite")
        if args.command == "product" and s < 0:
            parser.error("product requires s >= 0")
        if args.command == "order" and s < 0:
            parser.error("order requires s >= 0")
        if (
            args.command == "product"
            and args.target == "closed"
            and s not in (0, 1, 2)
        ):
            parser.error("--target closed requires s in {0, 1, 2}")
    if args.command == "product" and args.pairs < 1:
        parser.error("--pairs must be >= 1")
    if args.command == "product" and args.every < 1:
        parser.error("--every must be >= 1")
    if args.command == "order" and (args.n_min < 1 or args.doublings < 2):
        parser.error("--n-min must be >= 1 and --doublings >= 2")
    if args.command == "eta" and args.terms < 1:
        parser.error("--terms must be >= 1")
    if args.command == "eta-prime" and (
        args.terms < 1 or args.order < 0 or args.n_min < 1 or args.levels < 1
    ):
        parser.error("--terms/--n-min/--levels must be >= 1 and --order >= 0")
    if args.command == "verify" and args.tolerance is not None:
        try:
            tol = Decimal(args.tolerance)
        except Exception:
            parser.error(f"--tolerance must be a decimal number, got {args.tolerance!r}")
        floor = Decimal(1).scaleb(-(args.digits - 8))
        if tol < floor:
            parser.error(
                f"--tolerance {args.tolerance} is below the precision-feasible "
                f"floor 1e-{args.digits - 8} at --digits {args.digits}"
            )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OverflowError, PrecisionExhaustedError) as exc:
        sys.stderr.write(
            _to_json({"error": {"type": type(exc).__name__, "message": str(exc)}})
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
