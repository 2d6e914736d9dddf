"""Command line interface: ``seriesroots check|expand|seq|crosscheck``.

Exit status is 0 for integral / success, 1 for non-integral, undecided or a
failed cross-check, and 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import crosscheck
from .arith import PrimePower, rad
from .criteria import (
    DEFAULT_ORDER,
    ConsistencyError,
    PreconditionError,
    Verdict,
    decide_rational_power,
)
from .parse import CRITERIA, ParseError, SemanticError, parse_expression, render, render_polynomial
from .seqgen import k_central_binomials, sharpness_certificate, trinomial_coefficients
from .series import HorizonError, TruncatedSeries, pow_rational

EXIT_OK, EXIT_NO, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_report_text(report) -> str:
    lines = [f"input: {report.input_description}", f"lambda: {_fmt(report.lam)}"]
    if not report.per_prime:
        lines.append("exponent is an integer: no prime divides its denominator")
    for e in report.per_prime:
        pp = e.prime_power
        line = f"  p^r = {pp.p}^{pp.r}  {e.criterion.value:<12} {e.verdict.value:<13} horizon {e.horizon}"
        if e.witness is not None:
            line += f"  witness x^{e.witness.index} (valuation {e.witness.valuation})"
        lines.append(line)
    lines.append(f"overall: {report.overall.value}")
    return "\n".join(lines)


def cmd_check(args, out) -> int:
    query = parse_expression(args.expr, order=args.order, criterion=args.criterion, output_format="json" if args.json else "text")
    report = decide_rational_power(query.polynomial, query.exponent, query.criterion, query.order, description=args.expr.strip())
    if query.output_format == "json":
        print(json.dumps(report.to_json(), indent=2), file=out)
    else:
        print(format_report_text(report), file=out)
    return EXIT_OK if report.overall is Verdict.INTEGRAL else EXIT_NO


def cmd_expand(args, out) -> int:
    query = parse_expression(args.expr, order=max(args.order, 1))
    series = pow_rational(query.polynomial, query.exponent, args.order)
    for n, c in enumerate(series.coeffs):
        print(f"{n}\t{_fmt(c)}", file=out)
    return EXIT_OK


def cmd_seq(args, out) -> int:
    if args.count < 1:
        raise UsageError("--count must be >= 1")
    certified = None
    if args.family == "kcentral":
        if args.k is None or args.k == 0:
            raise UsageError("kcentral needs a nonzero --k")
        terms = k_central_binomials(args.k, args.count)
        if args.certify:
            m = abs(args.k) * rad(args.k)
            sharpness_certificate(args.k, 2 * m)
            certified = f"(1 - a x)^(-1/{args.k}) integral exactly for k*rad(k) = {m} | a, checked for a <= {2 * m}"
    elif args.family == "trinomial":
        terms = trinomial_coefficients(args.a, args.b, args.c, args.count)
        if args.certify:
            d = args.b**2 - 4 * args.a * args.c
            f = TruncatedSeries.polynomial([1, -2 * args.b, d])
            verdict = decide_rational_power(f, Fraction(-1, 2)).overall
            certified = f"({render_polynomial(enumerate([1, -2 * args.b, d]))})^(-1/2): {verdict.value}"
    else:
        if not args.expr:
            raise UsageError("custom needs --expr")
        query = parse_expression(args.expr)
        series = pow_rational(query.polynomial, query.exponent, args.count - 1)
        terms = [_fmt(c) for c in series.coeffs]
        if args.certify:
            verdict = decide_rational_power(query.polynomial, query.exponent).overall
            certified = f"{render(query)}: {verdict.value}"
    for n, t in enumerate(terms):
        print(f"{n}\t{t}", file=out)
    if certified:
        print(f"# certified: {certified}", file=out)
    return EXIT_OK


def cmd_crosscheck(args, out) -> int:
    if args.exhaustive:
        pps = crosscheck.parse_prime_powers(args.prime_powers) if args.prime_powers else (PrimePower(2, 1),)
        bound = 8 if args.coeff_bound is None else args.coeff_bound
        summary = crosscheck.run_exhaustive(bound, pps, args.order)
        label = f"exhaustive 1 + ax + bx^2, |a|,|b| <= {bound}"
    else:
        if args.trials is None or args.trials < 1:
            raise UsageError("--trials must be >= 1")
        if args.seed is None:
            raise UsageError("--seed is required")
        pps = crosscheck.parse_prime_powers(args.prime_powers) if args.prime_powers else crosscheck.DEFAULT_PRIME_POWERS
        bound = 50 if args.coeff_bound is None else args.coeff_bound
        summary = crosscheck.run_random(args.trials, args.seed, args.max_degree, bound, pps, args.order, args.jobs)
        label = f"{args.trials} random trials, seed {args.seed}, degree <= {args.max_degree}, |a_i| <= {bound}"
    print(label, file=out)
    print("prime powers: " + ", ".join(str(pp) for pp in pps), file=out)
    for (a, b), n in summary.pair_agreement.items():
        print(f"  {a:>12} vs {b:<12} {n}/{summary.cases}", file=out)
    print(f"integral cases: {summary.integral}", file=out)
    print(f"agreement {summary.agreed}/{summary.cases}", file=out)
    for d in summary.disagreements:
        print("DISAGREEMENT " + json.dumps(d.__dict__), file=out)
    return EXIT_OK if summary.ok else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="seriesroots", description="Integrality of rational powers of power series.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether f(x)^lambda has integer coefficients")
    p.add_argument("expr")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER, help="expansion order for oracle-backed criteria")
    p.add_argument("--criterion", choices=CRITERIA, default="theorem_main")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("expand", help="print exact coefficients 0..N of f(x)^lambda")
    p.add_argument("expr")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("seq", help="emit a coefficient family")
    p.add_argument("family", choices=("kcentral", "trinomial", "custom"))
    p.add_argument("--k", type=int)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--expr")
    p.add_argument("--count", type=int, default=10)
    p.add_argument("--certify", action="store_true")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("crosscheck", help="compare all criteria against the brute-force oracle")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--coeff-bound", type=int)
    p.add_argument("--prime-powers", help="comma separated, e.g. 2^1,2^2,3^1")
    p.add_argument("--exhaustive", action="store_true", help="all 1 + ax + bx^2 instead of random draws")
    p.add_argument("--order", type=int, default=60, help="oracle expansion order")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except ParseError as exc:
        print(f"syntax error: {exc}", file=sys.stderr)
    except SemanticError as exc:
        print(f"invalid query: {exc}", file=sys.stderr)
    except (UsageError, PreconditionError, HorizonError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
