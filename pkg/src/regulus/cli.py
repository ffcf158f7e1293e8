"""Command-line front end: coeff, oracle, identity, verify, suite.

Exit codes: 0 all-pass, 1 mathematical violation, 2 usage or config error,
3 vacuous result under --strict.  REGULUS_BUDGET_N overrides the default
series order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import families, oracle, suite
from .dissections import verify_dissection
from .expr import ExpressionError, NonExactDivisionError
from .report import FAIL, VACUOUS
from .series import regular_quotient

EXIT_PASS = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_VACUOUS = 3


def _default_order() -> int:
    raw = os.environ.get("REGULUS_BUDGET_N")
    if raw is None:
        return 2000
    try:
        value = int(raw)
    except ValueError:
        raise SystemExit(EXIT_USAGE)
    if value < 64:
        raise SystemExit(EXIT_USAGE)
    return value


def _parse_profile(args) -> tuple[int, ...]:
    if args.profile:
        try:
            ells = tuple(int(x) for x in args.profile.split(","))
        except ValueError:
            raise SystemExit(EXIT_USAGE)
        return ells
    if args.ell is None or args.r is None:
        print("need --profile or both --ell and --r", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)
    return (args.ell,) * args.r


def cmd_coeff(args) -> int:
    ells = _parse_profile(args)
    if args.n is None and args.n_max is None:
        print("need --n or --n-max", file=sys.stderr)
        return EXIT_USAGE
    n_hi = args.n if args.n is not None else args.n_max
    modulus = args.mod or 0
    if len(set(ells)) == 1:
        s = regular_quotient(ells[0], len(ells), n_hi, modulus)
        values = list(s.coeffs)
    else:
        table = oracle.multipartition_counts(oracle.RegularityProfile(ells), n_hi)
        values = [v % modulus if modulus else v for v in table.values]
    wanted = [args.n] if args.n is not None else list(range(n_hi + 1))
    check = None
    if args.check_oracle:
        check = oracle.multipartition_counts(oracle.RegularityProfile(ells), n_hi)
    for n in wanted:
        line = f"{n}\t{values[n]}"
        if check is not None:
            expected = check[n] % modulus if modulus else check[n]
            marker = "ok" if expected == values[n] else "MISMATCH"
            line += f"\t{expected}\t{marker}"
        print(line)
    return EXIT_PASS


def cmd_oracle(args) -> int:
    ells = _parse_profile(args)
    if args.n is None and args.n_max is None:
        print("need --n or --n-max", file=sys.stderr)
        return EXIT_USAGE
    n_hi = args.n if args.n is not None else args.n_max
    table = oracle.multipartition_counts(oracle.RegularityProfile(ells), n_hi)
    wanted = [args.n] if args.n is not None else list(range(n_hi + 1))
    for n in wanted:
        value = table[n] % args.mod if args.mod else table[n]
        print(f"{n}\t{value}")
    return EXIT_PASS


def cmd_identity(args) -> int:
    try:
        report = verify_dissection(args.name, args.order)
    except KeyError:
        print(f"unknown identity {args.name!r}", file=sys.stderr)
        return EXIT_USAGE
    if report.status == FAIL:
        first = report.violations[0]
        print(f"{report.id}: FAIL at index {first['index']}")
        return EXIT_VIOLATION
    print(f"{report.id}: pass ({report.indices_checked} coefficients, {report.ms:.0f} ms)")
    return EXIT_PASS


def _write_report(report: dict, args) -> None:
    fmt = args.format
    text = (
        suite.markdown_summary(report)
        if fmt == "markdown"
        else json.dumps(report, indent=2, sort_keys=True)
    )
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    else:
        print(text)


def cmd_verify(args) -> int:
    registry = None
    if args.registry:
        try:
            registry = families.load_registry(args.registry)
        except (OSError, ValueError, KeyError) as exc:
            print(f"bad registry: {exc}", file=sys.stderr)
            return EXIT_USAGE
    try:
        fam = families.get_family(args.family, registry)
    except families.UnknownFamilyError:
        print(f"unknown family {args.family!r}", file=sys.stderr)
        return EXIT_USAGE
    budget = families.GridBudget(order=args.order, n_max=args.n_max)
    try:
        report = families.verify_family(fam, budget)
    except (ExpressionError, NonExactDivisionError) as exc:
        print(f"index formula error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _write_report({"version": suite.REPORT_VERSION, "checks": [report.to_dict()]}, args)
    if report.status == FAIL:
        return EXIT_VIOLATION
    if report.status in (VACUOUS, "skipped") and args.strict:
        return EXIT_VACUOUS
    return EXIT_PASS


def cmd_suite(args) -> int:
    if args.only:
        prefixes = [p.strip() for p in args.only.split(",") if p.strip()]
        all_ids = suite.default_check_ids()
        # a filter may name a group prefix (e.g. "identities") or an id prefix
        groups = {"identities": "identity.", "families": "family.", "bridges": "bridge.",
                  "oracle": "oracle.", "newman": "newman.", "scaling": "scaling."}
        selected = []
        for cid in all_ids:
            for p in prefixes:
                key = groups.get(p, p)
                if cid == key or cid.startswith(key):
                    selected.append(cid)
                    break
        if not selected:
            print(f"no checks match {args.only!r}", file=sys.stderr)
            return EXIT_USAGE
    else:
        selected = None
    budget = families.GridBudget(order=args.order, n_max=args.n_max)
    report = suite.run_suite(selected, budget, jobs=args.jobs)
    _write_report(report, args)
    status = suite.suite_status(report)
    if status == FAIL:
        return EXIT_VIOLATION
    if status == VACUOUS and args.strict:
        return EXIT_VACUOUS
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="regulus")
    sub = parser.add_subparsers(dest="command", required=True)

    def series_args(p):
        p.add_argument("--ell", type=int)
        p.add_argument("--r", type=int)
        p.add_argument("--profile", type=str, help="comma-separated regularity bounds")
        p.add_argument("--n", type=int)
        p.add_argument("--n-max", dest="n_max", type=int)
        p.add_argument("--mod", type=int, default=0)

    p_coeff = sub.add_parser("coeff", help="series coefficients of the counting function")
    series_args(p_coeff)
    p_coeff.add_argument("--check-oracle", action="store_true")
    p_coeff.set_defaults(func=cmd_coeff)

    p_oracle = sub.add_parser("oracle", help="dynamic-programming counts")
    series_args(p_oracle)
    p_oracle.set_defaults(func=cmd_oracle)

    p_ident = sub.add_parser("identity", help="verify a dissection identity")
    p_ident.add_argument("--name", required=True)
    p_ident.add_argument("--order", type=int, default=_default_order())
    p_ident.set_defaults(func=cmd_identity)

    def report_args(p):
        p.add_argument("--order", type=int, default=_default_order())
        p.add_argument("--n-max", dest="n_max", type=int, default=2000)
        p.add_argument("--report", type=str)
        p.add_argument("--format", choices=("json", "markdown"), default="json")
        p.add_argument("--strict", action="store_true")

    p_verify = sub.add_parser("verify", help="verify one congruence family")
    p_verify.add_argument("--family", required=True)
    p_verify.add_argument("--registry", type=str)
    report_args(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    p_suite = sub.add_parser("suite", help="run the acceptance checks")
    p_suite.add_argument("--all", action="store_true")
    p_suite.add_argument("--only", type=str)
    p_suite.add_argument("--jobs", type=int, default=1)
    report_args(p_suite)
    p_suite.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors already
        return EXIT_USAGE if exc.code else EXIT_PASS
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
