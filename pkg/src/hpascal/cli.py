"""Command-line front end: generation, verification, export.

Exit codes: 0 success, 1 failed check or located-pair failure, 2 usage
error (argparse), 3 cell budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager
from fractions import Fraction

from . import export, linrec, locator, pattern, sequences, verify
from .triangle import (
    BudgetExceeded,
    DEFAULT_CELL_BUDGET,
    generate_rows,
    nth_row,
    row_counts,
    row_sums,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_BUDGET = 3


@contextmanager
def _open_out(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fp:
            yield fp


def _print_json(obj, fp) -> None:
    fp.write(json.dumps(obj, separators=(",", ":")) + "\n")


def cmd_rows(args) -> int:
    with _open_out(args.output) as fp:
        if args.format == "csv":
            export.write_csv(generate_rows(args.q, args.n_max, args.budget), fp)
        elif args.format == "json":
            export.write_json(generate_rows(args.q, args.n_max, args.budget), fp)
        else:
            export.write_dot(args.q, args.n_max, fp, args.budget)
    return EXIT_OK


def _triple_by_method(kind: str, q: int, n: int, method: str, budget: int):
    table = {
        ("counts", "coupled"): sequences.counts_coupled,
        ("counts", "ternary"): sequences.counts_ternary,
        ("counts", "closed"): sequences.counts_closed,
        ("sums", "coupled"): sequences.sums_coupled,
        ("sums", "ternary"): sequences.sums_ternary,
        ("sums", "closed"): sequences.sums_closed,
    }
    if method == "generate":
        row = nth_row(q, n, budget)
        return (row_counts if kind == "counts" else row_sums)(row)
    return tuple(table[(kind, method)](q, n))


def _run_triple_command(kind: str, args) -> int:
    keys = ("a", "b", "s") if kind == "counts" else ("sumA", "sumB", "sum")
    with _open_out(args.output) as fp:
        if args.cross_check:
            methods = ["coupled", "ternary", "generate"]
            if not (kind == "counts" and args.q == 4):
                methods.insert(2, "closed")
            results = {
                m: _triple_by_method(kind, args.q, args.n, m, args.budget)
                for m in methods
            }
            distinct = set(results.values())
            for m, triple in results.items():
                fp.write(
                    f"{m}: " + " ".join(f"{k}={v}" for k, v in zip(keys, triple)) + "\n"
                )
            if len(distinct) != 1:
                fp.write("cross-check: MISMATCH\n")
                return EXIT_FAIL
            fp.write("cross-check: OK\n")
            return EXIT_OK
        triple = _triple_by_method(kind, args.q, args.n, args.method, args.budget)
        if args.json:
            obj = {"q": args.q, "n": args.n}
            obj.update({k: str(v) for k, v in zip(keys, triple)})
            _print_json(obj, fp)
        else:
            fp.write(" ".join(f"{k}={v}" for k, v in zip(keys, triple)) + "\n")
    return EXIT_OK


def cmd_counts(args) -> int:
    return _run_triple_command("counts", args)


def cmd_sums(args) -> int:
    return _run_triple_command("sums", args)


def cmd_altsum(args) -> int:
    with _open_out(args.output) as fp:
        if args.weights is not None:
            v, w = args.weights
            value = sequences.weighted_sum(args.n, v, w)
        else:
            value = sequences.alt_sum(args.n)
        if args.cross_check:
            row = nth_row(5, args.n, args.budget)
            if args.weights is not None:
                direct = sum(
                    (v if i % 2 == 0 else w) * x for i, x in enumerate(row.values)
                )
            else:
                direct = sequences.alt_triple_from_row(row).total
            fp.write(f"formula: {value}\nrow: {direct}\n")
            if direct != value:
                fp.write("cross-check: MISMATCH\n")
                return EXIT_FAIL
            fp.write("cross-check: OK\n")
            return EXIT_OK
        if args.json:
            _print_json({"n": args.n, "value": str(value)}, fp)
        else:
            fp.write(f"{value}\n")
    return EXIT_OK


def cmd_pattern(args) -> int:
    with _open_out(args.output) as fp:
        if args.check == "phi":
            value = pattern.pattern_int(args.n, args.budget)
            fp.write(f"{value}\n{value:b}\n")
            return EXIT_OK
        checker = {
            "prefix": pattern.check_prefix,
            "central-copy": pattern.check_central_copy,
            "central-value": pattern.check_central_value,
            "recurrence": pattern.check_pattern_recurrence,
        }[args.check]
        passed = checker(args.n, args.budget)
        _print_json({"n": args.n, "check": args.check, "pass": passed}, fp)
        return EXIT_OK if passed else EXIT_FAIL


def _location_as_json(loc: locator.PairLocation) -> dict:
    return {
        "u": str(loc.u),
        "v": str(loc.v),
        "row": loc.row,
        "col": loc.col if loc.col is not None else "symbolic",
        "verified": loc.verified,
        "orientation": loc.orientation,
        "trace": [{"descend": s.descend, "side": s.side} for s in loc.trace],
    }


def cmd_locate(args) -> int:
    with _open_out(args.output) as fp:
        try:
            loc = locator.locate_pair(args.u, args.v, args.budget)
        except locator.LocationFailure as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
        _print_json(_location_as_json(loc), fp)
    return EXIT_OK


def cmd_embed(args) -> int:
    with _open_out(args.output) as fp:
        try:
            locs = locator.embed_recurrence(
                args.f0, args.f1, args.eta, args.terms, args.budget
            )
        except locator.LocationFailure as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAIL
        for loc in locs:
            _print_json(_location_as_json(loc), fp)
    return EXIT_OK


def cmd_eliminate(args) -> int:
    system = linrec.CoupledSystem(args.a1, args.b1, args.c1, args.a2, args.b2, args.c2)
    with _open_out(args.output) as fp:
        coeffs = linrec.eliminate(system)
        fp.write(f"ternary: {coeffs.a} {coeffs.b} {coeffs.c}\n")
        if args.c1 == 0 and args.c2 == 0:
            a_bin, b_bin = linrec.eliminate_homogeneous(system)
            fp.write(f"binary: {a_bin} {b_bin}\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    names = args.suites or None
    results = verify.run(names)
    failed = False
    with _open_out(args.output) as fp:
        for res in results:
            status = "PASS" if res.passed else "FAIL"
            fp.write(f"{status} {res.name}: {res.detail}\n")
            failed = failed or not res.passed
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hpascal",
        description="Hyperbolic Pascal triangles for {4,q}: generate, verify, export.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, budget=True):
        p.add_argument("--output", "-o", default=None, help="output path (default stdout)")
        if budget:
            p.add_argument(
                "--budget",
                type=int,
                default=DEFAULT_CELL_BUDGET,
                help="largest row size that may be generated",
            )

    p = sub.add_parser("rows", help="stream triangle rows")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json", "dot"), default="csv")
    add_common(p)
    p.set_defaults(func=cmd_rows)

    for kind, func in (("counts", cmd_counts), ("sums", cmd_sums)):
        p = sub.add_parser(kind, help=f"per-row {kind} by any method")
        p.add_argument("--q", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument(
            "--method",
            choices=("coupled", "ternary", "closed", "generate"),
            default="coupled",
        )
        p.add_argument("--cross-check", action="store_true")
        p.add_argument("--json", action="store_true")
        add_common(p)
        p.set_defaults(func=func)

    p = sub.add_parser("altsum", help="alternating or weighted row sum (q=5)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weights", type=int, nargs=2, metavar=("V", "W"))
    p.add_argument("--cross-check", action="store_true")
    p.add_argument("--json", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_altsum)

    p = sub.add_parser("pattern", help="row pattern code and checks (q=5)")
    p.add_argument("--n", type=int, required=True, help="row index (k for central-value)")
    p.add_argument(
        "--check",
        choices=("phi", "recurrence", "prefix", "central-copy", "central-value"),
        default="phi",
    )
    add_common(p)
    p.set_defaults(func=cmd_pattern)

    p = sub.add_parser("locate", help="place (u,v) as row neighbours (q=5)")
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_locate)

    p = sub.add_parser("embed", help="locate a binary recurrence's pairs (q=5)")
    p.add_argument("--f0", type=int, required=True)
    p.add_argument("--f1", type=int, required=True)
    p.add_argument("--eta", type=int, required=True)
    p.add_argument("--terms", "-m", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("eliminate", help="coupled system to single recurrence")
    for coeff in ("a1", "b1", "c1", "a2", "b2", "c2"):
        p.add_argument(f"--{coeff}", type=Fraction, required=True)
    add_common(p, budget=False)
    p.set_defaults(func=cmd_eliminate)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument(
        "suites",
        nargs="*",
        help=f"suites to run (default: all): {', '.join(verify.SUITES)}",
    )
    add_common(p, budget=False)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
