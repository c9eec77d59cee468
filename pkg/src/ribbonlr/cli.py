"""Command-line driver: JSON on stdout, diagnostics on stderr.

Exit status is 0 on success, 1 when a property check finds a violation and
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import domino, suites
from .functions import ribbon_function, strip_series
from .polynomials import expansion_to_json, schur_expand
from .shapes import core_quotient, format_partition, format_skew, parse_partition, parse_skew, SkewShape


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise suites.UsageError(message)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ribbonlr", description="Ribbon tableaux, LLT functions and domino q-LR coefficients.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("core-quotient", help="n-core and n-quotient of a partition")
    p.add_argument("--partition", required=True)
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("llt", help="ribbon function of a skew shape")
    p.add_argument("--shape", required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--vars", type=_nonnegative, required=True)
    p.add_argument("--schur", action="store_true", help="also print the Schur expansion")

    p = sub.add_parser("strip-series", help="horizontal strip series of a lattice path")
    p.add_argument("--path", required=True)
    p.add_argument("--n", type=_positive, required=True)

    p = sub.add_parser("qlr", help="domino q-Littlewood-Richardson coefficients")
    p.add_argument("--mu", required=True)
    p.add_argument("--rho", default="")
    p.add_argument("--nu", default="")
    p.add_argument("--verify", action="store_true", help="compare with the Schur expansion")

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("suite", choices=suites.SUITES)
    p.add_argument("--max-cells", type=_nonnegative, required=True)
    p.add_argument("--n", type=_positive)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--max-skew", type=_nonnegative)
    p.add_argument("--max-nu", type=_nonnegative, default=2)
    return parser


def _dispatch(args) -> tuple[int, dict]:
    if args.command == "core-quotient":
        p = parse_partition(args.partition)
        cq = core_quotient(p, args.n)
        return 0, {"partition": format_partition(p), "n": args.n, "core": format_partition(cq.core),
                   "quotient": [format_partition(q) for q in cq.quotient], "offsets": list(cq.offsets)}
    if args.command == "llt":
        shape = parse_skew(args.shape)
        g = ribbon_function(shape, args.n, args.vars)
        out = {"shape": format_skew(shape), "n": args.n, "vars": args.vars, "polynomial": g.to_json()}
        if args.schur:
            out["schur"] = expansion_to_json(schur_expand(g))
        return 0, out
    if args.command == "strip-series":
        series = strip_series(args.path, args.n)
        return 0, {"path": args.path, "n": args.n, "series": series.to_json()}
    if args.command == "qlr":
        mu, rho, nu = (parse_partition(x) for x in (args.mu, args.rho, args.nu))
        if not mu.contains(rho):
            raise ValueError(f"rho {args.rho!r} is not contained in mu {args.mu!r}")
        table = domino.qlr_yamanouchi(SkewShape(mu, rho), nu)
        out = table.to_json()
        status = 0
        if args.verify:
            agrees = table == domino.qlr_bruteforce(SkewShape(mu, rho), nu)
            out["verified"] = agrees
            status = 0 if agrees else 1
        return status, out
    report = suites.run_suite(args.suite, args.max_cells, args.n, args.jobs,
                              max_skew=args.max_skew, max_nu=args.max_nu)
    return (0 if report.ok else 1), report.to_json()


def run(argv) -> tuple[int, str]:
    """Run one command; returns the exit status and the JSON document printed on stdout."""
    try:
        args = build_parser().parse_args(list(argv))
        status, doc = _dispatch(args)
    except (suites.UsageError, ValueError) as exc:
        print(f"ribbonlr: error: {exc}", file=sys.stderr)
        return 2, ""
    return status, json.dumps(doc, indent=2)


def main(argv=None) -> int:
    status, text = run(sys.argv[1:] if argv is None else argv)
    if text:
        print(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
