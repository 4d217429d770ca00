"""Command-line front end.

    cmsops jack --partition 2,1 [--bind k=3/2] [--format json]
    cmsops superjacobi --partition 1 --m 1 --n 1 [--euler odd]
    cmsops verify diagram-trigA --max-degree 4 --N 3 [--seed 0]

Exit codes: 0 success, 1 verification failure, 2 resonance,
3 usage/config/parse error, 4 pole in a specialization.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .coeffs import PARAMS, PoleError, parse_rational
from .eigen import ResonanceError, jack, specialize_euler, super_jacobi
from .finite_ops import DeformedContext
from .partitions import parse_partition
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_RESONANCE = 2
EXIT_CONFIG = 3
EXIT_POLE = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_bindings(pairs: list[str]) -> dict[str, Fraction]:
    out: dict[str, Fraction] = {}
    for item in pairs:
        if "=" not in item:
            raise UsageError(f"--bind expects NAME=RATIONAL, got {item!r}")
        name, _, value = item.partition("=")
        name = name.strip()
        if name not in PARAMS:
            raise UsageError(f"unknown parameter {name!r}; parameters are {', '.join(PARAMS)}")
        if name in out:
            raise UsageError(f"parameter {name!r} bound twice")
        try:
            out[name] = parse_rational(value)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    return out


def build_parser() -> _Parser:
    parser = _Parser(prog="cmsops", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--bind", action="append", default=[], metavar="NAME=RAT",
                       help="bind a parameter to an exact rational (repeatable)")
        p.add_argument("--format", choices=("json", "text"), default="json",
                       help="output format (default json)")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for random rational sampling (default 0)")

    pj = sub.add_parser("jack", help="compute a Jack symmetric function")
    pj.add_argument("--partition", required=True,
                    help="comma-separated parts, '-' for the empty partition")
    common(pj)

    ps = sub.add_parser("superjacobi", help="compute a super Jacobi polynomial")
    ps.add_argument("--partition", required=True)
    ps.add_argument("--m", type=int, required=True, help="number of u variables")
    ps.add_argument("--n", type=int, required=True, help="number of v variables")
    ps.add_argument("--euler", choices=("odd", "even"),
                    help="specialize along (k,p,q) = (-1,-1,0) (odd) or (-1,0,0) (even)")
    common(ps)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("suite", choices=SUITES)
    pv.add_argument("--max-degree", type=int, default=4,
                    help="degree bound for basis elements (default 4)")
    pv.add_argument("--N", type=int, default=3, dest="n_max",
                    help="largest number of variables for diagram suites (default 3)")
    pv.add_argument("--m", type=int, default=1, help="deformed context: u count (default 1)")
    pv.add_argument("--n", type=int, default=1, help="deformed context: v count (default 1)")
    pv.add_argument("--samples", type=int, default=3,
                    help="number of random rational parameter samples (default 3)")
    common(pv)
    return parser


def cmd_jack(args) -> int:
    lam = parse_partition(args.partition)
    bindings = _parse_bindings(args.bind)
    result = jack(lam, k=bindings.get("k"), p0=bindings.get("p0"))
    if args.format == "json":
        print(result.to_json())
    else:
        print(f"jack {args.partition}")
        print(f"eigenvalue: {result.eigenvalue}")
        for mu, c in result.expansion.sorted_items():
            print(f"  m[{','.join(map(str, mu)) or '-'}]  {c}")
    return EXIT_OK


def cmd_superjacobi(args) -> int:
    lam = parse_partition(args.partition)
    bindings = _parse_bindings(args.bind)
    if args.euler:
        if bindings:
            raise UsageError("--euler fixes (k, p, q); --bind is not allowed with it")
        value = specialize_euler(lam, args.m, args.n, args.euler)
        payload = {
            "label": args.partition,
            "m": args.m,
            "n": args.n,
            "variant": args.euler,
            "value": str(value),
        }
    else:
        ctx = DeformedContext(
            args.m, args.n,
            k=bindings.get("k"), p=bindings.get("p"), q=bindings.get("q"),
        )
        sj = super_jacobi(lam, ctx)
        payload = sj.to_json_dict()
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for key, val in payload.items():
            print(f"{key}: {val}")
    return EXIT_OK


def cmd_verify(args) -> int:
    bindings = _parse_bindings(args.bind)
    report = run_suite(
        args.suite,
        max_degree=args.max_degree,
        n_max=args.n_max,
        m=args.m,
        n=args.n,
        samples=args.samples,
        seed=args.seed,
        bindings=bindings,
    )
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(report.to_text())
    return EXIT_OK if report.all_pass else EXIT_VERIFY_FAILED


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "jack":
            return cmd_jack(args)
        if args.command == "superjacobi":
            return cmd_superjacobi(args)
        return cmd_verify(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except ResonanceError as exc:
        print(f"resonance: {exc}", file=sys.stderr)
        return EXIT_RESONANCE
    except PoleError as exc:
        print(f"pole: {exc}", file=sys.stderr)
        return EXIT_POLE


if __name__ == "__main__":
    sys.exit(main())
