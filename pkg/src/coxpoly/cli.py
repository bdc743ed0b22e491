"""Command-line entry point: ``coxpoly <command> ...``.

Exit codes: 0 success, 1 unreadable or unparsable input (or a failed
verification campaign), 2 input that violates the command's hypothesis
(cyclic quiver, non-bipartite quiver, unknown campaign, bound too large),
3 internal disagreement between independent computations.
"""

from __future__ import annotations

import argparse
import json
import sys

from .campaigns import CAMPAIGNS, run_campaign
from .errors import CoxpolyError, ParseError
from .formulas import verify_theorem1
from .graphs import adjacency, parse_graph
from .intmat import char_poly_det, char_poly_newton, coxeter_poly_of_matrix, parse_matrix
from .polyalg import format_polynomial, parse_polynomial, represent
from .quivers import coxeter_poly, format_quiver, parse_quiver, quiver_to_json, reflect


class InternalMismatch(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _emit(args, text: str, payload: dict):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def cmd_coxeter(args) -> int:
    if args.matrix:
        phi = coxeter_poly_of_matrix(parse_matrix(_read(args.matrix)))
    else:
        phi = coxeter_poly(parse_quiver(_read(args.input)))
    _emit(args, format_polynomial(phi), {"ambient_degree": phi.n, "coeffs": list(phi.coeffs)})
    return 0


def cmd_charpoly(args) -> int:
    if args.matrix:
        m = parse_matrix(_read(args.matrix))
    else:
        m = adjacency(parse_graph(_read(args.input)))
    p = char_poly_newton(m)
    if p != char_poly_det(m):
        raise InternalMismatch("Newton and determinant characteristic polynomials differ")
    _emit(args, format_polynomial(p), {"ambient_degree": p.n, "coeffs": list(p.coeffs)})
    return 0


def cmd_coefficients(args) -> int:
    report = verify_theorem1(parse_quiver(_read(args.input)))
    data = report.to_json()
    if args.format == "json":
        print(json.dumps(data, sort_keys=True))
    else:
        for key in sorted(data):
            print(f"{key}: {data[key]}")
    return 0 if report.routes_agree else 3


def cmd_reflect(args) -> int:
    q = reflect(parse_quiver(_read(args.input)), args.at)
    _emit(args, format_quiver(q).rstrip("\n"), quiver_to_json(q))
    return 0


def cmd_represent(args) -> int:
    q = represent(parse_polynomial(_read(args.input)))
    _emit(args, format_polynomial(q), {"ambient_degree": q.n, "coeffs": list(q.coeffs)})
    return 0


def cmd_verify(args) -> int:
    def on_failure(record):
        if args.format == "json":
            print(json.dumps({"failure": record}, sort_keys=True), flush=True)
        else:
            print(f"FAIL {record['instance']}: expected {record['expected']}, got {record['actual']}")

    summary = run_campaign(
        args.campaign,
        n_max=args.n_max,
        n=args.n,
        seed=args.seed,
        cases=args.cases,
        workers=args.workers,
        on_failure=on_failure,
    )
    if args.format == "json":
        print(json.dumps(summary.to_json(timing=not args.no_timing), sort_keys=True))
    else:
        status = "PASS" if summary.passed else "FAIL"
        line = f"{status} {summary.campaign}: {summary.instances_checked} instances, {len(summary.failures)} failures"
        if not args.no_timing:
            line += f" ({summary.elapsed:.2f}s)"
        print(line)
    return 0 if summary.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p, default="text"):
        p.add_argument("--format", choices=("json", "text"), default=default)

    p = sub.add_parser("coxeter", help="Coxeter polynomial of a quiver file (or of a matrix C)")
    p.add_argument("input", nargs="?", help="quiver file, '-' for stdin")
    p.add_argument("--matrix", help="matrix file; prints det(xC + C^T)")
    add_format(p)
    p.set_defaults(func=cmd_coxeter)

    p = sub.add_parser("charpoly", help="characteristic polynomial of a graph file (or a matrix)")
    p.add_argument("input", nargs="?", help="graph file, '-' for stdin")
    p.add_argument("--matrix", help="matrix file; prints det(xI - M)")
    add_format(p)
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("coefficients", help="closed-form vs determinant a1, a2 of a bipartite quiver")
    p.add_argument("input")
    add_format(p, default="json")
    p.set_defaults(func=cmd_coefficients)

    p = sub.add_parser("reflect", help="reflect a quiver at a sink or source")
    p.add_argument("input")
    p.add_argument("--at", type=int, required=True, metavar="V")
    add_format(p)
    p.set_defaults(func=cmd_reflect)

    p = sub.add_parser("represent", help="representing polynomial of a palindromic polynomial")
    p.add_argument("input", help="file holding 'n | c_0 ... c_n', '-' for stdin")
    add_format(p)
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("verify", help="run a verification campaign")
    p.add_argument("campaign", help=f"one of: {', '.join(CAMPAIGNS)}")
    p.add_argument("--n-max", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, help="random cases (default 500)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--no-timing", action="store_true", help="omit elapsed time for byte-stable output")
    add_format(p, default="json")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("coxeter", "charpoly") and bool(args.input) == bool(args.matrix):
        parser.error(f"{args.command}: give exactly one of INPUT or --matrix")
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CoxpolyError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except (InternalMismatch, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
