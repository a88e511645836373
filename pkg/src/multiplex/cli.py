"""
Command line front end.

Exit status: 0 success, 1 fixture mismatch or failed bracket check,
2 usage error, 3 domain error.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from pathlib import Path

from . import catalog, formats
from .exceptions import CapacityError, DomainError, FixtureError
from .matrixreal import check_sl2_triples, parabolic_dimensions
from .multiplet import covering_arrows, generate_multiplet
from .weyl import ParabolicSpec, multiplet_size

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

RENDERERS = {"table": formats.to_table, "json": formats.to_json, "dot": formats.to_dot}


def _labels(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"labels must be comma-separated integers: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multiplex",
        description="Multiplets of elementary representations of sl(N,R) "
                    "induced from a maximal parabolic subalgebra.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="generate a multiplet")
    p.add_argument("--matrix-size", type=int, required=True, metavar="N")
    p.add_argument("--remove", type=int, required=True, metavar="K",
                   help="index of the simple root removed to form the parabolic")
    p.add_argument("--labels", type=_labels, required=True,
                   help="comma-separated non-negative inducing labels")
    p.add_argument("--format", choices=sorted(RENDERERS), default="table")
    p.add_argument("--arrows", choices=["all", "covering"], default="all")
    p.add_argument("--out", type=Path, help="write to FILE instead of standard output")

    p = sub.add_parser("verify", help="check generated multiplets against a fixture table")
    p.add_argument("--fixture", required=True, metavar="NAME")
    p.add_argument("--labels", type=_labels)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("size", help="number of members of a generic multiplet")
    p.add_argument("--matrix-size", type=int, required=True, metavar="N")
    p.add_argument("--remove", type=int, required=True, metavar="K")

    p = sub.add_parser("dims", help="dimensions of m, a, n")
    p.add_argument("--matrix-size", type=int, required=True, metavar="N")
    p.add_argument("--remove", type=int, required=True, metavar="K")
    p.add_argument("--check-brackets", action="store_true",
                   help="also verify the sl(2) triple relations")

    sub.add_parser("fixtures", help="list available fixture tables")
    return parser


def _spec(parser, args) -> ParabolicSpec:
    try:
        return ParabolicSpec(args.matrix_size, args.remove)
    except DomainError as exc:
        parser.error(str(exc))


def cmd_compute(args) -> int:
    spec = ParabolicSpec(args.matrix_size, args.remove)
    mult = generate_multiplet(spec, args.labels)
    if args.arrows == "covering":
        mult = replace(mult, arrows=covering_arrows(mult.arrows))
    body = RENDERERS[args.format](mult)
    if args.out:
        args.out.write_text(body, encoding="utf-8")
    else:
        sys.stdout.write(body)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = catalog.verify(args.fixture, labels=args.labels, seed=args.seed)
    print(catalog.format_report(report))
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_size(args) -> int:
    print(multiplet_size(ParabolicSpec(args.matrix_size, args.remove)))
    return EXIT_OK


def cmd_dims(args) -> int:
    spec = ParabolicSpec(args.matrix_size, args.remove)
    dims = parabolic_dimensions(spec)
    print(f"m: {dims.m_dim}  a: {dims.a_dim}  n: {dims.n_dim}")
    if not args.check_brackets:
        return EXIT_OK
    report = check_sl2_triples(spec.matrix_size)
    for j, passed in report.items():
        print(f"sl(2)_{j}: {'pass' if passed else 'FAIL'}")
    return EXIT_OK if all(report.values()) else EXIT_MISMATCH


def cmd_fixtures(args) -> int:
    for name in catalog.list_fixtures():
        print(name)
    return EXIT_OK


COMMANDS = {
    "compute": cmd_compute, "verify": cmd_verify, "size": cmd_size,
    "dims": cmd_dims, "fixtures": cmd_fixtures,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "matrix_size"):
        _spec(parser, args)
    try:
        return COMMANDS[args.command](args)
    except FixtureError as exc:
        print(f"multiplex: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    except (DomainError, CapacityError) as exc:
        print(f"multiplex: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
