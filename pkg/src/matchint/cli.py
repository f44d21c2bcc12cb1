"""Command-line entry point: ``matchint {poly,check,family,search,verify-paper}``.

Exit status: 0 on success, 1 when a verification fails, 2 for usage or
input-format errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Iterator

from .families import FamilyKind, FamilySpec, build_family, verify_family
from .graph import Graph, Graph6Error, parse_graph6, to_graph6
from .matching import is_matching_integral, matching_polynomial, matching_polynomial_recurrence
from .search import MAX_GENERATED_N, SearchConfig, filter_stream, format_hit, generated_lines
from .verify import run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _open_input(path: str | None):
    if path is None or path == "-":
        return sys.stdin
    return open(path, encoding="ascii", errors="replace")


def _graphs(path: str | None, errors: list[int]) -> Iterator[Graph]:
    with _open_input(path) as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                yield parse_graph6(line.strip())
            except Graph6Error as exc:
                errors.append(lineno)
                print(f"ERR line={lineno}: {exc}", file=sys.stderr)


def cmd_poly(args) -> int:
    compute = matching_polynomial if args.alg == "enum" else matching_polynomial_recurrence
    errors: list[int] = []
    for g in _graphs(args.file, errors):
        mu = compute(g)
        print(mu.to_json() if args.json else mu.to_text())
    return EXIT_USAGE if errors else EXIT_OK


def cmd_check(args) -> int:
    errors: list[int] = []
    for g in _graphs(args.file, errors):
        integral, report = is_matching_integral(g)
        if args.json:
            print(json.dumps({"graph6": to_graph6(g), **report.to_dict()}))
        elif integral:
            print(f"INTEGRAL zeros={report.zeros_text()}")
        else:
            print(f"NOT_INTEGRAL remainder_degree={report.remainder.degree}")
    return EXIT_USAGE if errors else EXIT_OK


def cmd_family(args) -> int:
    try:
        spec = FamilySpec(FamilyKind(args.type), args.k)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.emit_g6:
        g = build_family(spec)
        if g.n > 62:
            print(f"error: n={g.n} exceeds the graph6 short form", file=sys.stderr)
            return EXIT_USAGE
        print(to_graph6(g))
        if not args.expect:
            return EXIT_OK
    report = verify_family(spec)
    if not args.emit_g6:
        print(report.to_json())
    if args.expect and not report.ok:
        print(f"{spec.label}: closed form or structural claim not reproduced", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_search(args) -> int:
    if args.gen is not None and args.file is not None:
        print("error: give either --gen N or an input file, not both", file=sys.stderr)
        return EXIT_USAGE
    if args.gen is not None and not 1 <= args.gen <= MAX_GENERATED_N:
        print(
            f"error: --gen supports 1..{MAX_GENERATED_N}; pipe a graph6 stream "
            "(e.g. from `geng -c N`) for larger orders",
            file=sys.stderr,
        )
        return EXIT_USAGE
    try:
        cfg = SearchConfig(
            min_connectivity=args.min_connectivity,
            max_n=args.gen if args.gen is not None else max(args.min_connectivity, MAX_GENERATED_N),
            parallelism=args.jobs,
            ordered_output=args.ordered,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    errors: list[int] = []

    def diag(lineno: int, message: str) -> None:
        errors.append(lineno)
        print(f"ERR line={lineno}: {message}", file=sys.stderr)

    if args.gen is not None:
        lines = generated_lines(args.gen)
        fh = None
    else:
        fh = _open_input(args.file)
        lines = fh
    try:
        for hit in filter_stream(cfg, lines, diag):
            print(format_hit(hit, args.json), flush=True)
    finally:
        if fh is not None and fh is not sys.stdin:
            fh.close()
    return EXIT_USAGE if errors else EXIT_OK


def cmd_verify_paper(args) -> int:
    if args.kmax < 1:
        print("error: --kmax must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    checks = run_all(kmax=args.kmax)
    for check in checks:
        print(check.line())
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="matchint", description="Matching polynomials and matching-integral graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("poly", help="print mu(G, x) for each graph6 line")
    p.add_argument("file", nargs="?", help="graph6 file (default: stdin)")
    p.add_argument("--alg", choices=("enum", "rec"), default="rec")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("check", help="decide matching integrality for each graph6 line")
    p.add_argument("file", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("family", help="build and verify H_k, H'_k or F7")
    p.add_argument("--type", required=True, choices=[k.value for k in FamilyKind])
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--expect", action="store_true", help="exit 1 unless the closed form is reproduced")
    p.add_argument("--emit-g6", action="store_true", help="print the graph6 line instead of the report")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("search", help="find matching-integral graphs of given connectivity")
    p.add_argument("file", nargs="?")
    p.add_argument("--min-connectivity", type=int, required=True)
    p.add_argument("--gen", type=int, metavar="N", help="search all graphs with 1..N vertices")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--ordered", action="store_true", help="emit hits in input order")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify-paper", help="reproduce the H_k / H'_k / F7 results")
    p.add_argument("--kmax", type=int, default=10)
    p.set_defaults(func=cmd_verify_paper)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
