"""Command line interface: ``rational-trees {nth,rank,seq,verify,diverge}``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from itertools import islice

from . import analysis, verify
from .exact import as_rational, padic_valuation, render
from .rank import rank
from .sequences import GeneratorMethod, iterate
from .trees import TreeKind, node_at_index

CSV_HEADER = ["n", "a", "b", "c", "value"]
FORMATS = ("text", "csv", "jsonl")


def _kind(text: str) -> TreeKind:
    try:
        return TreeKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _method(text: str) -> GeneratorMethod:
    try:
        return GeneratorMethod.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _index(text: str) -> int:
    try:
        n = int(text.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a decimal integer: {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"index must be >= 0, got {n}")
    return n


def _positive(text: str) -> int:
    n = _index(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _fraction(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad fraction {text!r}: {exc}") from None


def _counter(kind: TreeKind, n: int) -> int:
    if n == 0 or kind is TreeKind.BINARY:
        return 0
    return padic_valuation(n, kind.prime)


class RowWriter:
    """Emits (n, value, c) records in one of the output formats."""

    def __init__(self, fmt: str, out=None):
        self.fmt = fmt
        self.out = out or sys.stdout
        self._csv = None
        if fmt == "csv":
            self._csv = csv.writer(self.out, lineterminator="\n")
            self._csv.writerow(CSV_HEADER)

    def write(self, n: int, q: Fraction, c: int, text: str | None = None) -> None:
        if self.fmt == "text":
            self.out.write((text if text is not None else render(q)) + "\n")
        elif self.fmt == "csv":
            self._csv.writerow([n, q.numerator, q.denominator, c, render(q, machine=True)])
        else:
            record = {"n": str(n), "num": str(q.numerator), "den": str(q.denominator), "c": str(c)}
            self.out.write(json.dumps(record) + "\n")


def cmd_nth(args) -> int:
    n = args.n
    if n == 0:
        q, c = Fraction(0), 0
    else:
        node = node_at_index(args.kind, n)
        q, c = node.value, node.c
    RowWriter(args.format).write(n, q, c)
    return 0


def cmd_rank(args) -> int:
    n = rank(args.kind, args.fraction)
    RowWriter(args.format).write(n, args.fraction, _counter(args.kind, n), text=str(n))
    return 0


def cmd_seq(args) -> int:
    writer = RowWriter(args.format)
    for n, q in islice(iterate(args.kind, args.method, args.start), args.count + 1):
        writer.write(n, q, _counter(args.kind, n))
    return 0


def cmd_verify(args) -> int:
    results = verify.run_all(args.kind, args.count, args.height)
    ok = all(r.passed for r in results)
    if args.format == "jsonl":
        for r in results:
            print(json.dumps({"check": r.name, "passed": r.passed, "checked": r.checked,
                              "counterexample": r.counterexample}))
    else:
        print(f"verify {args.kind.label}: count={args.count} height={args.height}")
        for r in results:
            print(r.line())
        print("all checks passed" if ok else "verification FAILED")
    return 0 if ok else 1


def cmd_diverge(args) -> int:
    if args.k < 4:
        print(f"error: {_low_k_message(args.k)}", file=sys.stderr)
        return 2
    report = analysis.divergence_report(args.k, args.steps, args.witness)
    fields = report.as_dict()
    if args.format == "jsonl":
        print(json.dumps(fields))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(list(fields))
        writer.writerow([_plain(v) for v in fields.values()])
    else:
        for key, value in fields.items():
            print(f"{key}={_plain(value)}")
    return 0


def _plain(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _low_k_message(k: int) -> str:
    target = {1: "binary (Calkin-Wilf)", 2: "ternary", 3: "quinary"}.get(k)
    if target is None:
        return "k must be a positive integer"
    return (f"k={k} has no real fixed point: u_n = f(u_(n-1))/{k} is the {target} "
            f"enumeration of the nonnegative rationals (try `seq {target.split()[0]}`)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rational-trees",
        description="Tree enumerations of the nonnegative rationals (binary, ternary, quinary).",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    kind_help = "binary|ternary|quinary (aliases cw|t3|q5)"

    p = sub.add_parser("nth", help="term u_n of an enumeration")
    p.add_argument("kind", type=_kind, help=kind_help)
    p.add_argument("n", type=_index)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_nth)

    p = sub.add_parser("rank", help="index of a rational in an enumeration")
    p.add_argument("kind", type=_kind, help=kind_help)
    p.add_argument("fraction", type=_fraction, help="a/b or an integer, >= 0")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_rank)

    p = sub.add_parser("seq", help="terms u_0 .. u_count")
    p.add_argument("kind", type=_kind, help=kind_help)
    p.add_argument("--count", type=_positive, default=20)
    p.add_argument("--method", type=_method, default=GeneratorMethod.VALUATION,
                   help="tree|valuation|newman")
    p.add_argument("--start", type=_index, default=0, help="first index to emit")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("verify", help="run the conformance checks")
    p.add_argument("kind", type=_kind, help=kind_help)
    p.add_argument("--count", type=_positive, default=1000)
    p.add_argument("--height", type=_positive, default=60)
    p.add_argument("--format", choices=("text", "jsonl"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("diverge", help="orbit of u_n = f(u_(n-1))/k for k >= 4")
    p.add_argument("k", type=int)
    p.add_argument("--steps", type=_positive, default=10_000)
    p.add_argument("--witness", type=_fraction, default=Fraction(1),
                   help="a rational above gamma_k shown to be unreachable")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_diverge)
    return parser


def main(argv=None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
