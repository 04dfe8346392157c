"""Command-line entry point: ``spindec <command> ...``."""

import argparse
import dataclasses
import sys
from pathlib import Path

from . import decomp as D
from . import grothendieck as G
from . import partitions as P
from . import tables as T
from . import verify as V

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _partition_arg(text):
    try:
        return P.parse_partition(text)
    except P.PartitionSyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _column_arg(text):
    kind, sep, b = text.partition(":")
    if not sep or kind not in ("straight", "double") or not b.isdigit():
        raise argparse.ArgumentTypeError(f"column must look like straight:B or double:B, got {text!r}")
    return kind, int(b)


def _ops_arg(text):
    return [op.strip() for op in text.split(",") if op.strip()]


def cmd_entry(args):
    kind, b = args.col
    col = D.Column(kind, b, args.n)
    try:
        print(D.entry(args.n, args.a, col))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return EXIT_OK


def cmd_table(args):
    try:
        table = T.build_table(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = T.render(table, args.format)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_compare(args):
    try:
        if args.reference:
            ref = T.parse_reference(Path(args.reference).read_text(encoding="utf-8"))
        else:
            ref = T.bundled_reference(args.n)
    except (OSError, FileNotFoundError) as exc:
        raise UsageError(str(exc)) from None
    except T.ReferenceFormatError as exc:
        print(f"malformed reference: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if ref.n != args.n:
        raise UsageError(f"reference is for n={ref.n}, not n={args.n}")
    mismatches = T.compare(T.build_table(args.n), ref)
    for m in mismatches:
        print(f"MISMATCH {m}")
    print(f"{len(mismatches)} mismatches")
    return EXIT_OK if not mismatches else EXIT_FAIL


def cmd_expand(args):
    make = G.FormalSum.sym if args.basis == "sym" else G.FormalSum.spin
    try:
        v = make(args.partition)
        v = G.apply_ops(v, args.ops, args.convention)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(v)
    return EXIT_OK


def cmd_verify(args):
    names = list(V.SUITES) if args.suite == "all" else [args.suite]
    cfg = V.VerifyConfig()
    if args.max_n is not None:
        if args.suite == "all":
            raise UsageError("--max-n needs a single suite")
        cfg = dataclasses.replace(cfg, **{V.MAX_N_FIELD[args.suite]: args.max_n})
    ok = True
    for name in names:
        rep = V.SUITES[name](cfg)
        print(rep, flush=True)
        ok &= rep.ok
    return EXIT_OK if ok else EXIT_FAIL


def cmd_util(args):
    op = args.op
    if op == "bounds":
        if args.n is None:
            raise UsageError("bounds needs --n")
        print(*P.bounds(args.n))
        return EXIT_OK
    if args.partition is None:
        raise UsageError(f"{op} needs --partition")
    lam = args.partition
    try:
        if op == "dbl":
            out = P.format_partition(P.dbl(lam))
        elif op == "bardbl":
            out = P.format_partition(P.bar_dbl(lam))
        elif op == "regularize":
            out = P.format_partition(P.regularize(lam))
        elif op == "content":
            out = "{} {}".format(*P.content(lam))
        else:
            out = "{} {}".format(*P.bar_content(lam, args.convention))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(out)
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="spindec", description="Two-part spin decomposition numbers in characteristic 2.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entry", help="one decomposition number")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--col", type=_column_arg, required=True, help="straight:B or double:B")
    p.set_defaults(func=cmd_entry)

    p = sub.add_parser("table", help="the partial decomposition matrix for n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=T.FORMATS, default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("compare", help="compare with a reference table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--reference", help="CSV file; defaults to the bundled table for n")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("expand", help="apply e_i/f_i to a basis class")
    p.add_argument("--basis", choices=("sym", "spin"), required=True)
    p.add_argument("--partition", type=_partition_arg, required=True)
    p.add_argument("--ops", type=_ops_arg, default=[], help='e.g. "f1,f1,e0", applied left to right')
    p.add_argument("--convention", choices=P.BAR_CONVENTIONS, default=P.DEFAULT_BAR_CONVENTION)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=["all"] + list(V.SUITES), default="all")
    p.add_argument("--max-n", type=int, help="override the suite's main bound")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("util", help="partition utilities")
    p.add_argument("op", choices=("dbl", "bardbl", "regularize", "content", "barcontent", "bounds"))
    p.add_argument("--partition", type=_partition_arg)
    p.add_argument("--n", type=int)
    p.add_argument("--convention", choices=P.BAR_CONVENTIONS, default=P.DEFAULT_BAR_CONVENTION)
    p.set_defaults(func=cmd_util)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        ap.print_usage(sys.stderr)
        print(f"spindec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
