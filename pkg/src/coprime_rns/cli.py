"""Command-line front end.

    coprime-rns generate 2 64
    coprime-rns verify --file coprimes_result_2_64.txt
    coprime-rns convert --moduli 2,3,5 forward 23
    coprime-rns estimate 2 128
    coprime-rns oracle 2 32
"""
import argparse
import logging
import math
import sys
from itertools import combinations

from . import kernels
from .complexity import REFERENCE_TABLE, estimate, table_report
from .dynamic_range import exact_range
from .errors import CoprimeRnsError, RangeError
from .generator import check_range, generate
from .oracle import ORACLE_MAX_Y, optimal_set
from .report import ResultReport, parse_report
from .rns import RnsVector, from_rns, make_context, to_rns

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_IO = 4


class UsageError(Exception):
    pass


def _int_list(tokens):
    out = []
    for tok in tokens:
        for part in tok.replace(",", " ").split():
            try:
                out.append(int(part))
            except ValueError:
                raise UsageError(f"not an integer: {part!r}") from None
    return out


def _range_args(args):
    X = args.min if args.min is not None else args.X
    Y = args.max if args.max is not None else args.Y
    if X is None or Y is None:
        raise UsageError("a range is required: X Y or --min X --max Y")
    try:
        return check_range(X, Y)
    except RangeError as exc:
        raise UsageError(str(exc)) from None


def _read_moduli(args):
    if getattr(args, "file", None):
        with open(args.file, encoding="ascii") as fh:
            text = fh.read()
        try:
            return parse_report(text)
        except (ValueError, KeyError) as exc:
            raise UsageError(f"cannot parse {args.file}: {exc}") from None
    if not args.moduli:
        raise UsageError("give moduli on the command line or via --file")
    tokens = [args.moduli] if isinstance(args.moduli, str) else args.moduli
    return _int_list(tokens), {}


def cmd_generate(args, out):
    X, Y = _range_args(args)
    mset = generate(X, Y)
    report = ResultReport.from_moduli_set(mset)
    path = args.out or report.default_filename(args.format)
    text = report.render(args.format)
    if path == "-":
        out.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
        if not args.quiet:
            out.write(report.to_text())
            out.write(f"Written to {path}\n")
    return EXIT_OK


def cmd_verify(args, out):
    moduli, declared = _read_moduli(args)
    small = [m for m in moduli if m < 2]
    if small:
        raise UsageError(f"moduli must be >= 2, got {small}")
    bad = [(a, b, math.gcd(a, b)) for a, b in combinations(moduli, 2) if math.gcd(a, b) != 1]
    for a, b, g in bad:
        out.write(f"FAIL: pair ({a}, {b}) shares factor {g}\n")
    if bad:
        return EXIT_FAIL

    bits = exact_range(moduli).bits
    status = EXIT_OK
    if declared.get("count", len(moduli)) != len(moduli):
        out.write(f"FAIL: report declares k={declared['count']} but lists {len(moduli)} moduli\n")
        status = EXIT_FAIL
    if declared.get("bits", bits) != bits:
        out.write(f"FAIL: report declares {declared['bits']} bits, recomputed {bits}\n")
        status = EXIT_FAIL
    if "range" in declared:
        lo, hi = declared["range"]
        outside = [m for m in moduli if not lo <= m <= hi]
        if outside:
            out.write(f"FAIL: moduli outside [{lo}, {hi}]: {outside}\n")
            status = EXIT_FAIL
    if status == EXIT_OK:
        out.write(f"PASS: k={len(moduli)} pairwise co-prime\n")
        out.write(f"The dynamic range is {bits} bits\n")
    return status


def cmd_convert(args, out):
    moduli, _ = _read_moduli(args)
    ctx = make_context(moduli)
    values = _int_list(args.values)
    if args.direction == "forward":
        if len(values) != 1:
            raise UsageError("forward conversion takes exactly one value")
        out.write(" ".join(map(str, to_rns(ctx, values[0]))) + "\n")
    else:
        out.write(f"{from_rns(ctx, RnsVector(values, ctx))}\n")
    return EXIT_OK


def cmd_estimate(args, out):
    if args.table:
        for row, est, flag in table_report():
            out.write(
                f"[{row.lo}, {row.hi}]  N={est.range_size}  k={row.k}  "
                f"T={est.operations}  table={row.operations}  {flag}\n"
            )
        return EXIT_OK
    X, Y = _range_args(args)
    k = args.k if args.k is not None else generate(X, Y).size
    est = estimate(X, Y, k)
    out.write(f"Range: from X={X} to Y={Y}\n")
    out.write(f"N={est.range_size} k={est.set_size} T={est.operations}\n")
    ref = next((r for r in REFERENCE_TABLE if (r.lo, r.hi) == (X, Y)), None)
    if ref is not None and not args.quiet:
        note = "consistent" if ref.consistent else "inconsistent with T = Y*(N^2 + k^3)"
        out.write(f"Reference: k={ref.k} T={ref.operations} ({note})\n")
    return EXIT_OK


def cmd_oracle(args, out):
    X, Y = _range_args(args)
    greedy = generate(X, Y)
    best = optimal_set(X, Y)
    g_bits = greedy.product.bit_length()
    o_bits = best.best_product.bit_length()
    gap = math.log2(best.best_product) - math.log2(greedy.product)
    out.write(f"Greedy: {g_bits} bits  {' '.join(map(str, greedy.moduli))}\n")
    out.write(f"Oracle: {o_bits} bits  {' '.join(map(str, best.best_set.moduli))}\n")
    out.write(f"log2 gap: {gap:.6g}\n")
    if not args.quiet:
        out.write(f"nodes explored: {best.nodes_explored}\n")
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="print only the essential result")

    ranged = argparse.ArgumentParser(add_help=False)
    ranged.add_argument("X", type=int, nargs="?")
    ranged.add_argument("Y", type=int, nargs="?")
    ranged.add_argument("--min", type=int)
    ranged.add_argument("--max", type=int)

    moduli = argparse.ArgumentParser(add_help=False)
    moduli.add_argument("--moduli", help="moduli, comma or space separated (quoted)")
    moduli.add_argument("--file", help="report or plain list of moduli")

    parser = argparse.ArgumentParser(prog="coprime-rns", description="Co-prime moduli sets for RNS arithmetic")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common, ranged], help="build the moduli set for [X, Y]")
    p.add_argument("--out", help="output path ('-' for stdout)")
    p.add_argument("--format", choices=["text", "structured"], default="text")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", parents=[common], help="check a moduli list for pairwise co-primality")
    p.add_argument("moduli", nargs="*")
    p.add_argument("--file", help="report or plain list of moduli")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("convert", parents=[common, moduli], help="binary <-> residue conversion")
    p.add_argument("direction", choices=["forward", "backward"])
    p.add_argument("values", nargs="+")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("estimate", parents=[common, ranged], help="operation-count estimate")
    p.add_argument("--k", type=int, help="set size (default: size of the generated set)")
    p.add_argument("--table", action="store_true", help="recompute the reference table")
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("oracle", parents=[common, ranged], help=f"greedy vs exhaustive optimum (Y <= {ORACLE_MAX_Y})")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.ERROR,
        format="%(levelname)s %(name)s: %(message)s",
    )
    logging.getLogger(__name__).debug("kernel backend: %s", kernels.BACKEND)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CoprimeRnsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
