"""Command-line front end.

Exit codes: 0 success, 1 semantic negative (e.g. ``verify`` on a non-Salem
polynomial), 2 usage error, 3 bad bound, 4 strict-mode data error.
"""

from __future__ import annotations

import argparse
import functools
import os
import sys
from fractions import Fraction

from .arith import IntPoly, is_reciprocal, sturm_count
from .gf2 import f2_factor, reduce_mod2
from .salem import (
    NotSalem,
    SalemFileError,
    certify_salem,
    compare_lambda,
    enumerate_salem,
    parse_coefficients,
    read_salem_file,
    truncated_lambda,
    write_salem_file,
)
from .sieve import classify, f_basis_string, mod2_sieve, report
from .spectra import admissible_orders, forbidden_pM_reduction, order_divisibility, pM_parity_obstructed

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BAD_BOUND, EXIT_STRICT = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _rank(text):
    r = int(text)
    if not 1 <= r <= 24:
        raise argparse.ArgumentTypeError(f"rank must be in [1, 24], got {r}")
    return r


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _coefficients(tokens, minimum=1):
    try:
        p = parse_coefficients(tokens)
    except SalemFileError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if len(tokens) < minimum:
        raise argparse.ArgumentTypeError(f"need at least {minimum} coefficients")
    return p


def cmd_orders(args, out) -> int:
    cat = admissible_orders(args.rank, args.max_phi)
    desc = sorted(cat.orders, reverse=True)
    out.write(f"rank {cat.rank_budget}, max phi {cat.max_phi}: {len(desc)} admissible orders\n")
    out.write(" ".join(map(str, desc)) + "\n")
    out.write("maximal under divisibility: " + " ".join(map(str, cat.maximal)) + "\n")
    if args.explain:
        out.write("\nwitnesses:\n")
        for o in desc:
            out.write(f"{o}\t{cat.witnesses[o]}\n")
        out.write(f"\nfilter traces ({len(cat.traces)} profiles):\n")
        for t in cat.traces:
            out.write(f"{t}\n")
    return EXIT_OK


def _load_bound(text):
    if os.path.exists(text):
        polys = read_salem_file(text)
        if len(polys) != 1:
            raise ValueError(f"bound file {text} must hold exactly one polynomial, found {len(polys)}")
        return certify_salem(polys[0])
    return Fraction(text)


def cmd_enumerate(args, out) -> int:
    try:
        bound = _load_bound(args.bound)
        found = enumerate_salem(args.max_degree, bound, args.inclusive, jobs=args.jobs)
    except (ValueError, ZeroDivisionError, SalemFileError) as exc:
        print(f"bad bound: {exc}", file=sys.stderr)
        return EXIT_BAD_BOUND
    if args.out:
        write_salem_file(found, args.out)
    else:
        for s in found:
            out.write(" ".join(map(str, s.coeffs)) + "\n")
    print(f"{len(found)} Salem numbers", file=sys.stderr)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    try:
        polys = read_salem_file(args.input, reverse=args.reverse)
    except (OSError, SalemFileError) as exc:
        print(f"cannot read {args.input}: {exc}", file=sys.stderr)
        return EXIT_STRICT if args.strict else EXIT_USAGE
    certified, rejected = [], 0
    for p in polys:
        try:
            certified.append(certify_salem(p))
        except NotSalem as exc:
            rejected += 1
            print(f"warning: skipping {' '.join(map(str, p.coeffs))}: {exc}", file=sys.stderr)
    if rejected and args.strict:
        return EXIT_STRICT
    certified.sort(key=functools.cmp_to_key(compare_lambda))
    r = classify(certified)
    out.write(report(r, args.format))
    if args.format != "text":
        print("\n".join(r.summary_lines()), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    p = args.coefficients
    try:
        s = certify_salem(p)
    except NotSalem as exc:
        out.write(f"not Salem ({exc.reason}): {exc.detail}\n")
        return EXIT_NEGATIVE
    d = s.trace.degree
    out.write(f"Salem polynomial of degree {s.degree}: {s.poly}\n")
    out.write(f"trace polynomial: {s.trace.to_str('y')}\n")
    out.write(
        f"trace roots: {sturm_count(s.trace, 2, None)} in (2, oo), "
        f"{sturm_count(s.trace, -2, 2)} in (-2, 2) (expected 1 and {d - 1})\n"
    )
    out.write(f"lambda = {truncated_lambda(s)} (isolated in [{s.interval.lo}, {s.interval.hi}])\n")
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    p = args.coefficients
    image = reduce_mod2(p)
    out.write(f"mod 2: {image}\n")
    if image.degree < 1:
        out.write("1; 1 | ord(f_N)\n")
        return EXIT_OK
    fact = f2_factor(image)
    out.write(f"factors: {fact}\n")
    status = EXIT_OK
    basis = None
    if p.degree <= 10:
        m = mod2_sieve(p)
        basis = f_basis_string(m.exponents) if m.passed else None
    try:
        divisor = order_divisibility(fact)
    except ValueError as exc:
        out.write(f"no F-basis expression; {exc}\n")
        status = EXIT_NEGATIVE
    else:
        shown = basis if basis is not None else str(fact)
        out.write(f"{shown}; {divisor} | ord(f_N)\n")
    if p.degree == 10 and is_reciprocal(p):
        out.write(f"forbidden as p_M reduction: {'yes' if forbidden_pM_reduction(p) else 'no'}\n")
        out.write(f"p_M parity obstruction: {'yes' if pM_parity_obstructed(p) else 'no'}\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="enriques-salem", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("orders", help="admissible orders of f_N")
    p.add_argument("--rank", type=_rank, default=12)
    p.add_argument("--max-phi", type=_positive, default=8)
    p.add_argument("--explain", action="store_true", help="witness profiles and full filter traces")
    p.set_defaults(func=cmd_orders)

    p = sub.add_parser("enumerate", help="Salem numbers below a bound")
    p.add_argument("--max-degree", type=int, default=10, choices=(4, 6, 8, 10))
    p.add_argument("--bound", required=True, help="rational number or one-line polynomial file")
    p.add_argument("--inclusive", action="store_true")
    p.add_argument("--out")
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="mod-2 sieve and square test on a list")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("text", "tsv", "json"), default="text")
    p.add_argument("--strict", action="store_true")
    p.add_argument("--reverse", action="store_true", help="input lines are constant term first")
    p.set_defaults(func=cmd_classify)

    for name, func, minimum, helptext in (
        ("verify", cmd_verify, 5, "certify one polynomial as Salem"),
        ("reduce", cmd_reduce, 1, "mod-2 reduction and forced order divisor"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("coefficients", nargs="+", help="integers, leading coefficient first")
        p.set_defaults(func=func, minimum=minimum)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "minimum"):
        try:
            args.coefficients = _coefficients(args.coefficients, args.minimum)
        except argparse.ArgumentTypeError as exc:
            parser.error(str(exc))
    return args.func(args, out)


if __name__ == "__main__":
    sys.exit(main())
